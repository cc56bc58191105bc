// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "qts/localtests.hpp"

namespace qts {

/// M = lambda^2 * P * Q * m with m a primitive integer quadruple, P the product of the
/// primes = 3 mod 4 and Q of the rest (1 mod 4 or 2) of the squarefree rational content.
struct Preprocessing {
  Rat lambda;
  std::vector<Int> P;
  std::vector<Int> Q;
  QuartElement m;

  Int P_product() const;
  Int Q_product() const;
};

Preprocessing normalize(const QuartElement& M);

struct Clause {
  std::string id;  // positivity, odd-place:p, dyadic, rational-factor:p, ...
  bool holds = true;
  std::string rule;
  CertData data;
};

struct Decision {
  bool verdict = false;
  std::vector<SymbolCertificate> certificates;
  std::optional<Preprocessing> preprocessing;
  std::vector<Clause> clauses;  // every clause evaluated, passing or not
  std::vector<std::string> failed_conditions;
};

/// Decides x^2 + y^2 = M over K. The clauses follow the case rules on the primitive part
/// (twisted by (-1, P)); the certificates are the exact local symbols of M, and the two must agree.
Decision is_sum_of_two_squares(const FieldParams& params, const QuartElement& M);

/// p = 1, 2 mod 4 always; p = 3 mod 4 iff K is in neither SS(2) nor SS(p).
Decision prime_is_sum_of_two_squares(const FieldParams& params, const Int& p);

/// -1 is a sum of two squares iff A < 0 and K is not in SS(2).
Decision minus_one_is_sum_of_two_squares(const FieldParams& params);

}  // namespace qts
