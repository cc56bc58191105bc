// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qts/kfield.hpp"

namespace qts::oracle {

/// Classical Hilbert symbol over Q_p; p = 0 means the real place.
int hilbert_symbol_Q(const Rat& a, const Rat& b, const Int& p);

/// The enumeration below needs p odd, (D/p) = 1 and p prime to C (then the order
/// Z[sqrt D, theta] is maximal at p and K_P is Q_p or Z_p[sqrt(alpha_i)]).
bool local_oracle_applies(const FieldParams& params, const Int& p);

struct LocalSolvability {
  std::string label;  // same labels as the certificates
  bool solvable = false;
};

/// For each place above p: is x^2 + y^2 = m z^2 solvable mod p^k with (x, y, z) not all in
/// the maximal ideal? Exhaustive over the residue ring; k must exceed the local valuation of m.
std::vector<LocalSolvability> local_solvable_places(const FieldParams& params, const QuartElement& m, const Int& p,
                                                    int k);
bool local_solvable_bruteforce(const FieldParams& params, const QuartElement& m, const Int& p, int k);

struct SearchBudget {
  long coeff_bound = 4;
  std::vector<long> denominators = {1, 2};
};

/// First x (coordinates n/d, small |n| first) with M - x^2 a square in K. Works for any presentation.
std::optional<std::pair<QuartElement, QuartElement>> search_representation(const QuartElement& M,
                                                                            const SearchBudget& budget);

}  // namespace qts::oracle
