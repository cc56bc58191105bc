// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qts/kfield.hpp"
#include "qts/splitting.hpp"

namespace qts {

/// Ordered key/value pairs; kept ordered so serialized certificates are stable.
using CertData = std::vector<std::pair<std::string, std::string>>;

struct Place {
  enum class Kind { Infinite, Finite };
  Kind kind = Kind::Finite;
  Int p = 0;  // 0 at infinity
  // Finite: P11/P12/P21/P22 (SS), P1/P2 (SI, SR), P (one place). The first digit is
  // the sign of sqrt(D) -> +-c with c the canonical root, the second the sign of theta.
  // Infinite: inf0..inf3 for the embedding through sigma^j, cx0/cx1 when complex.
  std::string label;
  SplittingType type;

  bool operator==(const Place& o) const { return kind == o.kind && p == o.p && label == o.label; }
  bool operator<(const Place& o) const;
};

std::string kind_name(Place::Kind k);

struct SymbolCertificate {
  Place place;
  int value = 1;
  std::string rule;
  CertData data;
};

/// (-1, x) over Q_p for a nonzero p-adic x.
int minus_one_symbol_Qp(const PAdicInt& x);

/// m * L^2 with integer coordinates (L the lcm of the denominators); symbols do not change.
QuartElement integral_square_multiple(const QuartElement& m);

/// Exact symbols at every place above p (p prime), by evaluating the norm from
/// the completion down to Q_p. Works for any nonzero element.
std::vector<SymbolCertificate> place_symbols(const FieldParams& params, const QuartElement& m, const Int& p);
std::vector<SymbolCertificate> symbol_infinite(const FieldParams& params, const QuartElement& m);
/// Infinite places, the dyadic places, and all places above primes dividing N(m).
std::vector<SymbolCertificate> all_symbols(const FieldParams& params, const QuartElement& m);
int symbol_product(const std::vector<SymbolCertificate>& certs);

// ---- the case-by-case rules, for primitive integral m ---------------------------

/// A prediction from one of the case rules: per place when the rule gives one,
/// otherwise only whether all places above p are +1.
struct RulePrediction {
  bool applicable = true;
  std::vector<std::optional<int>> per_place;  // aligned with place_symbols order
  std::optional<bool> all_plus;
  std::string rule;
  CertData data;
};

/// p | D, p = 3 mod 4: +1 iff p | x1, p | y1, p does not divide x2.
int rr_coordinate_rule(const QuartElement& m, const Int& p);

/// Valuation parity at SS(p): for each prime p_i of k over p, v_{p_i}(m) and v_{p_i}(N_{K/k} m) even.
/// `holds_as_printed` is the three-case version keyed on p | m sigma(m), p | m sigma^-1(m); it misses
/// m divisible by one place over each p_i (lands in case C with two odd valuations).
struct ConditionMP {
  bool applicable = true;
  bool holds = false;
  bool holds_as_printed = false;
  char which = 'C';  // 'A': both m sigma(m), m sigma^-1(m) divisible by p; 'B': one; 'C': neither
  CertData data;
};
ConditionMP condition_m_p(const FieldParams& params, const QuartElement& m, const Int& p);

RulePrediction predict_RR(const FieldParams& params, const QuartElement& m, const Int& p);
RulePrediction predict_inert(const FieldParams& params, const QuartElement& m, const Int& p);
RulePrediction predict_SS(const FieldParams& params, const QuartElement& m, const Int& p);
RulePrediction predict_SI(const FieldParams& params, const QuartElement& m, const Int& p);
RulePrediction predict_SR(const FieldParams& params, const QuartElement& m, const Int& p);
RulePrediction predict_dyadic(const FieldParams& params, const QuartElement& m);
/// Dispatch on the splitting type of p.
RulePrediction predict(const FieldParams& params, const QuartElement& m, const Int& p);

/// (-1, P) at every place above the primes of P and above 2, for P a product of
/// distinct primes = 3 mod 4.
std::vector<SymbolCertificate> symbols_for_rational_P(const FieldParams& params, const Int& P);

}  // namespace qts
