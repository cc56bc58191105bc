// SPDX-License-Identifier: Apache-2.0
#include "qts/splitting.hpp"

namespace qts {

std::string to_string(SplitTag t) {
  switch (t) {
    case SplitTag::RR: return "RR";
    case SplitTag::SS: return "SS";
    case SplitTag::SI: return "SI";
    case SplitTag::SR: return "SR";
    case SplitTag::II: return "II";
    case SplitTag::IR: return "IR";
  }
  return "?";
}

DecompositionShape shape(SplitTag t) {
  switch (t) {
    case SplitTag::RR: return {1, 4, 1};
    case SplitTag::SS: return {4, 1, 1};
    case SplitTag::SI: return {2, 1, 2};
    case SplitTag::SR: return {2, 2, 1};
    case SplitTag::II: return {1, 1, 4};
    case SplitTag::IR: return {1, 2, 2};
  }
  return {0, 0, 0};
}

PAdicInt split_root(const FieldParams& params, const Int& p, int k) {
  if (p == 2) {
    if (mod(params.D, 8) != 1) throw std::invalid_argument("2 does not split in k");
    return sqrt_2adic(params.D, k);
  }
  auto c = sqrt_mod_prime_power(params.D, p, k);
  if (!c) throw std::invalid_argument("p does not split in k");
  return *c;
}

PAdicInt alpha_at_root(const FieldParams& params, const Int& p, int sign, int k) {
  for (;; k *= 2) {
    PAdicInt c = split_root(params, p, k);
    if (sign < 0) c = -c;
    PAdicInt v = PAdicInt(p, k, params.A) * (PAdicInt(p, k, params.D) + PAdicInt(p, k, params.B) * c);
    if (!v.is_zero()) return v;
    // (D + Bc)(D - Bc) = D C^2 bounds the valuation, so this terminates
    if (k > 4096) throw PrecisionError("alpha_at_root: precision exhausted");
  }
}

SplittingType classify_odd(const FieldParams& params, const Int& p) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("classify_odd needs an odd prime");
  if (mpz_divisible_p(params.D.get_mpz_t(), p.get_mpz_t())) return {SplitTag::RR};
  bool p_div_A = mpz_divisible_p(params.A.get_mpz_t(), p.get_mpz_t());
  if (jacobi(params.D, p) < 0) return {p_div_A ? SplitTag::IR : SplitTag::II};
  if (p_div_A) return {SplitTag::SR};
  PAdicInt a = alpha_at_root(params, p, 1, 4);
  int v = a.valuation();
  if (v % 2) throw std::logic_error("odd valuation of A(D+Bc) at an unramified prime");
  PAdicInt u = a.shift_down(v);
  return {jacobi(u.residue(), p) > 0 ? SplitTag::SS : SplitTag::SI};
}

SplittingType classify_dyadic(const FieldParams& params) {
  Int d8 = mod(params.D, 8);
  if (d8 == 5) return {params.l == 0 ? SplitTag::II : SplitTag::IR, true};
  if (d8 != 1) return {SplitTag::RR, true};
  if (params.l != 0) return {SplitTag::SR, false};
  PAdicInt a = alpha_at_root(params, 2, 1, 12);
  int v = a.valuation();
  PAdicInt u = a.shift_down(v);
  return {mod(u.residue(), 8) == 1 ? SplitTag::SS : SplitTag::SI, false};
}

SplittingType classify(const FieldParams& params, const Int& p) {
  return p == 2 ? classify_dyadic(params) : classify_odd(params, p);
}

}  // namespace qts
