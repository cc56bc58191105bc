// SPDX-License-Identifier: Apache-2.0
#include "qts/oracle.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "qts/splitting.hpp"

namespace qts::oracle {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

int eps(const Int& u) { return mod(u, 4) == 3 ? 1 : 0; }            // (u - 1)/2 mod 2
int omega(const Int& u) { return (mod(u, 8) == 3 || mod(u, 8) == 5) ? 1 : 0; }  // (u^2 - 1)/8 mod 2

// p-adic valuation and unit part of an integer
std::pair<int, Int> split(const Int& n, const Int& p) {
  int v = valuation(p, n);
  return {v, Int(n / pow_int(p, static_cast<unsigned long>(v)))};
}

// Residue ring O/p^k of a place: Z/q, or Z/q[s] with s^2 = a.
struct LocalRing {
  i64 p, q, a = 0;
  int k;
  bool quadratic = false, ramified = false;

  i64 n() const { return quadratic ? q * q : q; }
  i64 enc(i64 x, i64 y) const { return quadratic ? ((x % q + q) % q) * q + (y % q + q) % q : (x % q + q) % q; }
  i64 re(i64 e) const { return quadratic ? e / q : e; }
  i64 im(i64 e) const { return quadratic ? e % q : 0; }
  i64 mul(i64 e, i64 f) const {
    i64 x = re(e), y = im(e), u = re(f), v = im(f);
    if (!quadratic) return x * u % q;
    return enc((x * u + y * v % q * a) % q, (x * v + y * u) % q);
  }
  i64 sub(i64 e, i64 f) const { return enc(re(e) - re(f), im(e) - im(f)); }
  bool unit(i64 e) const {
    i64 x = re(e), y = im(e);
    if (!quadratic || ramified) return x % p != 0;
    return ((x * x - a % p * y % p * y) % p + p) % p != 0;
  }
  i64 uniformizer() const { return ramified ? enc(0, 1) : enc(p, 0); }
  int depth() const { return ramified ? 2 * k : k; }
};

bool primitively_solvable(const LocalRing& R, i64 w) {
  const i64 n = R.n();
  std::vector<std::uint8_t> sq(n, 0);  // bit 0: a square, bit 1: square of a unit
  std::vector<i64> unit_squares, other_squares;
  for (i64 e = 0; e < n; ++e) {
    i64 s = R.mul(e, e);
    bool u = R.unit(e);
    if (!(sq[s] & 1)) (u ? unit_squares : other_squares).push_back(s);
    sq[s] |= u ? 3 : 1;
  }
  // squares of units are units, so the two lists are disjoint
  auto sum_of_two = [&](i64 t, bool need_unit) {
    for (i64 s : unit_squares)
      if (sq[R.sub(t, s)] & 1) return true;
    for (i64 s : other_squares)
      if (sq[R.sub(t, s)] & (need_unit ? 2 : 1)) return true;
    return false;
  };
  if (sum_of_two(w, false)) return true;  // z a unit
  i64 pi = R.uniformizer(), z2 = R.mul(pi, pi), t = w;
  for (int j = 1; 2 * (j - 1) <= R.depth(); ++j) {
    t = R.mul(t, z2);
    if (sum_of_two(t, true)) return true;
  }
  return false;
}

i64 to_i64(const PAdicInt& x) { return x.residue().get_si(); }

}  // namespace

int hilbert_symbol_Q(const Rat& a, const Rat& b, const Int& p) {
  if (a == 0 || b == 0) throw std::invalid_argument("Hilbert symbol of zero");
  if (p == 0) return a < 0 && b < 0 ? -1 : 1;
  // squares do not matter: clear denominators
  Int x = a.get_num() * a.get_den(), y = b.get_num() * b.get_den();
  auto [al, u] = split(x, p);
  auto [be, v] = split(y, p);
  if (p == 2) {
    int e = eps(u) * eps(v) + al * omega(v) + be * omega(u);
    return e % 2 ? -1 : 1;
  }
  int s = (al * be % 2 == 1 && mod(p, 4) == 3) ? -1 : 1;
  if (be % 2) s *= jacobi(u, p);
  if (al % 2) s *= jacobi(v, p);
  return s;
}

bool local_oracle_applies(const FieldParams& params, const Int& p) {
  return p != 2 && is_prime(p) && mod(params.C, p) != 0 && jacobi(params.D, p) == 1;
}

std::vector<LocalSolvability> local_solvable_places(const FieldParams& params, const QuartElement& m, const Int& p,
                                                    int k) {
  if (!local_oracle_applies(params, p)) throw std::invalid_argument("local oracle does not apply at this prime");
  if (m.is_zero()) throw std::invalid_argument("zero element");
  if (pow_int(p, static_cast<unsigned long>(k)) > 40000) throw std::invalid_argument("modulus too large to enumerate");
  // scale by a square to make m integral
  Int L = 1;
  for (const auto& c : m.coords()) {
    Int d = c.get_den();
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), d.get_mpz_t());
  }
  QuartElement M = m.scaled(Rat(L * L));
  LocalRing base;
  base.p = p.get_si();
  base.k = k;
  base.q = pow_int(p, static_cast<unsigned long>(k)).get_si();

  std::vector<LocalSolvability> out;
  PAdicInt c = split_root(params, p, k);
  for (int sign : {1, -1}) {
    std::string i = sign > 0 ? "1" : "2";
    PAdicInt ci = sign > 0 ? c : -c;
    PAdicInt alpha = PAdicInt(p, k, params.A) * (PAdicInt(p, k, params.D) + PAdicInt(p, k, params.B) * ci);
    i64 X = to_i64(evaluate(M.X(), ci)), Y = to_i64(evaluate(M.Y(), ci));
    i64 a = to_i64(alpha);
    if (a % base.p == 0) {  // p | A: K_P = Q_p(sqrt alpha_i), ramified
      LocalRing R = base;
      R.quadratic = R.ramified = true;
      R.a = a;
      out.push_back({"P" + i, primitively_solvable(R, R.enc(X, Y))});
    } else if (auto t = sqrt_mod_prime_power(alpha.residue(), p, k)) {
      LocalRing R = base;
      for (int ts : {1, -1}) {
        i64 w = R.enc(X + Y * ts * to_i64(*t), 0);
        out.push_back({"P" + i + (ts > 0 ? "1" : "2"), primitively_solvable(R, w)});
      }
    } else {
      LocalRing R = base;
      R.quadratic = true;
      R.a = a;
      out.push_back({"P" + i, primitively_solvable(R, R.enc(X, Y))});
    }
  }
  return out;
}

bool local_solvable_bruteforce(const FieldParams& params, const QuartElement& m, const Int& p, int k) {
  for (const auto& s : local_solvable_places(params, m, p, k))
    if (!s.solvable) return false;
  return true;
}

namespace {

// Coordinates in the order 0, 1, -1, 2, -2, ...
std::vector<long> small_first(long bound) {
  std::vector<long> v = {0};
  for (long i = 1; i <= bound; ++i) {
    v.push_back(i);
    v.push_back(-i);
  }
  return v;
}

bool fits(const Rat& r, long lim) { return r.get_den() == 1 && abs(r.get_num()) < lim; }

i128 isqrt128(i128 n) {
  if (n < 0) return -1;
  i128 r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

std::optional<std::pair<QuartElement, QuartElement>> search_representation(const QuartElement& M,
                                                                            const SearchBudget& budget) {
  if (M.is_zero()) return std::make_pair(M, M);
  const auto& field = M.field();
  const QuadElement& al = field->alpha;
  // 128-bit headroom: field data below 2^10, M below 2^20, coordinates below 32
  const long lim_field = 1L << 10, lim_m = 1L << 20;
  std::vector<long> vals = small_first(budget.coeff_bound);
  for (long d : budget.denominators) {
    QuartElement Md = M.scaled(Rat(d * d));
    // fast filter in 128-bit integers: N_{K/Q}(M d^2 - x^2) must be a rational square
    bool fast = fits(al.a, lim_field) && fits(al.b, lim_field) && field->D < lim_field && budget.coeff_bound < 32;
    for (const auto& c : Md.coords()) fast = fast && fits(c, lim_m);
    i128 D = field->D.get_si(), a0 = 0, a1 = 0, m0 = 0, m1 = 0, m2 = 0, m3 = 0;
    if (fast) {
      a0 = al.a.get_num().get_si();
      a1 = al.b.get_num().get_si();
      m0 = Md.x1().get_num().get_si();
      m1 = Md.x2().get_num().get_si();
      m2 = Md.y1().get_num().get_si();
      m3 = Md.y2().get_num().get_si();
    }
    for (long x1 : vals)
      for (long x2 : vals)
        for (long y1 : vals)
          for (long y2 : vals) {
            if (fast) {
              // x^2 = (x1 + x2 r)^2 + (y1 + y2 r)^2 alpha + 2 (x1 + x2 r)(y1 + y2 r) w, r = sqrt D
              i128 X0 = i128(x1) * x1 + i128(x2) * x2 * D, X1 = 2 * i128(x1) * x2;
              i128 Y0 = i128(y1) * y1 + i128(y2) * y2 * D, Y1 = 2 * i128(y1) * y2;
              i128 sx0 = X0 + Y0 * a0 + Y1 * a1 * D, sx1 = X1 + Y0 * a1 + Y1 * a0;
              i128 sy0 = 2 * (i128(x1) * y1 + i128(x2) * y2 * D), sy1 = 2 * (i128(x1) * y2 + i128(x2) * y1);
              i128 z0 = m0 - sx0, z1 = m1 - sx1, w0 = m2 - sy0, w1 = m3 - sy1;
              // N_{K/k} = Z^2 - W^2 alpha
              i128 W0 = w0 * w0 + w1 * w1 * D, W1 = 2 * w0 * w1;
              i128 n0 = z0 * z0 + z1 * z1 * D - (W0 * a0 + W1 * a1 * D);
              i128 n1 = 2 * z0 * z1 - (W0 * a1 + W1 * a0);
              // N_{k/Q} = n0^2 - D n1^2; guard against overflow before squaring
              const i128 cap = (i128(1) << 60);
              if (n0 > cap || n0 < -cap || n1 > cap || n1 < -cap) {
                // fall through to the exact check
              } else {
                i128 N = n0 * n0 - D * n1 * n1;
                i128 r = isqrt128(N);
                if (r < 0 || r * r != N) continue;
              }
            }
            QuartElement x(field, Rat(x1, d), Rat(x2, d), Rat(y1, d), Rat(y2, d));
            if (auto y = sqrt_in_K(M - x * x)) return std::make_pair(x, *y);
          }
  }
  return std::nullopt;
}

}  // namespace qts::oracle
