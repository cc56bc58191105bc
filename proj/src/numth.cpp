// SPDX-License-Identifier: Apache-2.0
#include "qts/numth.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>

namespace qts {
namespace {

constexpr unsigned long kTrialLimit = 1000000;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool miller_rabin_round(const Int& n, const Int& d, unsigned s, const Int& a) {
  Int x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Int nm1 = n - 1;
  if (x == 1 || x == nm1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == nm1) return true;
  }
  return false;
}

Int pollard_brent(const Int& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Int y = 2, x, g = 1, q = 1, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](const Int& v) -> Int { return (v * v + c) % n; };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Int diff = x - y;
          q = q * abs(diff) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Int diff = x - ys;
        diff = abs(diff);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Int& n, std::map<Int, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Int d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Int d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  // These witnesses are deterministic below 3.3e24.
  for (unsigned long a : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul}) {
    if (n <= a) break;
    if (!miller_rabin_round(n, d, s, Int(a))) return false;
  }
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 81) return true;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Int Factorization::value() const {
  Int v = sign;
  for (const auto& f : factors) v *= pow_int(f.prime, static_cast<unsigned long>(f.exponent));
  return v;
}

Factorization factorize(const Int& n) {
  if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
  Factorization out;
  out.sign = n < 0 ? -1 : 1;
  Int m = abs(n);
  for (unsigned long p : small_primes()) {
    if (Int(p) * p > m) break;
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) out.factors.push_back({Int(p), e});
  }
  if (m > 1) {
    std::map<Int, int> rest;
    factor_into(m, rest);
    for (auto& [p, e] : rest) out.factors.push_back({p, e});
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return out;
}

Factorization factorize(long n) { return factorize(Int(n)); }

int jacobi(const Int& a, const Int& n) {
  if (n <= 0 || mpz_even_p(n.get_mpz_t()))
    throw std::invalid_argument("jacobi: modulus must be odd and positive");
  return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

int valuation(const Int& p, const Int& n) {
  if (n == 0) throw std::invalid_argument("valuation: zero has infinite valuation");
  Int m = n;
  int v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

int valuation(const Int& p, const Rat& q) {
  if (q == 0) throw std::invalid_argument("valuation: zero has infinite valuation");
  return valuation(p, Int(q.get_num())) - valuation(p, Int(q.get_den()));
}

Int remove_factor(const Int& p, const Int& n) {
  if (n == 0) throw std::invalid_argument("remove_factor: zero");
  Int m = n;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
  return m;
}

SquarefreeDecomposition squarefree_decompose(const Int& n) {
  const Factorization f = factorize(n);
  SquarefreeDecomposition out{1, f.sign};
  for (const auto& pp : f.factors) {
    out.square_root *= pow_int(pp.prime, static_cast<unsigned long>(pp.exponent / 2));
    if (pp.exponent % 2) out.squarefree *= pp.prime;
  }
  return out;
}

bool is_squarefree(const Int& n) {
  if (n == 0) return false;
  return squarefree_decompose(n).square_root == 1;
}

std::optional<Int> exact_sqrt(const Int& n) {
  if (n < 0) return std::nullopt;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Rat> exact_sqrt(const Rat& q) {
  auto num = exact_sqrt(Int(q.get_num()));
  if (!num) return std::nullopt;
  auto den = exact_sqrt(Int(q.get_den()));
  if (!den) return std::nullopt;
  Rat r(*num, *den);
  r.canonicalize();
  return r;
}

// ---- PAdicInt -------------------------------------------------------------

PAdicInt::PAdicInt(Int prime, int precision, const Int& value)
    : prime_(std::move(prime)), precision_(precision) {
  if (precision_ < 1) throw PrecisionError("p-adic precision dropped below 1");
  residue_ = mod(value, modulus());
}

Int PAdicInt::modulus() const { return pow_int(prime_, static_cast<unsigned long>(precision_)); }

int PAdicInt::valuation() const {
  if (residue_ == 0) throw PrecisionError("p-adic value vanishes at the carried precision");
  return qts::valuation(prime_, residue_);
}

bool PAdicInt::is_unit() const { return !mpz_divisible_p(residue_.get_mpz_t(), prime_.get_mpz_t()); }

PAdicInt PAdicInt::operator+(const PAdicInt& o) const {
  return {prime_, std::min(precision_, o.precision_), residue_ + o.residue_};
}
PAdicInt PAdicInt::operator-(const PAdicInt& o) const {
  return {prime_, std::min(precision_, o.precision_), residue_ - o.residue_};
}
PAdicInt PAdicInt::operator*(const PAdicInt& o) const {
  return {prime_, std::min(precision_, o.precision_), residue_ * o.residue_};
}
PAdicInt PAdicInt::operator-() const { return {prime_, precision_, -residue_}; }

PAdicInt PAdicInt::inverse() const {
  if (!is_unit()) throw std::invalid_argument("PAdicInt::inverse: not a unit");
  Int inv;
  const Int m = modulus();
  mpz_invert(inv.get_mpz_t(), residue_.get_mpz_t(), m.get_mpz_t());
  return {prime_, precision_, inv};
}

PAdicInt PAdicInt::shift_down(int e) const {
  const Int pe = pow_int(prime_, static_cast<unsigned long>(e));
  if (!mpz_divisible_p(residue_.get_mpz_t(), pe.get_mpz_t()))
    throw std::invalid_argument("PAdicInt::shift_down: not divisible");
  return {prime_, precision_ - e, residue_ / pe};
}

PAdicInt PAdicInt::with_precision(int k) const {
  if (k > precision_) throw PrecisionError("cannot raise precision of a truncated value");
  return {prime_, k, residue_};
}

// ---- square roots ---------------------------------------------------------

std::optional<PAdicInt> sqrt_mod_prime_power(const Int& a, const Int& p, int k) {
  if (p == 2 || mpz_even_p(p.get_mpz_t())) throw std::invalid_argument("sqrt_mod_prime_power: p must be odd");
  if (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t()))
    throw std::invalid_argument("sqrt_mod_prime_power: p divides a");
  if (k < 1) throw PrecisionError("sqrt_mod_prime_power: precision below 1");
  const Int ap = mod(a, p);
  if (jacobi(ap, p) != 1) return std::nullopt;

  // Tonelli-Shanks mod p.
  Int q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  Int z = 2;
  while (jacobi(z, p) != -1) ++z;
  auto powm = [&](const Int& b, const Int& e) {
    Int r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return r;
  };
  Int c = powm(z, q);
  Int x = powm(ap, (q + 1) / 2);
  Int t = powm(ap, q);
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    Int tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    Int b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % p;
    x = x * b % p;
    c = b * b % p;
    t = t * c % p;
    m = i;
  }
  if (mpz_odd_p(x.get_mpz_t())) x = p - x;

  // Hensel lift: x <- x - (x^2 - a) / (2x).
  Int pk = p;
  for (int j = 1; j < k; ++j) {
    pk *= p;
    Int inv;
    Int twox = 2 * x;
    mpz_invert(inv.get_mpz_t(), twox.get_mpz_t(), pk.get_mpz_t());
    x = mod(x - (x * x - a) * inv, pk);
  }
  return PAdicInt(p, k, x);
}

PAdicInt sqrt_2adic(const Int& w, int k) {
  if (mod(w, 8) != 1) throw std::invalid_argument("sqrt_2adic: w must be 1 mod 8");
  if (k < 1) throw PrecisionError("sqrt_2adic: precision below 1");
  // Invariant: r*r = w mod 2^j.
  Int r = 1;
  for (int j = 3; j <= k + 1; ++j) {
    const Int next = pow_int(2, static_cast<unsigned long>(j + 1));
    if (mod(r * r - w, next) != 0) r += pow_int(2, static_cast<unsigned long>(j - 1));
  }
  const Int modk = pow_int(2, static_cast<unsigned long>(k));
  r = mod(r, modk);
  if (mod(r, 4) == 3) r = mod(-r, modk);
  return PAdicInt(2, k, r);
}

int default_precision() {
  if (const char* env = std::getenv("QTS_PRECISION")) {
    const int v = std::atoi(env);
    if (v >= 4) return v;
  }
  return 10;
}

}  // namespace qts
