// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "qts/numth.hpp"

#include <set>

using namespace qts;

namespace {

// Legendre/Jacobi by brute force: product over prime factors of Euler's criterion
// computed by enumerating squares.
int brute_legendre(long a, long p) {
  a = ((a % p) + p) % p;
  if (a == 0) return 0;
  for (long x = 1; x < p; ++x)
    if (x * x % p == a) return 1;
  return -1;
}

int brute_jacobi(long a, long n) {
  int r = 1;
  for (const auto& f : factorize(n).factors) {
    const long p = f.prime.get_si();
    for (int i = 0; i < f.exponent; ++i) r *= brute_legendre(a, p);
  }
  return r;
}

}  // namespace

TEST_CASE("factorize reconstructs and reports primes") {
  auto f = factorize(Int(2238736));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == PrimePower{2, 4});
  CHECK(f.factors[1] == PrimePower{139921, 1});
  CHECK(is_prime(Int(139921)));

  CHECK(factorize(1L).factors.empty());
  CHECK(factorize(1L).sign == 1);
  CHECK(factorize(Int(1494272141)).is_prime());

  auto g = factorize(Int(-968112893));
  CHECK(g.sign == -1);
  REQUIRE(g.factors.size() == 3);
  CHECK(g.factors[0] == PrimePower{11, 2});
  CHECK(g.factors[1] == PrimePower{53, 1});
  CHECK(g.factors[2] == PrimePower{150961, 1});

  CHECK_THROWS_AS(factorize(Int(0)), std::invalid_argument);
}

TEST_CASE("factorize handles products of large primes") {
  // (2^61 - 1) * 1000003 * 1000033^2 needs the rho stage.
  const Int big = (pow_int(2, 61) - 1) * Int(1000003) * Int(1000033) * Int(1000033);
  auto f = factorize(big);
  CHECK(f.value() == big);
  for (const auto& pp : f.factors) CHECK(is_prime(pp.prime));
  for (size_t i = 1; i < f.factors.size(); ++i) CHECK(f.factors[i - 1].prime < f.factors[i].prime);
  CHECK(f.factors.size() == 3);
}

TEST_CASE("factorize reconstruction sweep") {
  for (long n = -3000; n <= 3000; ++n) {
    if (n == 0) continue;
    auto f = factorize(n);
    CHECK(f.value() == n);
  }
}

TEST_CASE("jacobi examples and errors") {
  CHECK(jacobi(5, 11) == 1);
  CHECK(jacobi(0, 7) == 0);
  CHECK(jacobi(11, 17) == -1);
  CHECK_THROWS_AS(jacobi(3, 8), std::invalid_argument);
  CHECK_THROWS_AS(jacobi(3, -7), std::invalid_argument);
}

TEST_CASE("jacobi agrees with enumeration, multiplicativity and reciprocity") {
  for (long n = 3; n <= 301; n += 2)
    for (long a = -20; a <= 60; ++a) CHECK(jacobi(a, n) == brute_jacobi(a, n));

  for (long a = 3; a <= 1000; a += 2) {
    for (long n = 3; n <= 1000; n += 2) {
      Int g;
      mpz_gcd_ui(g.get_mpz_t(), Int(a).get_mpz_t(), static_cast<unsigned long>(n));
      if (g != 1) continue;
      const int sign = ((a - 1) / 2 % 2 == 1 && (n - 1) / 2 % 2 == 1) ? -1 : 1;
      if (jacobi(a, n) * jacobi(n, a) != sign) FAIL("reciprocity fails at " << a << "," << n);
    }
  }
  for (long a = 1; a <= 40; ++a)
    for (long b = 1; b <= 40; ++b)
      for (long n = 3; n <= 41; n += 2) REQUIRE(jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n));
}

TEST_CASE("valuation") {
  CHECK(valuation(Int(2), Int(2238736)) == 4);
  CHECK(valuation(Int(3), Int(1)) == 0);
  CHECK(valuation(Int(5), Rat(50, 3)) == 2);
  CHECK(valuation(Int(3), Rat(5, 18)) == -2);
  CHECK_THROWS_AS(valuation(Int(3), Rat(0)), std::invalid_argument);
}

TEST_CASE("squarefree_decompose") {
  auto d = squarefree_decompose(297);
  CHECK(d.square_root == 3);
  CHECK(d.squarefree == 33);
  d = squarefree_decompose(17);
  CHECK(d.square_root == 1);
  CHECK(d.squarefree == 17);
  d = squarefree_decompose(-50);
  CHECK(d.square_root == 5);
  CHECK(d.squarefree == -2);

  for (long n = 1; n <= 5000; ++n) {
    auto e = squarefree_decompose(n);
    CHECK(e.square_root * e.square_root * e.squarefree == n);
    const long w = e.squarefree.get_si();
    for (long q = 2; q * q <= w; ++q) REQUIRE(w % (q * q) != 0);
  }
}

TEST_CASE("sqrt_mod_prime_power") {
  auto r = sqrt_mod_prime_power(5, 11, 3);
  REQUIRE(r);
  CHECK(mod(r->residue() * r->residue() - 5, 1331) == 0);
  CHECK(mod(r->residue(), 11) == 4);

  auto one = sqrt_mod_prime_power(1, 7, 2);
  REQUIRE(one);
  CHECK(one->residue() == 48);  // least residue mod 7 is 6, the even one

  CHECK_FALSE(sqrt_mod_prime_power(3, 7, 1));
  CHECK_THROWS_AS(sqrt_mod_prime_power(14, 7, 2), std::invalid_argument);

  // Exhaustive: every unit residue mod 11^3.
  const long m = 1331;
  std::set<long> squares;
  for (long x = 1; x < m; ++x)
    if (x % 11) squares.insert(x * x % m);
  for (long a = 1; a < m; ++a) {
    if (a % 11 == 0) continue;
    auto s = sqrt_mod_prime_power(a, 11, 3);
    CHECK(static_cast<bool>(s) == (squares.count(a) == 1));
    if (s) {
      CHECK(mod(s->residue() * s->residue() - a, m) == 0);
      CHECK(mod(s->residue(), 11).get_si() % 2 == 0);
    }
  }
}

TEST_CASE("sqrt_2adic") {
  CHECK(sqrt_2adic(33, 6).residue() == 17);
  CHECK(sqrt_2adic(1, 6).residue() == 1);
  const auto r = sqrt_2adic(17, 6).residue();
  CHECK(mod(r * r - 17, 64) == 0);
  CHECK(mod(r, 4) == 1);
  // The root is a true 2-adic approximation: exhaustive over residues mod 2^10.
  for (long w = 1; w < 1024; w += 8) {
    const auto s = sqrt_2adic(w, 10).residue();
    CHECK(mod(s * s - w, 1024) == 0);
    CHECK(mod(s, 4) == 1);
    const auto t = sqrt_2adic(w, 8).residue();
    CHECK(mod(s, 256) == t);
  }
  CHECK_THROWS_AS(sqrt_2adic(5, 6), std::invalid_argument);
}

TEST_CASE("PAdicInt precision tracking") {
  PAdicInt a(3, 4, 18);
  CHECK(a.valuation() == 2);
  auto b = a.shift_down(2);
  CHECK(b.precision() == 2);
  CHECK(b.residue() == 2);
  CHECK_THROWS_AS(b.shift_down(2), std::invalid_argument);
  CHECK_THROWS_AS(PAdicInt(3, 2, 9).valuation(), PrecisionError);
  CHECK_THROWS_AS(PAdicInt(3, 1, 3).shift_down(1), PrecisionError);
  auto u = PAdicInt(7, 3, 5);
  CHECK((u * u.inverse()).residue() == 1);
}
