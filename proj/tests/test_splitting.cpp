// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "fixtures.hpp"
#include "qts/splitting.hpp"

#include <map>
#include <vector>

using namespace qts;
using qts::testing::small_fields;

namespace {

using Poly = std::vector<long>;  // low degree first, monic, coefficients mod p

void trim(Poly& f) {
  while (f.size() > 1 && f.back() == 0) f.pop_back();
}

// Divides f by monic g when the remainder vanishes.
bool divide_exact(Poly& f, const Poly& g, long p) {
  Poly r = f;
  int dg = static_cast<int>(g.size()) - 1;
  int df = static_cast<int>(r.size()) - 1;
  if (df < dg) return false;
  Poly q(df - dg + 1, 0);
  for (int i = df; i >= dg; --i) {
    long c = ((r[i] % p) + p) % p;
    q[i - dg] = c;
    for (int j = 0; j <= dg; ++j) r[i - dg + j] = ((r[i - dg + j] - c * g[j]) % p + p) % p;
  }
  for (int i = 0; i < dg; ++i)
    if (r[i] % p) return false;
  f = q;
  trim(f);
  return true;
}

bool irreducible2(long a, long b, long p) {  // x^2 + b x + a
  for (long x = 0; x < p; ++x)
    if ((x * x + b * x + a) % p == 0) return false;
  return true;
}

// (g, e, f) from factoring f mod p by trial division with monic irreducibles of
// degree 1 and 2; a leftover quartic is irreducible.
DecompositionShape factor_shape(Poly f, long p) {
  std::map<std::pair<int, int>, int> counts;  // (degree, multiplicity) -> number
  for (long r = 0; r < p; ++r) {
    int mult = 0;
    while (divide_exact(f, Poly{(p - r) % p, 1}, p)) ++mult;
    if (mult) counts[{1, mult}]++;
  }
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b) {
      if (!irreducible2(a, b, p)) continue;
      int mult = 0;
      while (divide_exact(f, Poly{a, b, 1}, p)) ++mult;
      if (mult) counts[{2, mult}]++;
    }
  if (f.size() == 5) counts[{4, 1}]++;
  if (counts.size() != 1) return {0, 0, 0};
  auto [key, g] = *counts.begin();
  return {g, key.second, key.first};
}

DecompositionShape dedekind_shape(const FieldParams& fp, long p) {
  auto m = [p](const Int& v) { return mod(v, p).get_si(); };
  Poly f = {m(fp.A * fp.A * fp.D * fp.C * fp.C), 0, m(-2 * fp.A * fp.D), 0, 1};
  return factor_shape(f, p);
}

}  // namespace

TEST_CASE("odd splitting examples") {
  CHECK(classify_odd(validate_params(1, 1, 2, 5), 5).tag == SplitTag::RR);
  CHECK(classify_odd(validate_params(3, 1, 2, 5), 3).tag == SplitTag::IR);
  CHECK(classify_odd(validate_params(1, 2, 1, 5), 11).tag == SplitTag::SI);
  CHECK(classify_odd(validate_params(1, 1, 2, 5), 3).tag == SplitTag::II);
  CHECK(classify_odd(validate_params(11, 2, 1, 5), 11).tag == SplitTag::SR);
  CHECK_THROWS_AS(classify_odd(validate_params(1, 1, 2, 5), 2), std::invalid_argument);
  CHECK_THROWS_AS(classify_odd(validate_params(1, 1, 2, 5), 9), std::invalid_argument);
}

TEST_CASE("dyadic splitting examples") {
  SplittingType t17 = classify_dyadic(validate_params(1, 4, 1, 17));
  CHECK(t17.tag == SplitTag::SI);
  CHECK_FALSE(t17.single_dyadic_spot);
  CHECK(classify_dyadic(validate_params(-1, 1, 2, 5)).single_dyadic_spot);
  CHECK(classify_dyadic(validate_params(1, 1, 1, 2)).tag == SplitTag::RR);
  CHECK(classify_dyadic(validate_params(1, 1, 3, 10)).single_dyadic_spot);
  CHECK(classify_dyadic(validate_params(-1, 2, 1, 5)).tag == SplitTag::II);
  CHECK(classify_dyadic(validate_params(1, 2, 1, 5)).tag == SplitTag::IR);
  CHECK(classify_dyadic(validate_params(1, 1, 4, 17)).tag == SplitTag::SR);
  CHECK(classify_dyadic(validate_params(5, 4, 1, 17)).tag == SplitTag::SS);
}

TEST_CASE("every field and prime gets one type; ramification matches AD") {
  const long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (const auto& fp : small_fields(100, 15)) {
    for (long p : primes) {
      SplittingType t = classify_odd(fp, p);
      Int ad = fp.A * fp.D;
      bool ramified = t.tag == SplitTag::RR || t.tag == SplitTag::SR || t.tag == SplitTag::IR;
      CHECK(ramified == mpz_divisible_p(ad.get_mpz_t(), Int(p).get_mpz_t()));
      CHECK_FALSE(t.single_dyadic_spot);
    }
    SplittingType t2 = classify_dyadic(fp);
    CHECK(t2.single_dyadic_spot == (mod(fp.D, 8) != 1));
    CHECK((fp.l == 0) == (t2.tag == SplitTag::SS || t2.tag == SplitTag::SI || t2.tag == SplitTag::II));
  }
}

TEST_CASE("odd types agree with factoring the minimal polynomial of theta") {
  // Dedekind applies when p does not divide the index of Z[theta], i.e. p does not divide 2ABC.
  int checked = 0;
  std::map<SplitTag, int> seen;
  for (const auto& fp : small_fields(100, 15)) {
    for (long p : {3L, 5L, 7L, 11L, 13L}) {
      Int abc = fp.A * fp.B * fp.C;
      if (mpz_divisible_p(abc.get_mpz_t(), Int(p).get_mpz_t())) continue;
      SplitTag t = classify_odd(fp, p).tag;
      CAPTURE(fp.A);
      CAPTURE(fp.B);
      CAPTURE(fp.D);
      CAPTURE(p);
      CHECK(dedekind_shape(fp, p) == shape(t));
      seen[t]++;
      ++checked;
    }
  }
  CHECK(checked > 1000);
  CHECK(seen.size() == 4);  // RR, SS, SI, II; p | A is excluded by the index condition
}

TEST_CASE("dyadic SS/SI agrees with a brute-force square test") {
  for (const auto& fp : small_fields(300, 15)) {
    if (mod(fp.D, 8) != 1 || fp.l != 0) continue;
    long mod2 = 1L << 14;
    long d = mod(fp.D, mod2).get_si();
    long c = -1;
    for (long x = 1; x < mod2; x += 2)
      if (x * x % mod2 == d) {
        c = x;
        break;
      }
    REQUIRE(c > 0);
    long a = mod(fp.A * (fp.D + fp.B * c), 1 << 10).get_si();
    bool square = false;
    for (long x = 1; x < (1 << 10) && !square; x += 2) square = (x * x) % (1 << 10) == a;
    CHECK((classify_dyadic(fp).tag == SplitTag::SS) == square);
  }
}
