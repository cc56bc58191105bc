// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "fixtures.hpp"
#include "qts/kfield.hpp"

#include <cmath>

using namespace qts;
using qts::testing::random_element;
using qts::testing::small_fields;

namespace {

std::shared_ptr<const Presentation> radicand(long D, long a, long b) {
  return std::make_shared<const Presentation>(Presentation{D, QuadElement(a, b)});
}

long double approx(const Rat& r) { return static_cast<long double>(r.get_d()); }

// Floating evaluation of X + Y*sqrt(alpha) at the positive square roots.
long double approx_value(const FieldParams& fp, const QuartElement& m) {
  long double s = std::sqrt(static_cast<long double>(fp.D.get_d()));
  long double th = std::sqrt(static_cast<long double>(fp.A.get_d()) * (fp.D.get_d() + fp.B.get_d() * s));
  return approx(m.x1()) + approx(m.x2()) * s + (approx(m.y1()) + approx(m.y2()) * s) * th;
}

}  // namespace

TEST_CASE("parameter validation reports each failure") {
  CHECK_NOTHROW(validate_params(-1, 1, 2, 5));
  auto code = [](long A, long B, long C, long D) {
    try {
      validate_params(A, B, C, D);
    } catch (const FieldError& e) {
      return static_cast<int>(e.code());
    }
    return -1;
  };
  CHECK(code(2, 1, 2, 5) == static_cast<int>(ParamError::AEven));
  CHECK(code(9, 1, 2, 5) == static_cast<int>(ParamError::ANotSquarefree));
  CHECK(code(1, 3, 3, 18) == static_cast<int>(ParamError::DNotSquarefree));
  CHECK(code(1, 1, 1, 3) == static_cast<int>(ParamError::DNotSumOfSquares));
  CHECK(code(1, 0, 1, 1) == static_cast<int>(ParamError::BNotPositive));
  CHECK(code(1, -1, 2, 5) == static_cast<int>(ParamError::BNotPositive));
  CHECK(code(1, 1, -2, 5) == static_cast<int>(ParamError::CNotPositive));
  CHECK(code(5, 1, 2, 5) == static_cast<int>(ParamError::ANotCoprimeToD));
  CHECK(code(-15, 2, 1, 5) == static_cast<int>(ParamError::ANotCoprimeToD));
}

TEST_CASE("conductor and discriminant of known fields") {
  // quartic subfield of Q(zeta_5)
  FieldParams z5 = validate_params(-1, 2, 1, 5);
  CHECK(z5.l == 0);
  CHECK(z5.abs_disc == 125);
  CHECK(z5.conductor == 5);
  // Q(sqrt(2 + sqrt 2)), the real subfield of Q(zeta_16)
  FieldParams z16 = validate_params(1, 1, 1, 2);
  CHECK(z16.l == 3);
  CHECK(z16.abs_disc == 2048);
  CHECK(z16.conductor == 16);
  // quartic subfield of Q(zeta_13)
  FieldParams z13 = validate_params(-1, 2, 3, 13);
  CHECK(z13.abs_disc == 2197);
  FieldParams f = validate_params(1, 2, 1, 5);
  CHECK(f.l == 2);
  CHECK(f.rel_disc == RelDiscCase::FourASqrtD);
  CHECK(f.abs_disc == 16 * 125);
  FieldParams g = validate_params(1, 1, 2, 5);
  CHECK(g.l == 3);
  CHECK(g.rel_disc == RelDiscCase::EightASqrtD);
}

TEST_CASE("discriminant sweep: conductor-discriminant formula and order index") {
  for (const auto& fp : small_fields(120, 15)) {
    CAPTURE(fp.A);
    CAPTURE(fp.B);
    CAPTURE(fp.D);
    Int disc_k = mod(fp.D, 4) == 1 ? fp.D : Int(4 * fp.D);
    Int expected = fp.conductor * fp.conductor * disc_k;
    CHECK(fp.abs_disc == expected);
    // Z[sqrt D, theta] has discriminant 256 A^2 D^3 C^2; the quotient is a square index.
    Int order = 256 * fp.A * fp.A * fp.D * fp.D * fp.D * fp.C * fp.C;
    REQUIRE(mpz_divisible_p(order.get_mpz_t(), fp.abs_disc.get_mpz_t()));
    Int q = order / fp.abs_disc;
    CHECK(exact_sqrt(q).has_value());
    // the index of the order divides 16C
    Int idx = *exact_sqrt(q);
    Int c16 = 16 * fp.C;
    CHECK(mpz_divisible_p(c16.get_mpz_t(), idx.get_mpz_t()));
  }
}

TEST_CASE("quadratic arithmetic") {
  Int D = 5;
  QuadElement u(3, 1), v(Rat(1, 2), -2);
  CHECK(mul(D, u, inverse(D, u)) == QuadElement(1));
  CHECK(norm(D, mul(D, u, v)) == norm(D, u) * norm(D, v));
  CHECK(sign(D, QuadElement(-2, 1)) == 1);
  CHECK(sign(D, QuadElement(-3, 1)) == -1);
  CHECK(sign(D, QuadElement(0, -1)) == -1);
  CHECK(sign(D, QuadElement()) == 0);
  auto r = sqrt_in_k(D, mul(D, v, v));
  REQUIRE(r);
  CHECK((*r == v || *r == -v));
  CHECK_FALSE(sqrt_in_k(D, QuadElement(2)));
  CHECK(sqrt_in_k(D, QuadElement(20)) == QuadElement(0, 2));
  CHECK_THROWS_AS(inverse(D, QuadElement()), std::domain_error);
}

TEST_CASE("norm fixtures from the worked examples") {
  // Q(sqrt(-2(5 - 2 sqrt 5))): S = -19 - 11 sqrt5 + (1 - 3 sqrt5) w
  auto p11 = radicand(5, -10, 4);
  QuartElement S(p11, -19, -11, 1, -3);
  CHECK(norm_K_over_k(S) == QuadElement(1546, 174));
  CHECK(norm_K_over_Q(S) == 2238736);
  CHECK(norm_by_regular_representation(S) == 2238736);
  CHECK(Int(2238736) == 16 * 139921);
  CHECK(is_prime(139921));

  NormalizedField nf = normalize_radicand(5, QuadElement(-10, 4));
  CHECK(nf.params.A == -1);
  CHECK(nf.params.B == 1);
  CHECK(nf.params.C == 2);
  CHECK((nf.rho == QuadElement(Rat(3, 2), Rat(-1, 2)) || nf.rho == QuadElement(Rat(-3, 2), Rat(1, 2))));
  QuartElement Sn = to_normal_basis(nf, S.X(), S.Y());
  CHECK(norm_K_over_k_closed_form(nf.params, Sn) == QuadElement(1546, 174));
  CHECK(norm_K_over_Q_closed_form(nf.params, Sn) == 2238736);
  CHECK(norm_by_conjugates(nf.params, Sn) == 2238736);
  CHECK(norm_by_regular_representation(Sn) == 2238736);

  // Q(sqrt(17 - 2 sqrt17)), s = S/2
  auto p12 = radicand(17, 17, -2);
  QuartElement s12(p12, 334, -65, -1, -1);
  CHECK(norm_K_over_k(s12) == QuadElement(183143, -43418));
  CHECK(norm_K_over_Q(s12) == 1494272141);
  CHECK(norm_by_regular_representation(s12) == 1494272141);

  // Q(sqrt(-(17 - 2 sqrt17)))
  auto p13 = radicand(17, -17, 2);
  QuartElement s13(p13, -312, 63, -1, -1);
  CHECK(norm_K_over_k(s13) == QuadElement(165055, -39314));
  CHECK(norm_K_over_Q(s13) == 968112893);
  CHECK(norm_by_regular_representation(s13) == 968112893);
  CHECK(Int(968112893) == 121 * 53 * 150961);

  // these two radicands have N(alpha) = 13 * 17, so K/Q is not Galois
  CHECK_THROWS_AS(normalize_radicand(17, QuadElement(17, -2)), NormalizationFailure);
  try {
    normalize_radicand(17, QuadElement(-17, 2));
  } catch (const NormalizationFailure& e) {
    CHECK(e.code() == NormalizationError::NotCyclic);
  }
}

TEST_CASE("sigma is an automorphism of order four") {
  std::mt19937_64 rng(7);
  auto fields = small_fields(60, 7);
  for (const auto& fp : fields) {
    for (int trial = 0; trial < 6; ++trial) {
      QuartElement a = random_element(fp, rng, 20), b = random_element(fp, rng, 20);
      QuartElement sa = sigma(fp, a);
      CHECK(sigma_power(fp, a, 4) == a);
      if (!a.in_k()) CHECK_FALSE(sigma_power(fp, a, 2) == a);
      CHECK(sigma(fp, a * b) == sa * sigma(fp, b));
      CHECK(sigma(fp, a + b) == sa + sigma(fp, b));
      CHECK(a * sigma_power(fp, a, 2) == QuartElement(fp.presentation, norm_K_over_k(a), QuadElement()));
    }
    // sigma(theta)^2 = sigma(theta^2)
    QuartElement th = element(fp, 0, 0, 1, 0);
    QuartElement st = sigma(fp, th);
    CHECK(st * st == sigma(fp, th * th));
    CHECK(st * th == element(fp, 0, fp.A * fp.C, 0, 0));
  }
}

TEST_CASE("norm routes agree and are multiplicative") {
  std::mt19937_64 rng(11);
  for (const auto& fp : small_fields(60, 9)) {
    for (int trial = 0; trial < 5; ++trial) {
      QuartElement a = random_element(fp, rng, 50), b = random_element(fp, rng, 50);
      QuadElement nk = norm_K_over_k(a);
      CHECK(nk == norm_K_over_k_closed_form(fp, a));
      Rat n = norm_K_over_Q(a);
      CHECK(n == norm_K_over_Q_closed_form(fp, a));
      CHECK(n == norm_by_conjugates(fp, a));
      CHECK(n == norm_by_regular_representation(a));
      CHECK(norm_K_over_Q(a * b) == n * norm_K_over_Q(b));
    }
  }
}

TEST_CASE("embedding signs agree with floating evaluation") {
  std::mt19937_64 rng(3);
  int compared = 0;
  for (const auto& fp : small_fields(40, 7)) {
    if (!fp.totally_real()) {
      CHECK_FALSE(embedding_signs(fp, element(fp, 1, 0, 0, 0)));
      continue;
    }
    for (int trial = 0; trial < 20; ++trial) {
      QuartElement m = random_element(fp, rng, 30);
      auto signs = embedding_signs(fp, m);
      REQUIRE(signs);
      QuartElement s = m;
      for (int j = 0; j < 4; ++j) {
        long double v = approx_value(fp, s);
        if (std::fabs(v) > 1e-6) {
          CHECK((*signs)[j] == (v > 0 ? 1 : -1));
          ++compared;
        }
        s = sigma(fp, s);
      }
    }
  }
  CHECK(compared > 1000);
}

TEST_CASE("square roots in K") {
  std::mt19937_64 rng(5);
  for (const auto& fp : small_fields(30, 5)) {
    for (int trial = 0; trial < 4; ++trial) {
      QuartElement a = random_element(fp, rng, 9);
      if (a.is_zero()) continue;
      auto r = sqrt_in_K(a * a);
      REQUIRE(r);
      CHECK((*r == a || *r == -a));
    }
    CHECK_FALSE(sqrt_in_K(element(fp, 3, 0, 0, 0)));
    CHECK(sqrt_in_K(element(fp, fp.D, 0, 0, 0)));
    auto th = sqrt_in_K(QuartElement(fp.presentation, fp.presentation->alpha, QuadElement()));
    REQUIRE(th);
    CHECK(*th * *th == element(fp, fp.A * fp.D, fp.A * fp.B, 0, 0));
  }
}

TEST_CASE("radicand normalization recovers a normal form") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> dist(-6, 6);
  int done = 0;
  for (const auto& fp : small_fields(70, 11)) {
    for (int sgn : {1, -1}) {
      QuadElement rho(dist(rng), dist(rng));
      if (rho.is_zero()) continue;
      QuadElement base(Rat(fp.A * fp.D), Rat(sgn * fp.A * fp.B));
      QuadElement alpha = mul(fp.D, mul(fp.D, rho, rho), base);
      NormalizedField nf = normalize_radicand(fp.D, alpha);
      CAPTURE(to_string(alpha));
      CHECK(nf.params.D == fp.D);
      CHECK(mul(fp.D, mul(fp.D, nf.rho, nf.rho), nf.params.presentation->alpha) == alpha);
      // the rewrite is a ring map: (a + b w)(c + d w) is preserved
      auto raw = std::make_shared<const Presentation>(Presentation{fp.D, alpha});
      QuartElement u(raw, 1, 2, 3, -1), v(raw, -2, 1, 1, 1);
      QuartElement uv = u * v;
      CHECK(to_normal_basis(nf, uv.X(), uv.Y()) ==
            to_normal_basis(nf, u.X(), u.Y()) * to_normal_basis(nf, v.X(), v.Y()));
      ++done;
    }
  }
  CHECK(done > 100);
  CHECK_THROWS_AS(normalize_radicand(4, QuadElement(1, 1)), NormalizationFailure);
  CHECK_THROWS_AS(normalize_radicand(5, QuadElement(0, 0)), NormalizationFailure);
}

TEST_CASE("mixed fields are rejected") {
  FieldParams f = validate_params(-1, 1, 2, 5);
  FieldParams g = validate_params(1, 1, 2, 5);
  CHECK_THROWS_AS(element(f, 1, 0, 0, 0) * element(g, 1, 0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(sigma(f, element(g, 1, 0, 0, 1)), std::invalid_argument);
  FieldParams f2 = validate_params(-1, 1, 2, 5);
  CHECK(element(f, 1, 2, 3, 4) == element(f2, 1, 2, 3, 4));
}
