// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <memory>
#include <optional>
#include <ostream>
#include <string>

#include "qts/numth.hpp"

namespace qts {

/// Element a + b*sqrt(D) of the quadratic field k = Q(sqrt D).
struct QuadElement {
  Rat a;
  Rat b;

  QuadElement() = default;
  QuadElement(Rat a_, Rat b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}
  QuadElement(long a_) : a(a_), b(0) {}

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }
  bool operator==(const QuadElement&) const = default;
  QuadElement conj() const { return {a, -b}; }
  QuadElement operator-() const { return {-a, -b}; }
  QuadElement operator+(const QuadElement& o) const { return {a + o.a, b + o.b}; }
  QuadElement operator-(const QuadElement& o) const { return {a - o.a, b - o.b}; }
};

/// Arithmetic in k needs D, so the multiplicative operations take it explicitly.
QuadElement mul(const Int& D, const QuadElement& u, const QuadElement& v);
QuadElement scale(const QuadElement& u, const Rat& s);
QuadElement inverse(const Int& D, const QuadElement& u);
QuadElement divide(const Int& D, const QuadElement& u, const QuadElement& v);
Rat norm(const Int& D, const QuadElement& u);
/// Exact sign of a + b*sqrt(D) for the positive real square root.
int sign(const Int& D, const QuadElement& u);
std::optional<QuadElement> sqrt_in_k(const Int& D, const QuadElement& u);
/// Evaluate at sqrt(D) -> c in Z/p^k (the element must be p-integral).
PAdicInt evaluate(const QuadElement& u, const PAdicInt& c);
std::string to_string(const QuadElement& u, const std::string& root = "sqrtD");

/// K = k(w) with w^2 = alpha; alpha need not be in the cyclic normal form.
struct Presentation {
  Int D;
  QuadElement alpha;
  bool operator==(const Presentation&) const = default;
};

enum class RelDiscCase { FourASqrtD, ASqrtD, EightASqrtD };
std::string to_string(RelDiscCase c);

/// Validated cyclic quartic data: theta^2 = A(D + B sqrt D), D = B^2 + C^2.
struct FieldParams {
  Int A, B, C, D;
  int l = 0;
  Int conductor;
  RelDiscCase rel_disc = RelDiscCase::ASqrtD;
  Int abs_disc;
  std::shared_ptr<const Presentation> presentation;

  bool totally_real() const { return A > 0; }
  QuadElement theta_squared() const { return presentation->alpha; }
};

enum class ParamError {
  AEven,
  ANotSquarefree,
  DNotSquarefree,
  DNotSumOfSquares,
  BNotPositive,
  CNotPositive,
  ANotCoprimeToD,
};
std::string to_string(ParamError e);

class FieldError : public std::invalid_argument {
 public:
  FieldError(ParamError code, const std::string& what) : std::invalid_argument(what), code_(code) {}
  ParamError code() const { return code_; }

 private:
  ParamError code_;
};

FieldParams validate_params(const Int& A, const Int& B, const Int& C, const Int& D);
int conductor_exponent(const Int& A, const Int& B, const Int& D);

struct Discriminants {
  RelDiscCase relative;
  Int absolute;
};
Discriminants discriminants(const Int& A, const Int& B, const Int& D);

/// x1 + x2 sqrt(D) + (y1 + y2 sqrt(D)) w, with w^2 = alpha of the presentation.
class QuartElement {
 public:
  QuartElement() = default;
  QuartElement(std::shared_ptr<const Presentation> field, Rat x1, Rat x2, Rat y1, Rat y2);
  QuartElement(std::shared_ptr<const Presentation> field, const QuadElement& X, const QuadElement& Y);
  static QuartElement constant(std::shared_ptr<const Presentation> field, const Rat& r);

  const Rat& x1() const { return c_[0]; }
  const Rat& x2() const { return c_[1]; }
  const Rat& y1() const { return c_[2]; }
  const Rat& y2() const { return c_[3]; }
  const std::array<Rat, 4>& coords() const { return c_; }
  QuadElement X() const { return {c_[0], c_[1]}; }
  QuadElement Y() const { return {c_[2], c_[3]}; }
  const Int& D() const { return field_->D; }
  const std::shared_ptr<const Presentation>& field() const { return field_; }

  bool is_zero() const;
  bool in_k() const { return c_[2] == 0 && c_[3] == 0; }
  bool is_integral() const;
  /// Integer coordinates with gcd 1.
  bool is_primitive() const;

  QuartElement operator+(const QuartElement& o) const;
  QuartElement operator-(const QuartElement& o) const;
  QuartElement operator*(const QuartElement& o) const;
  QuartElement operator-() const;
  QuartElement scaled(const Rat& s) const;
  bool operator==(const QuartElement& o) const;

 private:
  void check_same(const QuartElement& o) const;
  std::shared_ptr<const Presentation> field_;
  std::array<Rat, 4> c_;
};

std::string to_string(const QuartElement& m);
std::ostream& operator<<(std::ostream& os, const QuartElement& m);

QuartElement element(const FieldParams& params, const Rat& x1, const Rat& x2, const Rat& y1, const Rat& y2);

/// Generator of Gal(K/Q): sqrt D -> -sqrt D, theta -> ((sqrt D - B)/C) theta.
QuartElement sigma(const FieldParams& params, const QuartElement& m);
QuartElement sigma_power(const FieldParams& params, const QuartElement& m, int j);

/// N_{K/k}(m) = X^2 - Y^2 alpha.
QuadElement norm_K_over_k(const QuartElement& m);
/// Same norm from the expanded coefficient formula in x1, x2, y1, y2.
QuadElement norm_K_over_k_closed_form(const FieldParams& params, const QuartElement& m);
Rat norm_K_over_Q(const QuartElement& m);
Rat norm_K_over_Q_closed_form(const FieldParams& params, const QuartElement& m);
/// m * sigma(m) * sigma^2(m) * sigma^3(m); must land in Q.
Rat norm_by_conjugates(const FieldParams& params, const QuartElement& m);
/// Determinant of multiplication by m on the basis {1, sqrtD, w, sqrtD w}.
Rat norm_by_regular_representation(const QuartElement& m);

/// Signs of m, sigma m, sigma^2 m, sigma^3 m under the embedding with sqrt D > 0,
/// theta > 0. Empty when A < 0 (no real embeddings).
std::optional<std::array<int, 4>> embedding_signs(const FieldParams& params, const QuartElement& m);
/// Exact sign of X + Y w at sqrt D > 0, w = +sqrt(alpha) > 0 (alpha must be positive there).
int real_sign(const Int& D, const QuadElement& alpha, const QuadElement& X, const QuadElement& Y);

std::optional<QuartElement> sqrt_in_K(const QuartElement& z);

/// A raw radicand rewritten in cyclic normal form: sqrt(alpha) = rho * theta.
struct NormalizedField {
  FieldParams params;
  QuadElement rho;
  bool conjugate_form = false;  // alpha was matched against A(D - B sqrt D)
};

enum class NormalizationError { NotCyclic, NoOddPresentation, DNotSquarefree, AlphaZero };
std::string to_string(NormalizationError e);

class NormalizationFailure : public std::runtime_error {
 public:
  NormalizationFailure(NormalizationError code, const std::string& what) : std::runtime_error(what), code_(code) {}
  NormalizationError code() const { return code_; }

 private:
  NormalizationError code_;
};

NormalizedField normalize_radicand(const Int& D, const QuadElement& alpha);
/// Rewrites X + Y sqrt(alpha) in the theta basis of the normalized field.
QuartElement to_normal_basis(const NormalizedField& nf, const QuadElement& X, const QuadElement& Y);

}  // namespace qts
