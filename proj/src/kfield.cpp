// SPDX-License-Identifier: Apache-2.0
#include "qts/kfield.hpp"

#include <sstream>
#include <vector>

namespace qts {

namespace {

int sgn(const Rat& r) { return sgn(r.get_num()); }

bool is_integer(const Rat& r) { return r.get_den() == 1; }

std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace

// ---------------------------------------------------------------- k arithmetic

QuadElement mul(const Int& D, const QuadElement& u, const QuadElement& v) {
  Rat a = u.a * v.a + Rat(D) * u.b * v.b;
  Rat b = u.a * v.b + u.b * v.a;
  return {a, b};
}

QuadElement scale(const QuadElement& u, const Rat& s) {
  Rat a = u.a * s;
  Rat b = u.b * s;
  return {a, b};
}

Rat norm(const Int& D, const QuadElement& u) {
  Rat n = u.a * u.a - Rat(D) * u.b * u.b;
  return n;
}

QuadElement inverse(const Int& D, const QuadElement& u) {
  Rat n = norm(D, u);
  if (n == 0) throw std::domain_error("inverse of zero in k");
  Rat a = u.a / n;
  Rat b = -u.b / n;
  return {a, b};
}

QuadElement divide(const Int& D, const QuadElement& u, const QuadElement& v) {
  return mul(D, u, inverse(D, v));
}

int sign(const Int& D, const QuadElement& u) {
  int sa = sgn(u.a), sb = sgn(u.b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  Rat diff = u.a * u.a - Rat(D) * u.b * u.b;
  return sgn(diff) > 0 ? sa : sb;
}

std::optional<QuadElement> sqrt_in_k(const Int& D, const QuadElement& u) {
  if (u.b == 0) {
    if (auto r = exact_sqrt(u.a)) return QuadElement(*r, 0);
    if (auto r = exact_sqrt(Rat(u.a / D))) return QuadElement(0, *r);
    return std::nullopt;
  }
  auto n = exact_sqrt(norm(D, u));
  if (!n) return std::nullopt;
  for (const Rat& cand : {Rat((u.a + *n) / 2), Rat((u.a - *n) / 2)}) {
    auto p = exact_sqrt(cand);
    if (!p || *p == 0) continue;
    QuadElement r(*p, Rat(u.b / (2 * *p)));
    if (mul(D, r, r) == u) return r;
  }
  return std::nullopt;
}

PAdicInt evaluate(const QuadElement& u, const PAdicInt& c) {
  const Int& p = c.prime();
  auto lift = [&](const Rat& r) -> PAdicInt {
    Int den = r.get_den();
    if (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t()))
      throw std::domain_error("element is not p-integral");
    PAdicInt n(p, c.precision(), Int(r.get_num()));
    return n * PAdicInt(p, c.precision(), den).inverse();
  };
  return lift(u.a) + lift(u.b) * c;
}

std::string to_string(const QuadElement& u, const std::string& root) {
  std::ostringstream os;
  os << rat_str(u.a);
  if (u.b >= 0) os << "+";
  os << rat_str(u.b) << "*" << root;
  return os.str();
}

// ---------------------------------------------------------------- parameters

std::string to_string(RelDiscCase c) {
  switch (c) {
    case RelDiscCase::FourASqrtD: return "4A*sqrtD";
    case RelDiscCase::ASqrtD: return "A*sqrtD";
    case RelDiscCase::EightASqrtD: return "8A*sqrtD";
  }
  return "?";
}

std::string to_string(ParamError e) {
  switch (e) {
    case ParamError::AEven: return "A must be odd";
    case ParamError::ANotSquarefree: return "A must be squarefree";
    case ParamError::DNotSquarefree: return "D must be squarefree";
    case ParamError::DNotSumOfSquares: return "D must equal B^2 + C^2";
    case ParamError::BNotPositive: return "B must be positive";
    case ParamError::CNotPositive: return "C must be positive";
    case ParamError::ANotCoprimeToD: return "gcd(A, D) must be 1";
  }
  return "?";
}

int conductor_exponent(const Int& A, const Int& B, const Int& D) {
  if (mod(D, 8) == 2) return 3;
  if (mod(B, 2) == 1) return 3;
  Int ab = A + B;
  return mod(ab, 4) == 3 ? 2 : 0;
}

Discriminants discriminants(const Int& A, const Int& B, const Int& D) {
  Int base = A * A * D * D * D;
  int l = conductor_exponent(A, B, D);
  if (mod(D, 8) == 2) return {RelDiscCase::FourASqrtD, base * 256};
  if (l == 3) return {RelDiscCase::EightASqrtD, base * 64};
  if (l == 2) return {RelDiscCase::FourASqrtD, base * 16};
  return {RelDiscCase::ASqrtD, base};
}

FieldParams validate_params(const Int& A, const Int& B, const Int& C, const Int& D) {
  auto fail = [](ParamError e) { throw FieldError(e, to_string(e)); };
  if (mod(A, 2) == 0) fail(ParamError::AEven);
  if (!is_squarefree(A)) fail(ParamError::ANotSquarefree);
  if (B <= 0) fail(ParamError::BNotPositive);
  if (C <= 0) fail(ParamError::CNotPositive);
  Int bc = B * B + C * C;
  if (bc != D) fail(ParamError::DNotSumOfSquares);
  if (!is_squarefree(D)) fail(ParamError::DNotSquarefree);
  Int g;
  mpz_gcd(g.get_mpz_t(), A.get_mpz_t(), D.get_mpz_t());
  if (g != 1) fail(ParamError::ANotCoprimeToD);

  FieldParams fp;
  fp.A = A;
  fp.B = B;
  fp.C = C;
  fp.D = D;
  fp.l = conductor_exponent(A, B, D);
  Int absA = abs(A);
  fp.conductor = pow_int(2, static_cast<unsigned long>(fp.l)) * absA * D;
  Discriminants d = discriminants(A, B, D);
  fp.rel_disc = d.relative;
  fp.abs_disc = d.absolute;
  fp.presentation = std::make_shared<const Presentation>(Presentation{D, QuadElement(Rat(A * D), Rat(A * B))});
  return fp;
}

// ---------------------------------------------------------------- K arithmetic

QuartElement::QuartElement(std::shared_ptr<const Presentation> field, Rat x1, Rat x2, Rat y1, Rat y2)
    : field_(std::move(field)), c_{std::move(x1), std::move(x2), std::move(y1), std::move(y2)} {
  if (!field_) throw std::invalid_argument("element without a field");
  for (auto& c : c_) c.canonicalize();  // mpq comparison assumes canonical form
}

QuartElement::QuartElement(std::shared_ptr<const Presentation> field, const QuadElement& X, const QuadElement& Y)
    : QuartElement(std::move(field), X.a, X.b, Y.a, Y.b) {}

QuartElement QuartElement::constant(std::shared_ptr<const Presentation> field, const Rat& r) {
  return QuartElement(std::move(field), r, 0, 0, 0);
}

bool QuartElement::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool QuartElement::is_integral() const {
  for (const auto& c : c_)
    if (!is_integer(c)) return false;
  return true;
}

bool QuartElement::is_primitive() const {
  if (!is_integral()) return false;
  Int g = 0;
  for (const auto& c : c_) {
    Int n = c.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  return g == 1;
}

void QuartElement::check_same(const QuartElement& o) const {
  if (field_ != o.field_ && !(*field_ == *o.field_))
    throw std::invalid_argument("elements belong to different fields");
}

QuartElement QuartElement::operator+(const QuartElement& o) const {
  check_same(o);
  QuartElement r = *this;
  for (int i = 0; i < 4; ++i) r.c_[i] += o.c_[i];
  return r;
}

QuartElement QuartElement::operator-(const QuartElement& o) const {
  check_same(o);
  QuartElement r = *this;
  for (int i = 0; i < 4; ++i) r.c_[i] -= o.c_[i];
  return r;
}

QuartElement QuartElement::operator-() const {
  QuartElement r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QuartElement QuartElement::scaled(const Rat& s) const {
  QuartElement r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

QuartElement QuartElement::operator*(const QuartElement& o) const {
  check_same(o);
  const Int& d = field_->D;
  QuadElement X = mul(d, this->X(), o.X()) + mul(d, mul(d, this->Y(), o.Y()), field_->alpha);
  QuadElement Y = mul(d, this->X(), o.Y()) + mul(d, this->Y(), o.X());
  return QuartElement(field_, X, Y);
}

bool QuartElement::operator==(const QuartElement& o) const {
  if (field_ != o.field_ && !(*field_ == *o.field_)) return false;
  return c_ == o.c_;
}

std::string to_string(const QuartElement& m) {
  std::ostringstream os;
  os << "(" << rat_str(m.x1()) << ", " << rat_str(m.x2()) << ", " << rat_str(m.y1()) << ", " << rat_str(m.y2())
     << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuartElement& m) { return os << to_string(m); }

QuartElement element(const FieldParams& params, const Rat& x1, const Rat& x2, const Rat& y1, const Rat& y2) {
  return QuartElement(params.presentation, x1, x2, y1, y2);
}

QuartElement sigma(const FieldParams& params, const QuartElement& m) {
  if (!(*m.field() == *params.presentation))
    throw std::invalid_argument("sigma: element is not in this field");
  Rat B(params.B), C(params.C), D(params.D);
  Rat y1 = (-B * m.y1() - D * m.y2()) / C;
  Rat y2 = (m.y1() + B * m.y2()) / C;
  return QuartElement(m.field(), m.x1(), -m.x2(), y1, y2);
}

QuartElement sigma_power(const FieldParams& params, const QuartElement& m, int j) {
  j = ((j % 4) + 4) % 4;
  QuartElement r = m;
  for (int i = 0; i < j; ++i) r = sigma(params, r);
  return r;
}

QuadElement norm_K_over_k(const QuartElement& m) {
  const Int& d = m.D();
  QuadElement X = m.X(), Y = m.Y();
  return mul(d, X, X) - mul(d, mul(d, Y, Y), m.field()->alpha);
}

QuadElement norm_K_over_k_closed_form(const FieldParams& params, const QuartElement& m) {
  Rat A(params.A), B(params.B), D(params.D);
  const Rat &x1 = m.x1(), &x2 = m.x2(), &y1 = m.y1(), &y2 = m.y2();
  Rat q = y1 * y1 + D * y2 * y2;
  Rat a = x1 * x1 + D * x2 * x2 - A * D * (q + 2 * B * y1 * y2);
  Rat b = 2 * x1 * x2 - 2 * A * D * y1 * y2 - A * B * q;
  return {a, b};
}

Rat norm_K_over_Q(const QuartElement& m) { return norm(m.D(), norm_K_over_k(m)); }

Rat norm_K_over_Q_closed_form(const FieldParams& params, const QuartElement& m) {
  return norm(params.D, norm_K_over_k_closed_form(params, m));
}

Rat norm_by_conjugates(const FieldParams& params, const QuartElement& m) {
  QuartElement s1 = sigma(params, m);
  QuartElement s2 = sigma(params, s1);
  QuartElement s3 = sigma(params, s2);
  QuartElement p = m * s1 * s2 * s3;
  if (p.x2() != 0 || p.y1() != 0 || p.y2() != 0)
    throw std::logic_error("product of conjugates is not rational");
  return p.x1();
}

Rat norm_by_regular_representation(const QuartElement& m) {
  const auto& f = m.field();
  std::array<QuartElement, 4> basis = {
      QuartElement(f, 1, 0, 0, 0), QuartElement(f, 0, 1, 0, 0), QuartElement(f, 0, 0, 1, 0),
      QuartElement(f, 0, 0, 0, 1)};
  std::array<std::array<Rat, 4>, 4> M;
  for (int j = 0; j < 4; ++j) {
    QuartElement col = m * basis[j];
    for (int i = 0; i < 4; ++i) M[i][j] = col.coords()[i];
  }
  Rat det = 1;
  for (int c = 0; c < 4; ++c) {
    int piv = -1;
    for (int r = c; r < 4; ++r)
      if (M[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(M[piv], M[c]);
      det = -det;
    }
    det *= M[c][c];
    for (int r = c + 1; r < 4; ++r) {
      if (M[r][c] == 0) continue;
      Rat factor = M[r][c] / M[c][c];
      for (int k = c; k < 4; ++k) M[r][k] -= factor * M[c][k];
    }
  }
  return det;
}

int real_sign(const Int& D, const QuadElement& alpha, const QuadElement& X, const QuadElement& Y) {
  int sx = sign(D, X), sy = sign(D, Y);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  QuadElement diff = mul(D, X, X) - mul(D, mul(D, Y, Y), alpha);
  return sign(D, diff) > 0 ? sx : sy;
}

std::optional<std::array<int, 4>> embedding_signs(const FieldParams& params, const QuartElement& m) {
  if (!params.totally_real()) return std::nullopt;
  std::array<int, 4> out{};
  QuartElement s = m;
  for (int j = 0; j < 4; ++j) {
    out[j] = real_sign(params.D, params.presentation->alpha, s.X(), s.Y());
    s = sigma(params, s);
  }
  return out;
}

std::optional<QuartElement> sqrt_in_K(const QuartElement& z) {
  const Int& d = z.D();
  const auto& f = z.field();
  if (z.is_zero()) return z;
  auto check = [&](const QuadElement& P, const QuadElement& Q) -> std::optional<QuartElement> {
    QuartElement r(f, P, Q);
    if (r * r == z) return r;
    return std::nullopt;
  };
  if (z.Y().is_zero()) {
    if (auto p = sqrt_in_k(d, z.X())) return check(*p, QuadElement());
    if (auto q = sqrt_in_k(d, divide(d, z.X(), f->alpha))) return check(QuadElement(), *q);
    return std::nullopt;
  }
  auto n = sqrt_in_k(d, norm_K_over_k(z));
  if (!n) return std::nullopt;
  for (const QuadElement& nn : {*n, -*n}) {
    QuadElement p2 = scale(z.X() + nn, Rat(1, 2));
    auto p = sqrt_in_k(d, p2);
    if (!p || p->is_zero()) continue;
    QuadElement q = divide(d, z.Y(), scale(*p, 2));
    if (auto r = check(*p, q)) return r;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- normalization

std::string to_string(NormalizationError e) {
  switch (e) {
    case NormalizationError::NotCyclic: return "radicand does not define a cyclic quartic field";
    case NormalizationError::NoOddPresentation: return "no normal form with odd squarefree A coprime to D";
    case NormalizationError::DNotSquarefree: return "D must be a squarefree integer > 1";
    case NormalizationError::AlphaZero: return "radicand is zero";
  }
  return "?";
}

NormalizedField normalize_radicand(const Int& D, const QuadElement& alpha) {
  auto fail = [](NormalizationError e) { throw NormalizationFailure(e, to_string(e)); };
  if (D <= 1 || !is_squarefree(D)) fail(NormalizationError::DNotSquarefree);
  if (alpha.is_zero()) fail(NormalizationError::AlphaZero);
  Rat na = norm(D, alpha);
  if (!exact_sqrt(Rat(na / D))) fail(NormalizationError::NotCyclic);

  for (Int B = 1; B * B < D; ++B) {
    Int c2 = D - B * B;
    auto C = exact_sqrt(c2);
    if (!C) continue;
    for (int s : {1, -1}) {
      QuadElement beta(Rat(D), Rat(s * B));
      QuadElement r = divide(D, alpha, beta);
      // r = t * gamma^2 with t rational
      Rat t;
      QuadElement gamma;
      if (r.b == 0) {
        t = r.a;
        gamma = QuadElement(1);
      } else {
        auto n = exact_sqrt(norm(D, r));
        if (!n) continue;
        Rat g1 = r.a + *n;
        if (g1 == 0) g1 = r.a - *n;
        gamma = QuadElement(g1, r.b);
        t = 1 / (2 * g1);
      }
      for (int withD : {0, 1}) {
        Rat tt = withD ? Rat(t / D) : t;
        Int num = tt.get_num(), den = tt.get_den();
        Int nd = num * den;
        SquarefreeDecomposition sq = squarefree_decompose(nd);
        const Int& A = sq.squarefree;
        Rat lambda(sq.square_root, den);
        lambda.canonicalize();
        FieldParams fp;
        try {
          fp = validate_params(A, B, *C, D);
        } catch (const FieldError&) {
          continue;
        }
        QuadElement rho = scale(gamma, lambda);
        if (withD) rho = mul(D, rho, QuadElement(0, 1));
        if (s < 0) rho = mul(D, rho, QuadElement(Rat(-B, *C), Rat(1, *C)));
        NormalizedField nf{fp, rho, s < 0};
        return nf;
      }
    }
  }
  fail(NormalizationError::NoOddPresentation);
  throw std::logic_error("unreachable");
}

QuartElement to_normal_basis(const NormalizedField& nf, const QuadElement& X, const QuadElement& Y) {
  return QuartElement(nf.params.presentation, X, mul(nf.params.D, Y, nf.rho));
}

}  // namespace qts
