// SPDX-License-Identifier: Apache-2.0
#include "qts/dyadic.hpp"

#include <algorithm>
#include <stdexcept>

namespace qts::dyadic {

namespace {

Int two_pow(int k) { return pow_int(2, static_cast<unsigned long>(k)); }

Int reduce(const Int& x, int k) { return mod(x, two_pow(k)); }

struct Uniformizer {
  long a, b;  // a + b sqrt(c)
};

Uniformizer uniformizer_coords(int c) {
  switch (c) {
    case 2: return {0, 1};
    case 3: return {-1, 1};
    case 6: return {0, 1};
    case 7: return {3, -1};
    case 10: return {0, 1};
    case 11: return {-3, 1};
    case 14: return {4, -1};
    case 5: return {2, 0};
  }
  throw std::invalid_argument("unknown dyadic label");
}

// Second class of unit squares modulo 4*pi, besides 1; coordinates a + b sqrt(c).
Uniformizer second_square_class(int c) {
  switch (c) {
    case 2: return {3, 2};
    case 3: return {3, 0};
    case 6: return {7, 2};
    case 7: return {-1, 0};
    case 10: return {3, 2};
    case 11: return {3, 0};
    case 14: return {15, 2};
  }
  throw std::invalid_argument("no square class list for this label");
}

}  // namespace

bool is_label(int c) { return std::find(kLabels.begin(), kLabels.end(), c) != kLabels.end(); }

const std::array<ETableEntry, 32>& e_table() {
  static const std::array<ETableEntry, 32> table = {{
      {1, 1},    {9, 3},    {25, 5},   {49, 7},   {81, 9},   {121, 11}, {169, 13}, {225, 15},
      {33, 17},  {105, 19}, {185, 21}, {17, 23},  {113, 25}, {217, 27}, {73, 29},  {193, 31},
      {65, 33},  {201, 35}, {89, 37},  {241, 39}, {145, 41}, {57, 43},  {233, 45}, {161, 47},
      {97, 49},  {41, 51},  {249, 53}, {209, 55}, {177, 57}, {153, 59}, {137, 61}, {129, 63},
  }};
  return table;
}

Int e_of(const Int& w) {
  if (w == 0) throw std::invalid_argument("e_of: zero");
  SquarefreeDecomposition sq = squarefree_decompose(w);
  if (mod(sq.squarefree, 8) != 1) throw std::invalid_argument("e_of: squarefree part is not 1 mod 8");
  long key = mod(sq.squarefree, 256).get_si();
  for (const auto& row : e_table())
    if (row.residue_class == key) return sq.square_root * row.e_value;
  throw std::logic_error("e_of: table is missing a residue class");
}

// ---------------------------------------------------------------- Q_2(sqrt c)

DyadicQuadElement::DyadicQuadElement(int c, const Int& u, const Int& v, int k) : c_(c), k_(k) {
  if (!is_label(c)) throw std::invalid_argument("unknown dyadic label");
  if (k < 1) throw PrecisionError("dyadic precision dropped below 1");
  u_ = reduce(u, k);
  v_ = reduce(v, k);
}

DyadicQuadElement DyadicQuadElement::from_sqrt_coords(int c, const Int& a, const Int& b, int k) {
  if (c == 5) {
    Int u = a - b;
    Int v = 2 * b;
    return DyadicQuadElement(c, u, v, k);
  }
  return DyadicQuadElement(c, a, b, k);
}

void DyadicQuadElement::check(const DyadicQuadElement& o) const {
  if (c_ != o.c_) throw std::invalid_argument("dyadic elements of different fields");
}

DyadicQuadElement DyadicQuadElement::operator+(const DyadicQuadElement& o) const {
  check(o);
  Int u = u_ + o.u_, v = v_ + o.v_;
  return DyadicQuadElement(c_, u, v, std::min(k_, o.k_));
}

DyadicQuadElement DyadicQuadElement::operator-(const DyadicQuadElement& o) const {
  check(o);
  Int u = u_ - o.u_, v = v_ - o.v_;
  return DyadicQuadElement(c_, u, v, std::min(k_, o.k_));
}

DyadicQuadElement DyadicQuadElement::operator-() const {
  Int u = -u_, v = -v_;
  return DyadicQuadElement(c_, u, v, k_);
}

DyadicQuadElement DyadicQuadElement::operator*(const DyadicQuadElement& o) const {
  check(o);
  Int u, v;
  if (c_ == 5) {  // omega^2 = omega + 1
    Int bb = v_ * o.v_;
    u = u_ * o.u_ + bb;
    v = u_ * o.v_ + v_ * o.u_ + bb;
  } else {
    u = u_ * o.u_ + c_ * v_ * o.v_;
    v = u_ * o.v_ + v_ * o.u_;
  }
  return DyadicQuadElement(c_, u, v, std::min(k_, o.k_));
}

bool DyadicQuadElement::operator==(const DyadicQuadElement& o) const {
  return c_ == o.c_ && k_ == o.k_ && u_ == o.u_ && v_ == o.v_;
}

DyadicQuadElement DyadicQuadElement::conj() const {
  if (c_ == 5) {
    Int u = u_ + v_, v = -v_;
    return DyadicQuadElement(c_, u, v, k_);
  }
  Int v = -v_;
  return DyadicQuadElement(c_, u_, v, k_);
}

DyadicQuadElement DyadicQuadElement::with_precision(int k) const {
  if (k > k_) throw PrecisionError("cannot raise precision of a truncated value");
  return DyadicQuadElement(c_, u_, v_, k);
}

PAdicInt DyadicQuadElement::norm() const {
  Int n;
  if (c_ == 5)
    n = u_ * u_ + u_ * v_ - v_ * v_;
  else
    n = u_ * u_ - c_ * v_ * v_;
  return PAdicInt(2, k_, n);
}

int DyadicQuadElement::valuation() const {
  if (c_ == 5) {
    if (is_zero()) throw PrecisionError("dyadic value vanishes at the carried precision");
    int a = u_ == 0 ? k_ : qts::valuation(2, u_);
    int b = v_ == 0 ? k_ : qts::valuation(2, v_);
    return std::min(a, b);
  }
  // totally ramified of degree 2: v_pi = v_2(norm)
  return norm().valuation();
}

DyadicQuadElement uniformizer(int c, int k) {
  Uniformizer p = uniformizer_coords(c);
  return DyadicQuadElement::from_sqrt_coords(c, p.a, p.b, k);
}

DyadicQuadElement DyadicQuadElement::divide_by_uniformizer(int n) const {
  if (n == 0) return *this;
  if (n < 0) throw std::invalid_argument("negative uniformizer power");
  if (c_ == 5) {
    Int d = two_pow(n);
    if (!mpz_divisible_p(u_.get_mpz_t(), d.get_mpz_t()) || !mpz_divisible_p(v_.get_mpz_t(), d.get_mpz_t()))
      throw std::invalid_argument("not divisible by the uniformizer power");
    Int u = u_ / d, v = v_ / d;
    return DyadicQuadElement(c_, u, v, k_ - n);
  }
  // x / pi = x * conj(pi) / N(pi) with N(pi) = 2 * eta, eta odd
  DyadicQuadElement pi = uniformizer(c_, k_);
  PAdicInt npi = pi.norm();
  PAdicInt eta_inv = npi.shift_down(1).inverse();
  DyadicQuadElement x = *this;
  for (int i = 0; i < n; ++i) {
    DyadicQuadElement y = x * pi.conj().with_precision(x.k_);
    if (mpz_odd_p(y.u_.get_mpz_t()) || mpz_odd_p(y.v_.get_mpz_t()))
      throw std::invalid_argument("not divisible by the uniformizer power");
    PAdicInt e = eta_inv.with_precision(y.k_ - 1);
    Int u = (y.u_ / 2) * e.residue();
    Int v = (y.v_ / 2) * e.residue();
    x = DyadicQuadElement(c_, u, v, y.k_ - 1);
  }
  return x;
}

DyadicQuadElement e5_of(const Int& N, int k) {
  if (N == 0) throw std::invalid_argument("e5_of: zero");
  SquarefreeDecomposition sq = squarefree_decompose(N);
  if (mod(sq.squarefree, 8) != 5) throw std::invalid_argument("e5_of: squarefree part is not 5 mod 8");
  long f;
  switch (mod(sq.squarefree, 32).get_si()) {
    case 5: f = 1; break;
    case 13: f = 1 + 4 + 8; break;
    case 21: f = 1 + 8; break;
    default: f = 1 + 4; break;  // 29
  }
  Int b = sq.square_root * f;
  return DyadicQuadElement::from_sqrt_coords(5, 0, b, k);
}

std::vector<DyadicQuadElement> unit_square_classes(int c, int k) {
  if (c == 5) {
    // 1, (3 + sqrt5)/2 = 1 + omega, (3 - sqrt5)/2 = 2 - omega
    return {DyadicQuadElement(5, 1, 0, k), DyadicQuadElement(5, 1, 1, k), DyadicQuadElement(5, 2, -1, k)};
  }
  Uniformizer s = second_square_class(c);
  return {DyadicQuadElement(c, 1, 0, k), DyadicQuadElement::from_sqrt_coords(c, s.a, s.b, k)};
}

bool is_square(const DyadicQuadElement& t) {
  const int c = t.label();
  const int v = t.valuation();
  if (v % 2) return false;
  DyadicQuadElement r = t.divide_by_uniformizer(v);
  if (c == 5) {
    // squares of units are determined mod 8 by the root mod 4
    if (r.precision() < 3) throw PrecisionError("is_square: need the unit mod 8");
    DyadicQuadElement r8 = r.with_precision(3);
    for (long a = 0; a < 4; ++a)
      for (long b = 0; b < 4; ++b) {
        DyadicQuadElement q(5, a, b, 3);
        if (!q.norm().is_unit()) continue;
        if (q * q == r8) return true;
      }
    return false;
  }
  // 1 + 4*pi*O is inside the squares; there are two unit square classes modulo 4*pi
  if (r.precision() < 5) throw PrecisionError("is_square: need the unit mod 4*pi");
  for (const auto& s : unit_square_classes(c, r.precision())) {
    DyadicQuadElement d = r - s;
    if (d.is_zero() || d.norm().is_zero() || d.valuation() >= 5) return true;
  }
  return false;
}

bool unit_is_sum_two_squares(const DyadicQuadElement& h) {
  if (h.precision() < 2) throw PrecisionError("unit test needs precision >= 2");
  if (!h.is_unit()) throw std::invalid_argument("unit_is_sum_two_squares: not a unit");
  return mod(h.norm().residue(), 4) == 1;
}

bool unit_rule_as_printed(const DyadicQuadElement& h) {
  if (h.precision() < 2) throw PrecisionError("unit test needs precision >= 2");
  if (!h.is_unit()) throw std::invalid_argument("unit_rule_as_printed: not a unit");
  if (h.label() != 5) return mpz_odd_p(h.u().get_mpz_t()) && mpz_even_p(h.v().get_mpz_t());
  DyadicQuadElement h4 = h.with_precision(2);
  static const long classes[6][2] = {{1, 0}, {3, 0}, {1, 1}, {2, 3}, {2, 1}, {3, 3}};
  for (const auto& cl : classes)
    if (h4 == DyadicQuadElement(5, cl[0], cl[1], 2)) return true;
  return false;
}

int minus_one_symbol_Q2(const PAdicInt& x) {
  if (x.prime() != 2) throw std::invalid_argument("minus_one_symbol_Q2: not a 2-adic value");
  int v = x.valuation();
  if (x.precision() < v + 2) throw PrecisionError("minus_one_symbol_Q2: need two digits past the valuation");
  return mod(x.shift_down(v).residue(), 4) == 1 ? 1 : -1;
}

int minus_one_symbol_Q2(const Rat& x) {
  if (x == 0) throw std::invalid_argument("minus_one_symbol_Q2: zero");
  Int num = x.get_num(), den = x.get_den();
  // (-1, a/b) = (-1, ab)
  Int n = num * den;
  int v = qts::valuation(2, n);
  Int u = n / pow_int(2, static_cast<unsigned long>(v));
  return mod(u, 4) == 1 ? 1 : -1;
}

int minus_one_symbol(const DyadicQuadElement& t) {
  // (-1, t) over F equals (-1, N_{F/Q_2}(t)) over Q_2
  return minus_one_symbol_Q2(t.norm());
}

LabelledRadicand label_radicand(const PAdicInt& beta) {
  if (beta.prime() != 2) throw std::invalid_argument("label_radicand: not a 2-adic value");
  int v = beta.valuation();
  int j = v / 2;
  PAdicInt b = beta.shift_down(2 * j);
  int label;
  PAdicInt u = b;
  if (v % 2) {
    u = b.shift_down(1);
    if (u.precision() < 3) throw PrecisionError("label_radicand: need the unit mod 8");
    label = 2 * static_cast<int>(mod(u.residue(), 8).get_si());
  } else {
    if (u.precision() < 3) throw PrecisionError("label_radicand: need the unit mod 8");
    label = static_cast<int>(mod(u.residue(), 8).get_si());
    if (label == 1) throw std::invalid_argument("label_radicand: value is a square");
  }
  int odd = label % 2 ? label : label / 2;
  PAdicInt w = u * PAdicInt(2, u.precision(), odd).inverse();
  int k = std::max(1, u.precision() - 1);
  PAdicInt s = sqrt_2adic(w.residue(), k);
  return {label, j, s};
}

}  // namespace qts::dyadic
