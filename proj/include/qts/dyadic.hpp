// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <vector>

#include "qts/numth.hpp"

namespace qts::dyadic {

/// Labels of the ramified and unramified quadratic extensions Q_2(sqrt c) we use.
/// 11 is kept as an alias of 3 (11/3 is a square in Q_2).
inline constexpr std::array<int, 8> kLabels = {2, 3, 5, 6, 7, 10, 11, 14};
bool is_label(int c);

struct ETableEntry {
  int residue_class;  // squarefree w mod 256
  int e_value;        // odd, e_value^2 = w mod 128
};
const std::array<ETableEntry, 32>& e_table();

/// s * e(W) for w = s^2 W with W squarefree and W = 1 mod 8.
Int e_of(const Int& w);

/// u + v*omega with omega = sqrt(c), or (1 + sqrt 5)/2 when c = 5; coordinates mod 2^k.
class DyadicQuadElement {
 public:
  DyadicQuadElement(int c, const Int& u, const Int& v, int k);
  /// a + b sqrt(c) in the omega basis.
  static DyadicQuadElement from_sqrt_coords(int c, const Int& a, const Int& b, int k);

  int label() const { return c_; }
  int precision() const { return k_; }
  const Int& u() const { return u_; }
  const Int& v() const { return v_; }
  bool ramified() const { return c_ != 5; }

  DyadicQuadElement operator+(const DyadicQuadElement& o) const;
  DyadicQuadElement operator-(const DyadicQuadElement& o) const;
  DyadicQuadElement operator*(const DyadicQuadElement& o) const;
  DyadicQuadElement operator-() const;
  bool operator==(const DyadicQuadElement& o) const;
  DyadicQuadElement conj() const;
  DyadicQuadElement with_precision(int k) const;
  /// Norm to Q_2, as a residue mod 2^k.
  PAdicInt norm() const;
  bool is_zero() const { return u_ == 0 && v_ == 0; }
  /// Normalized valuation: in the uniformizer for ramified labels, in 2 for c = 5.
  int valuation() const;
  bool is_unit() const { return valuation() == 0; }
  /// Divides by uniformizer^n; loses n bits of precision.
  DyadicQuadElement divide_by_uniformizer(int n) const;

 private:
  void check(const DyadicQuadElement& o) const;
  int c_;
  int k_;
  Int u_, v_;
};

DyadicQuadElement uniformizer(int c, int k);

/// Canonical sqrt(N) in Q_2(sqrt 5) for squarefree part of N = 5 mod 8.
DyadicQuadElement e5_of(const Int& N, int k = 10);

/// Unit square classes modulo 4*pi (ramified) or 8 (c = 5, listed mod 4).
std::vector<DyadicQuadElement> unit_square_classes(int c, int k = 10);

bool is_square(const DyadicQuadElement& t);

/// A unit is a sum of two squares iff its norm to Q_2 is 1 mod 4.
bool unit_is_sum_two_squares(const DyadicQuadElement& h);
/// The congruence as printed: 2 | h - 1 (c != 5), or h in the six classes mod 4 (c = 5).
bool unit_rule_as_printed(const DyadicQuadElement& h);

/// Hilbert symbol (-1, t) over Q_2(sqrt c).
int minus_one_symbol(const DyadicQuadElement& t);
/// (-1, x) over Q_2 for x != 0.
int minus_one_symbol_Q2(const Rat& x);
int minus_one_symbol_Q2(const PAdicInt& x);

/// Writes a nonsquare beta in Q_2 as 4^j * label * s^2: returns (label, j, s) with s a 2-adic unit.
struct LabelledRadicand {
  int label;
  int j;
  PAdicInt s;
};
LabelledRadicand label_radicand(const PAdicInt& beta);

}  // namespace qts::dyadic
