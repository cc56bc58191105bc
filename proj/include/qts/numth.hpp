// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qts {

using Int = mpz_class;
using Rat = mpq_class;

/// Raised when a p-adic computation would need more digits than it carries.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PrimePower {
  Int prime;
  int exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

/// Signed prime factorization with primes strictly increasing.
struct Factorization {
  int sign = 1;
  std::vector<PrimePower> factors;

  Int value() const;
  bool is_prime() const { return sign == 1 && factors.size() == 1 && factors[0].exponent == 1; }
};

bool is_prime(const Int& n);
Factorization factorize(const Int& n);
Factorization factorize(long n);

/// Jacobi symbol (a/n) for odd n >= 1.
int jacobi(const Int& a, const Int& n);

/// v_p of a nonzero integer or rational.
int valuation(const Int& p, const Int& n);
int valuation(const Int& p, const Rat& q);

/// Strips all factors of p; n must be nonzero.
Int remove_factor(const Int& p, const Int& n);

/// n = square_root^2 * squarefree, square_root > 0 maximal.
struct SquarefreeDecomposition {
  Int square_root;
  Int squarefree;
};
SquarefreeDecomposition squarefree_decompose(const Int& n);
bool is_squarefree(const Int& n);

/// Returns r >= 0 with r*r == n, when n is a perfect square.
std::optional<Int> exact_sqrt(const Int& n);
std::optional<Rat> exact_sqrt(const Rat& q);

/// Least nonnegative residue.
Int mod(const Int& a, const Int& m);
Int pow_int(const Int& base, unsigned long e);

/// Element of Z_p known modulo p^precision.
class PAdicInt {
 public:
  PAdicInt(Int prime, int precision, const Int& value);

  const Int& prime() const { return prime_; }
  int precision() const { return precision_; }
  const Int& residue() const { return residue_; }
  Int modulus() const;

  bool is_zero() const { return residue_ == 0; }
  /// Exact valuation; throws PrecisionError if the residue vanishes.
  int valuation() const;
  bool is_unit() const;

  PAdicInt operator+(const PAdicInt& o) const;
  PAdicInt operator-(const PAdicInt& o) const;
  PAdicInt operator*(const PAdicInt& o) const;
  PAdicInt operator-() const;
  /// Inverse of a unit.
  PAdicInt inverse() const;
  /// Division by p^e; loses e digits of precision.
  PAdicInt shift_down(int e) const;
  PAdicInt with_precision(int k) const;

  bool operator==(const PAdicInt& o) const {
    return prime_ == o.prime_ && precision_ == o.precision_ && residue_ == o.residue_;
  }

 private:
  Int prime_;
  int precision_;
  Int residue_;
};

/// Root of a mod p^k for odd p, canonicalized to the root whose least residue
/// mod p is even. Requires gcd(a, p) = 1.
std::optional<PAdicInt> sqrt_mod_prime_power(const Int& a, const Int& p, int k);

/// The 2-adic square root of w (w = 1 mod 8) that is 1 mod 4, reduced mod 2^k.
PAdicInt sqrt_2adic(const Int& w, int k);

/// Precision used for p-adic work unless QTS_PRECISION overrides it.
int default_precision();

}  // namespace qts
