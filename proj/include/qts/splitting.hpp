// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "qts/kfield.hpp"

namespace qts {

/// How p decomposes in Q < k < K: first letter for p in k (Split, Inert,
/// Ramified), second for each prime of k above p in K.
enum class SplitTag { RR, SS, SI, SR, II, IR };
std::string to_string(SplitTag t);

struct SplittingType {
  SplitTag tag = SplitTag::II;
  bool single_dyadic_spot = false;  // only meaningful for p = 2
  bool operator==(const SplittingType&) const = default;
};

/// Number of primes of K above p, with (e, f).
struct DecompositionShape {
  int g, e, f;
  bool operator==(const DecompositionShape&) const = default;
};
DecompositionShape shape(SplitTag t);

/// Square root of D modulo p^k used to label the primes of k above a split p:
/// c corresponds to p1 = (p, sqrtD - c), -c to p2.
PAdicInt split_root(const FieldParams& params, const Int& p, int k);

/// A(D + B c) for the labelled root, with enough precision that it is nonzero.
PAdicInt alpha_at_root(const FieldParams& params, const Int& p, int sign, int k);

SplittingType classify_odd(const FieldParams& params, const Int& p);
SplittingType classify_dyadic(const FieldParams& params);
SplittingType classify(const FieldParams& params, const Int& p);

}  // namespace qts
