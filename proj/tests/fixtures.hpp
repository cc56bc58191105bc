// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <random>
#include <vector>

#include "qts/kfield.hpp"

namespace qts::testing {

/// Every valid (A, B, C, D) with D <= max_d and |A| <= max_a.
inline std::vector<FieldParams> small_fields(long max_d, long max_a) {
  std::vector<FieldParams> out;
  for (long d = 2; d <= max_d; ++d)
    for (long b = 1; b * b < d; ++b) {
      long c2 = d - b * b;
      auto c = exact_sqrt(Int(c2));
      if (!c) continue;
      for (long a = -max_a; a <= max_a; ++a) {
        try {
          out.push_back(validate_params(a, b, *c, d));
        } catch (const FieldError&) {
        }
      }
    }
  return out;
}

inline QuartElement random_element(const FieldParams& fp, std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  return element(fp, dist(rng), dist(rng), dist(rng), dist(rng));
}

}  // namespace qts::testing
