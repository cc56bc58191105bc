// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qts/decide.hpp"

namespace qts::cli {

enum Exit : int { Yes = 0, No = 1, Usage = 2, InvalidField = 3, NormalizationFailed = 4, OracleDisagrees = 5, Internal = 6 };

enum class Format { Text, Json };

struct JobSpec {
  std::string command;
  std::optional<std::vector<Int>> field;         // A, B, C, D
  std::optional<std::pair<Rat, Rat>> radicand;   // a1 + a2 sqrt D
  std::optional<Int> D;
  std::optional<std::vector<Rat>> elem;          // coordinates in the input basis
  std::optional<Int> prime;
  Format format = Format::Text;
  long search_bound = 3;
  int modulus_exponent = 0;  // 0: pick per prime
};

/// Parses "x1,x2,y1,y2[/den]"; throws std::invalid_argument naming the column.
std::vector<Rat> parse_element(const std::string& s);
/// Parses a comma separated integer list of the given length.
std::vector<Int> parse_integers(const std::string& s, size_t count, const std::string& what);

/// Full driver: parse argv, run, print. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qts::cli
