#pragma once

// Line tokenizer shared by the text formats.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "plstab/error.hpp"
#include "plstab/rational.hpp"

namespace plstab::text {

struct Line {
  std::size_t number = 0;
  std::vector<std::string_view> tokens;
};

/// Splits on whitespace, dropping blank lines and `#` comments.
/// The returned views point into `text`.
std::vector<Line> tokenize(std::string_view text);

[[noreturn]] void parse_error(const Line& line, const std::string& what);

Rational parse_rational(const Line& line, std::string_view token);
std::size_t parse_index(const Line& line, std::string_view token);
long parse_integer(const Line& line, std::string_view token);

}  // namespace plstab::text
