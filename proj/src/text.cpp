#include "text.hpp"

#include <cctype>
#include <charconv>

namespace plstab::text {

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line;
    line.number = number;
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

void parse_error(const Line& line, const std::string& what) {
  fail(ErrorCode::Parse, "line " + std::to_string(line.number) + ": " + what);
}

Rational parse_rational(const Line& line, std::string_view token) {
  try {
    return Rational::parse(token);
  } catch (const Error&) {
    parse_error(line, "malformed rational '" + std::string(token) + "'");
  }
}

std::size_t parse_index(const Line& line, std::string_view token) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    parse_error(line, "malformed index '" + std::string(token) + "'");
  }
  return value;
}

long parse_integer(const Line& line, std::string_view token) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    parse_error(line, "malformed integer '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace plstab::text
