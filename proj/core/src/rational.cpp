#include "aritygap/rational.hpp"

#include <charconv>

#include "aritygap/error.hpp"

namespace aritygap {
namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    fail(ErrorCode::invalid_argument, "bad rational literal '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) fail(ErrorCode::invalid_argument, "empty rational literal");
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text, text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (num.empty() || den.empty()) {
    fail(ErrorCode::invalid_argument, "bad rational literal '" + std::string(text) + "'");
  }
  const std::int64_t d = parse_int(den, text);
  if (d == 0) fail(ErrorCode::invalid_argument, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(num, text), d);
}

std::string to_string(const Rational& value) {
  std::string out = std::to_string(value.numerator());
  if (value.denominator() != 1) {
    out += '/';
    out += std::to_string(value.denominator());
  }
  return out;
}

}  // namespace aritygap
