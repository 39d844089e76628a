#include "supply/scalar.hpp"

#include <charconv>
#include <regex>

namespace supply {

std::string format_scalar(const Rational& value) {
  return value.str();
}

std::string format_scalar(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

namespace {

// Base 10 always; the generic string constructor treats a leading 0 as octal.
Integer parse_decimal(std::string digits) {
  if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
  Integer out;
  mpz_set_str(out.backend().data(), digits.c_str(), 10);
  return out;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  static const std::regex pattern(R"(^[+-]?[0-9]+(/[0-9]+)?$)");
  const std::string s(text);
  if (!std::regex_match(s, pattern)) return std::nullopt;
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_decimal(s));
  const Integer den = parse_decimal(s.substr(slash + 1));
  if (den == 0) return std::nullopt;
  return Rational(parse_decimal(s.substr(0, slash)), den);
}

}  // namespace supply
