#include "powerfree/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace powerfree {

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last)
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const std::int64_t num = parse_integer(text.substr(0, slash), text);
  const std::int64_t den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw std::invalid_argument("malformed rational '" + std::string(text) + "': zero denominator");
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return to_fraction_string();
}

std::string Rational::to_fraction_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace powerfree
