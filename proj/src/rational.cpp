#include "bqs/rational.hpp"

#include <cctype>

#include "bqs/errors.hpp"

namespace bqs {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num)) {
    throw ParseError("malformed rational '" + std::string(text) + "'", 0);
  }
  if (!all_digits(den)) {
    throw ParseError("malformed denominator in '" + std::string(text) + "'",
                     slash == std::string_view::npos ? 0 : slash + 1);
  }
  Integer numerator(std::string(num), 10);
  Integer denominator(std::string(den), 10);
  if (denominator == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
  }
  Rational value(negative ? Integer(-numerator) : numerator, denominator);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_string(const Integer& value) { return value.get_str(10); }

}  // namespace bqs
