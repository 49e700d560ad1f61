#include "bqs/text.hpp"

#include <cctype>
#include <limits>

#include "bqs/errors.hpp"

namespace bqs {

std::string variable_name(const Alphabet& alphabet, int position, int cls) {
  if (alphabet.p == 2) return (cls == 1 ? "x" : "y") + std::to_string(position);
  return "x" + std::to_string(position) + "_" + std::to_string(cls);
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const Alphabet& a = f.alphabet();
  std::string out;
  bool first = true;
  for (const auto& [exps, coeff] : f) {
    std::string monomial;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!monomial.empty()) monomial += ' ';
      monomial += variable_name(a, static_cast<int>(i) / a.p + 1, static_cast<int>(i) % a.p + 1);
      if (exps[i] > 1) monomial += "^" + std::to_string(exps[i]);
    }
    const bool negative = coeff < 0;
    const Rational magnitude = abs(coeff);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (monomial.empty()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += monomial;
    } else {
      out += to_string(magnitude) + " " + monomial;
    }
  }
  return out;
}

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, Alphabet alphabet)
      : text_(text), alphabet_(alphabet), result_(alphabet) {}

  Polynomial parse() && {
    skip_space();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (!at_end()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        throw ParseError("expected '+' or '-' between terms", pos_);
      }
      first = false;
      term(sign);
      skip_space();
    }
    return std::move(result_);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool is_digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(peek())); }

  std::string digits() {
    const std::size_t start = pos_;
    while (is_digit()) ++pos_;
    if (start == pos_) throw ParseError("expected a number", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  long small_number() {
    const std::size_t start = pos_;
    const std::string d = digits();
    if (d.size() > 9) throw ParseError("number too large", start);
    return std::stol(d);
  }

  void term(const Rational& sign) {
    Rational coeff = sign;
    bool seen_factor = false;
    if (is_digit()) {
      const std::size_t start = pos_;
      std::string lit = digits();
      if (!at_end() && peek() == '/') {
        ++pos_;
        const std::size_t den_pos = pos_;
        lit += "/" + digits();
        if (Integer(lit.substr(lit.find('/') + 1)) == 0) throw ParseError("zero denominator", den_pos);
      }
      try {
        coeff *= parse_rational(lit);
      } catch (const ParseError&) {
        throw ParseError("malformed coefficient", start);
      }
      seen_factor = true;
    }
    ExponentVector exps(alphabet_.size(), 0);
    for (;;) {
      skip_space();
      if (!at_end() && peek() == '*' && seen_factor) {
        ++pos_;
        skip_space();
        if (at_end() || (peek() != 'x' && peek() != 'y')) {
          throw ParseError("expected a variable after '*'", pos_);
        }
      }
      if (at_end() || (peek() != 'x' && peek() != 'y')) break;
      factor(exps);
      seen_factor = true;
    }
    if (!seen_factor) throw ParseError("expected a coefficient or variable", pos_);
    result_.add_term(exps, coeff);
  }

  void factor(ExponentVector& exps) {
    const std::size_t start = pos_;
    const char letter = peek();
    ++pos_;
    if (!is_digit()) throw ParseError("expected a variable index", pos_);
    const long position = small_number();
    long cls = 1;
    if (letter == 'y') {
      if (alphabet_.p != 2) throw ParseError("'y' variables need p = 2", start);
      cls = 2;
    } else if (!at_end() && peek() == '_') {
      ++pos_;
      const std::size_t cls_pos = pos_;
      cls = small_number();
      if (cls < 1 || cls > alphabet_.p) {
        throw ParseError("class " + std::to_string(cls) + " exceeds p=" + std::to_string(alphabet_.p),
                         cls_pos);
      }
    } else if (alphabet_.p > 2) {
      throw ParseError("variable needs an explicit class x{i}_{j} when p > 2", start);
    }
    if (position < 1 || position > alphabet_.n) {
      throw ParseError("index " + std::to_string(position) + " outside [1, " +
                           std::to_string(alphabet_.n) + "]",
                       start + 1);
    }
    long power = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      power = small_number();
    }
    auto& slot = exps[alphabet_.flat_index(static_cast<int>(position), static_cast<int>(cls))];
    if (static_cast<unsigned long>(power) > std::numeric_limits<Exponent>::max() - slot) {
      throw ParseError("exponent overflow", start);
    }
    slot += static_cast<Exponent>(power);
  }

  std::string_view text_;
  Alphabet alphabet_;
  Polynomial result_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, Alphabet alphabet) {
  validate_alphabet(alphabet);
  return PolynomialParser(text, alphabet).parse();
}

}  // namespace bqs

namespace bqs {

PVector parse_vector_literal(std::string_view text, int p) {
  if (p < 1) throw DimensionError("p must be at least 1");
  std::vector<Exponent> entries;
  std::size_t pos = 0;
  auto blank = [&](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (pos < text.size() && blank(text[pos])) ++pos;
  if (pos == text.size()) return PVector(p, {});
  for (;;) {
    while (pos < text.size() && blank(text[pos])) ++pos;
    const std::size_t start = pos;
    std::uint64_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (value > std::numeric_limits<Exponent>::max()) throw ParseError("entry too large", start);
      ++pos;
    }
    if (pos == start) throw ParseError("expected a nonnegative integer", pos);
    entries.push_back(static_cast<Exponent>(value));
    while (pos < text.size() && blank(text[pos])) ++pos;
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
  if (entries.size() % static_cast<std::size_t>(p) != 0) {
    throw ParseError(std::to_string(entries.size()) + " entries do not fill blocks of " +
                         std::to_string(p),
                     text.size());
  }
  return PVector(p, std::move(entries));
}

}  // namespace bqs
