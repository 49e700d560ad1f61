#include "bqs/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "bqs/errors.hpp"

namespace bqs {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b) {
    throw DimensionError("exponent overflow");
  }
  return a + b;
}

std::string describe(const Alphabet& a) {
  return "(p=" + std::to_string(a.p) + ", n=" + std::to_string(a.n) + ")";
}

}  // namespace

void validate_alphabet(const Alphabet& alphabet) {
  if (alphabet.p < 1 || alphabet.n < 1) {
    throw DimensionError("alphabet needs p >= 1 and n >= 1, got " + describe(alphabet));
  }
}

Monomial::Monomial(Alphabet alphabet) : alphabet_(alphabet), exponents_(alphabet.size(), 0) {
  validate_alphabet(alphabet);
}

Monomial::Monomial(Alphabet alphabet, ExponentVector exponents)
    : alphabet_(alphabet), exponents_(std::move(exponents)) {
  validate_alphabet(alphabet);
  if (exponents_.size() != alphabet_.size()) {
    throw DimensionError("monomial has " + std::to_string(exponents_.size()) +
                         " exponents, alphabet " + describe(alphabet_) + " needs " +
                         std::to_string(alphabet_.size()));
  }
}

Monomial Monomial::variable(Alphabet alphabet, int position, int cls, Exponent power) {
  Monomial m(alphabet);
  if (position < 1 || position > alphabet.n || cls < 1 || cls > alphabet.p) {
    throw DimensionError("variable x" + std::to_string(position) + "_" + std::to_string(cls) +
                         " outside alphabet " + describe(alphabet));
  }
  m.exponents_[alphabet.flat_index(position, cls)] = power;
  return m;
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t total = 0;
  for (Exponent e : exponents_) total += e;
  return total;
}

MultiDegree Monomial::multidegree() const {
  MultiDegree degs(alphabet_.p, 0);
  for (std::size_t i = 0; i < exponents_.size(); ++i) degs[i % alphabet_.p] += exponents_[i];
  return degs;
}

bool Monomial::is_one() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  if (alphabet_ != other.alphabet_) throw DimensionError("alphabet mismatch in divides");
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (alphabet_ != other.alphabet_) throw DimensionError("alphabet mismatch in product");
  Monomial out(*this);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    out.exponents_[i] = checked_add(exponents_[i], other.exponents_[i]);
  }
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this)) throw DimensionError("monomial quotient is not exact");
  Monomial out(*this);
  for (std::size_t i = 0; i < exponents_.size(); ++i) out.exponents_[i] -= other.exponents_[i];
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  if (alphabet_ != other.alphabet_) throw DimensionError("alphabet mismatch in lcm");
  Monomial out(*this);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    out.exponents_[i] = std::max(exponents_[i], other.exponents_[i]);
  }
  return out;
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  if (a.alphabet() != b.alphabet()) {
    throw DimensionError("lex_compare on monomials over different alphabets");
  }
  return a.exponents() <=> b.exponents();
}

Polynomial::Polynomial(Alphabet alphabet) : alphabet_(alphabet) { validate_alphabet(alphabet); }

Polynomial::Polynomial(const Monomial& monomial, Rational coefficient)
    : alphabet_(monomial.alphabet()) {
  coefficient.canonicalize();
  if (coefficient != 0) terms_.emplace(monomial.exponents(), std::move(coefficient));
}

Polynomial Polynomial::constant(Alphabet alphabet, const Rational& value) {
  return Polynomial(Monomial(alphabet), value);
}

Rational Polynomial::coefficient(const ExponentVector& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::coefficient(const Monomial& monomial) const {
  check_same_alphabet(monomial.alphabet());
  return coefficient(monomial.exponents());
}

Term Polynomial::leading_term() const {
  if (terms_.empty()) throw EmptyPolynomialError("leading term of the zero polynomial");
  const auto& [exps, coeff] = *terms_.begin();
  return Term{Monomial(alphabet_, exps), coeff};
}

void Polynomial::add_term(const ExponentVector& exponents, const Rational& coefficient) {
  if (exponents.size() != alphabet_.size()) {
    throw DimensionError("term exponent vector does not match alphabet " + describe(alphabet_));
  }
  if (coefficient == 0) return;
  // GMP arithmetic assumes canonical operands; callers may hand us 6/4.
  Rational c = coefficient;
  if (c.get_den() != 1) c.canonicalize();
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_same_alphabet(const Alphabet& other) const {
  if (alphabet_ != other) {
    throw DimensionError("alphabet mismatch: " + describe(alphabet_) + " vs " + describe(other));
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_alphabet(other.alphabet_);
  for (const auto& [exps, coeff] : other.terms_) add_term(exps, coeff);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_alphabet(other.alphabet_);
  for (const auto& [exps, coeff] : other.terms_) add_term(exps, -coeff);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  Rational s = scalar;
  s.canonicalize();
  for (auto& [exps, coeff] : terms_) coeff *= s;
  return *this;
}

void Polynomial::add_scaled(const Polynomial& other, const Rational& scalar, const Monomial& shift) {
  check_same_alphabet(other.alphabet_);
  check_same_alphabet(shift.alphabet());
  if (scalar == 0) return;
  const ExponentVector& s = shift.exponents();
  ExponentVector exps(alphabet_.size());
  for (const auto& [e, coeff] : other.terms_) {
    for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = checked_add(e[i], s[i]);
    add_term(exps, scalar * coeff);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [exps, coeff] : out.terms_) coeff = -coeff;
  return out;
}

Polynomial Polynomial::operator*(const Monomial& monomial) const {
  Polynomial out(alphabet_);
  out.add_scaled(*this, 1, monomial);
  return out;
}

Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }

Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }

Polynomial operator*(Polynomial f, const Rational& scalar) { return f *= scalar; }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  if (f.alphabet() != g.alphabet()) throw DimensionError("alphabet mismatch in product");
  Polynomial out(f.alphabet());
  for (const auto& [exps, coeff] : g) {
    out.add_scaled(f, coeff, Monomial(g.alphabet(), exps));
  }
  return out;
}

Polynomial reverse_variables(const Polynomial& f) {
  Polynomial out(f.alphabet());
  for (const auto& [exps, coeff] : f) {
    out.add_term(ExponentVector(exps.rbegin(), exps.rend()), coeff);
  }
  return out;
}

std::map<MultiDegree, Polynomial> multidegree_split(const Polynomial& f) {
  std::map<MultiDegree, Polynomial> parts;
  for (const auto& [exps, coeff] : f) {
    Monomial m(f.alphabet(), exps);
    auto it = parts.try_emplace(m.multidegree(), f.alphabet()).first;
    it->second.add_term(exps, coeff);
  }
  return parts;
}

bool is_homogeneous(const Polynomial& f) { return multidegree_split(f).size() <= 1; }

}  // namespace bqs
