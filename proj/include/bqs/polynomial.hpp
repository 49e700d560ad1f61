#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "bqs/rational.hpp"

namespace bqs {

using Exponent = std::uint32_t;
using ExponentVector = std::vector<Exponent>;

// Total degree in each of the p alphabets.
using MultiDegree = std::vector<std::uint64_t>;

// The alphabet A_n^p: n positions, p variables per position.  Variable
// x_i^(j) (1-based i, j) lives at flat index (i-1)*p + (j-1), and the flat
// index order is the variable order x_1^(1) > x_1^(2) > ... > x_n^(p).
struct Alphabet {
  int p = 1;
  int n = 1;

  std::size_t size() const { return static_cast<std::size_t>(p) * n; }
  std::size_t flat_index(int position, int cls) const {
    return static_cast<std::size_t>(position - 1) * p + (cls - 1);
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

// Throws DimensionError unless p >= 1 and n >= 1.
void validate_alphabet(const Alphabet& alphabet);

class Monomial {
 public:
  explicit Monomial(Alphabet alphabet);  // the unit monomial
  Monomial(Alphabet alphabet, ExponentVector exponents);

  // x_position^(cls)^power, 1-based position and class.
  static Monomial variable(Alphabet alphabet, int position, int cls, Exponent power = 1);

  const Alphabet& alphabet() const { return alphabet_; }
  const ExponentVector& exponents() const { return exponents_; }
  Exponent exponent(int position, int cls) const {
    return exponents_[alphabet_.flat_index(position, cls)];
  }

  std::uint64_t total_degree() const;
  MultiDegree multidegree() const;
  bool is_one() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Exact quotient; throws unless other divides *this.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  Alphabet alphabet_;
  ExponentVector exponents_;
};

// Lexicographic comparison: greater iff the first nonzero entry of a - b is
// positive.  Throws DimensionError when the alphabets differ.
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

// std::vector's lexicographic operator< agrees with lex_compare on
// equal-length exponent vectors; this comparator sorts greatest first.
struct LexDescending {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const { return b < a; }
};

struct Term {
  Monomial monomial;
  Rational coefficient;
};

class Polynomial {
 public:
  using TermMap = std::map<ExponentVector, Rational, LexDescending>;
  using const_iterator = TermMap::const_iterator;

  explicit Polynomial(Alphabet alphabet);  // zero polynomial
  Polynomial(const Monomial& monomial, Rational coefficient = 1);

  static Polynomial constant(Alphabet alphabet, const Rational& value);

  const Alphabet& alphabet() const { return alphabet_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Lex-descending iteration over (exponent vector, coefficient).
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const TermMap& terms() const { return terms_; }

  Rational coefficient(const ExponentVector& exponents) const;
  Rational coefficient(const Monomial& monomial) const;

  // Throws EmptyPolynomialError on the zero polynomial.
  Term leading_term() const;

  // Adds coefficient * monomial in place; drops the term if it cancels.
  void add_term(const ExponentVector& exponents, const Rational& coefficient);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  // this += scalar * monomial * other, the inner step of every reduction.
  void add_scaled(const Polynomial& other, const Rational& scalar, const Monomial& shift);

  Polynomial operator-() const;
  Polynomial operator*(const Monomial& monomial) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void check_same_alphabet(const Alphabet& other) const;

  Alphabet alphabet_;
  TermMap terms_;
};

Polynomial operator+(Polynomial f, const Polynomial& g);
Polynomial operator-(Polynomial f, const Polynomial& g);
Polynomial operator*(const Polynomial& f, const Polynomial& g);
Polynomial operator*(Polynomial f, const Rational& scalar);

// Substitutes x_i^(j) -> x_{n+1-i}^(p+1-j), i.e. reverses every exponent
// vector.  An involutive ring automorphism.
Polynomial reverse_variables(const Polynomial& f);

// Partitions the terms of f by multidegree.
std::map<MultiDegree, Polynomial> multidegree_split(const Polynomial& f);

// True when f has at most one multidegree.
bool is_homogeneous(const Polynomial& f);

}  // namespace bqs
