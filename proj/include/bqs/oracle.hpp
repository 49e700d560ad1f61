#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "bqs/polynomial.hpp"

namespace bqs {

// Incremental row echelon form over the integers.  Rows are dense over a
// fixed column order; elimination is fraction-free (r <- a*r - b*q) with the
// row content divided out after every step.
class IntegerEchelon {
 public:
  explicit IntegerEchelon(std::size_t columns) : columns_(columns) {}

  // Returns true when the row is independent of the rows inserted so far.
  bool insert(std::vector<Integer> row);

  std::size_t rank() const { return pivots_.size(); }
  std::size_t columns() const { return columns_; }
  bool full() const { return rank() == columns_; }

 private:
  std::size_t columns_;
  std::map<std::size_t, std::vector<Integer>> pivots_;  // pivot column -> row
};

inline constexpr std::size_t kDefaultOracleRowCeiling = 5'000'000;

// For every multidegree d with total <= degree_cap, the codimension of
// span{ m * F_c : |c| > 0, m a monomial, multidegree(m * F_c) = d } inside
// the polynomials of multidegree d.  Uses only chain-enumerated F_c and
// exact linear algebra; independent of the G family.
std::map<MultiDegree, std::uint64_t> oracle_quotient_dim(
    int n, int p, int degree_cap, std::size_t row_ceiling = kDefaultOracleRowCeiling);

// All monomials of the given multidegree, lex-descending.
std::vector<ExponentVector> monomials_of_multidegree(const Alphabet& alphabet,
                                                     const MultiDegree& degree);

}  // namespace bqs
