#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bqs/paths.hpp"
#include "bqs/polynomial.hpp"

namespace bqs {

// Sum over index chains for the flat index sequence `index`: indices weakly
// increase inside a block (classes read left to right) and strictly increase
// from one block to the next; an entry of class j contributes x_i^(j).
// No composition check is made; fundamental() is the checked entry point.
Polynomial chain_polynomial(const PVector& index, Alphabet alphabet);

// The fundamental p-quasisymmetric polynomial F_c(A_n) by direct chain
// enumeration.  Zero when size(c) > n; the constant 1 for the empty
// composition.  Throws DimensionError when c.p() != alphabet.p.
Polynomial fundamental(const PComposition& c, Alphabet alphabet);

// Builds F_c by peeling the smallest index: either no letter uses index
// `first`, or the first letter does and the rest is a smaller F, over the
// same alphabet when the first block survives the decrement and over the
// alphabet shifted past `first` when it empties.  Results are memoized per
// (composition, first index); one builder per thread.
class RecursiveFundamentalBuilder {
 public:
  explicit RecursiveFundamentalBuilder(Alphabet alphabet);

  const Polynomial& build(const PComposition& c);

 private:
  const Polynomial& build(const std::vector<Exponent>& entries, int first);

  Alphabet alphabet_;
  std::map<std::pair<std::vector<Exponent>, int>, Polynomial> memo_;
};

struct FTerm {
  Rational coefficient;
  PComposition composition;

  friend bool operator==(const FTerm&, const FTerm&) = default;
};

// Linear combination of fundamental polynomials, in the order the terms were
// peeled off (lex-descending leading monomials).
using FExpansion = std::vector<FTerm>;

// Writes f as a combination of F_c(A_n).  Throws NotQuasisymmetricError as
// soon as a leading monomial is not of the shape A_n^{c0*}.
FExpansion expand_in_f_basis(const Polynomial& f);

// Structure constants of F_a * F_b, computed in n0 = |a| + |b| variables
// (or `ambient` when given, which must be >= n0).
FExpansion product_in_f_basis(const PComposition& a, const PComposition& b, int ambient = 0);

// Sum of coefficient * F_c(A_n).
Polynomial evaluate(const FExpansion& expansion, Alphabet alphabet);

}  // namespace bqs
