#pragma once

#include <cstdint>
#include <map>

#include "bqs/polynomial.hpp"

namespace bqs {

Integer binomial(unsigned long n, unsigned long k);

// C((p+1)n, n) / (pn + 1), the number of trees with n internal nodes of
// arity p + 1.
Integer fuss_catalan(int n, int p);

// Dimension of the coinvariant quotient in p alphabets of n variables.
Integer quotient_dim_formula(int n, int p);

// p = 2 bigraded Hilbert function:
// C(n+k-1, k) C(n+l-1, l) (n-k-l) / n for k + l < n, zero otherwise.
Integer bigraded_dim(int n, int k, int l);

struct HilbertTable {
  int n = 0;
  int p = 0;
  std::map<MultiDegree, std::uint64_t> entries;  // zero entries omitted
  std::uint64_t total = 0;

  std::uint64_t at(const MultiDegree& degree) const {
    auto it = entries.find(degree);
    return it == entries.end() ? 0 : it->second;
  }
};

// Counts p-Dyck vectors of size n by weight.
HilbertTable hilbert_by_enumeration(int n, int p);

// Reads the table off the linear-algebra oracle with degree cap n.
HilbertTable hilbert_by_oracle(int n, int p);

}  // namespace bqs
