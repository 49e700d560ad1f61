#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "bqs/polynomial.hpp"

namespace bqs {

// A p-vector: flat entries grouped in blocks of p.  Block k (1-based) holds
// the exponents of x_k^(1..p).  The bar decorations of the usual notation are
// implied by the position inside the block.
class PVector {
 public:
  PVector() = default;  // p = 1, size 0
  PVector(int p, std::vector<Exponent> entries);

  static PVector zero(int p, int size);
  static PVector of_monomial(const Monomial& m);

  int p() const { return p_; }
  int size() const { return static_cast<int>(entries_.size()) / p_; }
  const std::vector<Exponent>& entries() const { return entries_; }
  Exponent operator[](std::size_t flat) const { return entries_[flat]; }
  std::span<const Exponent> block(int k) const;  // 1-based

  std::uint64_t total() const;  // |v|
  bool is_zero() const { return total() == 0; }

  // Appends zero blocks up to `size` blocks (v -> v0*).  Throws if shorter.
  PVector padded(int size) const;
  // Keeps the first `blocks` blocks.
  PVector truncated(int blocks) const;

  // The monomial A_n^v; requires size() == alphabet.n and p() == alphabet.p.
  Monomial monomial(Alphabet alphabet) const;
  Monomial monomial() const { return monomial(Alphabet{p_, size()}); }

  friend bool operator==(const PVector&, const PVector&) = default;
  friend auto operator<=>(const PVector& a, const PVector& b) {
    if (auto c = a.p_ <=> b.p_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

 private:
  int p_ = 1;
  std::vector<Exponent> entries_;
};

std::string to_string(const PVector& v);  // "1,0,2,1"

// Index of the last block that is not all-zero; 0 for the zero vector.
int length(const PVector& v);

// Component j is the sum of the entries of class j.
MultiDegree weight(const PVector& v);

// No run of p consecutive zeros anywhere in the flat sequence; runs may
// straddle block boundaries.
bool is_p_composition(const PVector& v);

// Some prefix of l blocks has entry sum >= l.
bool is_transdiagonal(const PVector& v);
bool is_transdiagonal(std::span<const Exponent> entries, int p);

// Flat entry sequence reversed.
PVector reverse_vector(const PVector& v);

// A p-vector known to have no run of p zeros.  The empty composition is
// allowed and indexes the constant 1.
class PComposition {
 public:
  explicit PComposition(PVector v);  // throws CompositionError
  static PComposition empty(int p) { return PComposition(PVector(p, {})); }

  const PVector& vector() const { return v_; }
  int p() const { return v_.p(); }
  int size() const { return v_.size(); }
  std::uint64_t total() const { return v_.total(); }

  friend bool operator==(const PComposition&, const PComposition&) = default;
  friend auto operator<=>(const PComposition&, const PComposition&) = default;

 private:
  PVector v_;
};

enum class Step : std::uint8_t { Horizontal, Vertical };

// Horizontal steps have length p, vertical steps length 1.
struct LatticePath {
  int p = 1;
  std::vector<Step> steps;

  std::size_t horizontal_count() const;
  std::size_t vertical_count() const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

std::string to_string(const LatticePath& path);  // "HVVHV..."

// For each entry v_t: v_t horizontal steps, then one vertical step.
LatticePath path_of_vector(const PVector& v);

// Inverse of path_of_vector.  Throws PathError when the path ends with a
// horizontal run or the vertical count is not a multiple of p.
PVector vector_of_path(const LatticePath& path);

// Geometric test: does the walk ever reach a point with x > y?
bool crosses_below_diagonal(const LatticePath& path);

inline constexpr std::size_t kDefaultEnumerationCeiling = 20'000'000;

// All size-n p-vectors that are not transdiagonal, in ascending lexicographic
// order of their flat entry sequences.
std::vector<PVector> enumerate_p_dyck(int n, int p,
                                      std::size_t ceiling = kDefaultEnumerationCeiling);

// Transdiagonal size-n vectors that stop being transdiagonal when any single
// nonzero entry is decremented.  Ascending lexicographic order.
std::vector<PVector> enumerate_minimal_transdiagonal(int n, int p);

// Calls visit on every vector of `slots` nonnegative entries with total at
// most max_total, in ascending lexicographic order.
void for_each_bounded_vector(std::size_t slots, std::uint64_t max_total,
                             const std::function<void(const std::vector<Exponent>&)>& visit);

}  // namespace bqs
