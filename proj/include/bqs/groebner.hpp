#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bqs/fundamental.hpp"
#include "bqs/paths.hpp"
#include "bqs/polynomial.hpp"

namespace bqs {

// One unfolding of the G recursion at a non-composition-shaped index v: the
// rightmost run of p zeros that is followed by a nonzero entry starts at
// block `position`, class `cls`.  `reduced` deletes the run (later entries
// move one block left, a zero block is appended); `lowered` additionally
// decrements the entry that followed the run.  Then
//   G_v = G_reduced - x_position^(cls) * G_lowered.
struct GRecursionStep {
  PVector reduced;
  PVector lowered;
  int position = 0;
  int cls = 0;
};

// std::nullopt when v = c0* with c a nonzero composition (the base case).
std::optional<GRecursionStep> g_recursion_step(const PVector& v);

// A signed product m * F_c appearing in the unrolled recursion.
struct GTerm {
  int sign = 1;
  Monomial multiplier;
  PComposition composition;
};
using GCombination = std::vector<GTerm>;

struct ReductionRecord {
  Polynomial remainder;
  // (coefficient, index) for every G subtracted, in order of use.
  std::vector<std::pair<Rational, PVector>> used;
};

inline constexpr std::size_t kDefaultReductionCeiling = 50'000'000;

// The G family of one alphabet with its memo table.  Not thread-safe; use
// one instance per thread.
class GFamily {
 public:
  explicit GFamily(Alphabet alphabet);

  const Alphabet& alphabet() const { return alphabet_; }

  // G_v.  Throws IndexError if v is not transdiagonal and DimensionError if
  // v does not have size n and the alphabet's p.
  const Polynomial& element(const PVector& v);

  GCombination combination(const PVector& v);

  // Reduces the current leading transdiagonal monomial A^u by G_u until the
  // remainder is supported on p-Dyck monomials.
  ReductionRecord normal_form(const Polynomial& f, std::size_t ceiling = kDefaultReductionCeiling);

  bool is_member(const Polynomial& f);

  std::size_t cached() const { return memo_.size(); }

 private:
  void check_index(const PVector& v) const;

  Alphabet alphabet_;
  std::map<std::vector<Exponent>, Polynomial> memo_;
};

// Single-shot conveniences; each builds a private GFamily.
Polynomial groebner_element(const PVector& v, Alphabet alphabet);
GCombination g_as_f_combination(const PVector& v, Alphabet alphabet);
ReductionRecord normal_form(const Polynomial& f);
bool is_member(const Polynomial& f);

// True iff the leading term of G_v is (A_n^v, 1).
bool leading_monomial_check(const PVector& v);

// Sum of sign * m * F_c(A_n).
Polynomial evaluate(const GCombination& combination, Alphabet alphabet);

struct BasisElement {
  PVector index;
  Polynomial polynomial;
};

// G_v for every minimal transdiagonal v of size n.
std::vector<BasisElement> minimal_groebner_basis(int n, int p);

// Division by a finite list of monic polynomials whose leading monomials
// cover every transdiagonal monomial.
Polynomial reduce_by_basis(const Polynomial& f, const std::vector<BasisElement>& basis,
                           std::size_t ceiling = kDefaultReductionCeiling);

struct GroebnerCheckOptions {
  int composition_degree = 3;  // generators F_c with 0 < |c| <= this
  int multiplier_degree = 2;   // multiplied by every monomial of degree <= this
  std::size_t max_pairs = 1'000'000;
};

struct GroebnerReport {
  bool passed = false;
  bool partial = false;
  std::size_t basis_size = 0;
  std::size_t pairs_checked = 0;
  std::size_t generators_checked = 0;
  std::string counterexample;  // empty on success
};

// Buchberger's criterion on the minimal basis (every S-polynomial reduces to
// zero modulo the basis) plus generator containment (m * F_c reduces to zero
// both modulo the basis and by normal_form).
GroebnerReport verify_groebner(int n, int p, const GroebnerCheckOptions& options = {});

}  // namespace bqs
