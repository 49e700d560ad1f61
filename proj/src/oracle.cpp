#include "bqs/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "bqs/errors.hpp"
#include "bqs/fundamental.hpp"
#include "bqs/paths.hpp"

namespace bqs {

namespace {

void divide_content(std::vector<Integer>& row) {
  Integer g = 0;
  for (const auto& x : row) {
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g > 1) {
    for (auto& x : row) {
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
  }
}

struct VectorHash {
  std::size_t operator()(const ExponentVector& v) const {
    std::size_t h = 1469598103934665603ull;
    for (Exponent e : v) h = (h ^ e) * 1099511628211ull;
    return h;
  }
};

}  // namespace

bool IntegerEchelon::insert(std::vector<Integer> row) {
  if (row.size() != columns_) throw DimensionError("echelon row has the wrong width");
  for (std::size_t col = 0; col < columns_; ++col) {
    if (row[col] == 0) continue;
    auto it = pivots_.find(col);
    if (it == pivots_.end()) {
      divide_content(row);
      pivots_.emplace(col, std::move(row));
      return true;
    }
    const std::vector<Integer>& pivot = it->second;
    const Integer a = pivot[col];
    const Integer b = row[col];
    for (std::size_t k = col; k < columns_; ++k) row[k] = a * row[k] - b * pivot[k];
    divide_content(row);
  }
  return false;
}

std::vector<ExponentVector> monomials_of_multidegree(const Alphabet& alphabet,
                                                     const MultiDegree& degree) {
  std::vector<ExponentVector> out;
  ExponentVector cur(alphabet.size(), 0);
  MultiDegree left = degree;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == cur.size()) {
      if (std::all_of(left.begin(), left.end(), [](std::uint64_t x) { return x == 0; })) {
        out.push_back(cur);
      }
      return;
    }
    const std::size_t cls = i % static_cast<std::size_t>(alphabet.p);
    const std::uint64_t avail = left[cls];
    for (std::uint64_t e = 0; e <= avail; ++e) {
      cur[i] = static_cast<Exponent>(e);
      left[cls] -= e;
      rec(i + 1);
      left[cls] += e;
    }
    cur[i] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end(), LexDescending{});
  return out;
}

std::map<MultiDegree, std::uint64_t> oracle_quotient_dim(int n, int p, int degree_cap,
                                                         std::size_t row_ceiling) {
  const Alphabet alphabet{p, n};
  validate_alphabet(alphabet);
  if (degree_cap < 0) throw DimensionError("degree cap must be nonnegative");

  // Every composition with 0 < |c| <= cap and size <= n, with its F_c.
  std::vector<std::pair<PVector, Polynomial>> generators;
  for (int size = 1; size <= std::min(n, degree_cap); ++size) {
    for_each_bounded_vector(static_cast<std::size_t>(size) * p, static_cast<std::uint64_t>(degree_cap),
                            [&](const std::vector<Exponent>& e) {
                              PVector c(p, e);
                              if (c.total() == 0 || !is_p_composition(c)) return;
                              Polynomial f = fundamental(PComposition(c), alphabet);
                              generators.emplace_back(std::move(c), std::move(f));
                            });
  }

  std::map<MultiDegree, std::uint64_t> out;
  std::size_t rows = 0;
  for_each_bounded_vector(static_cast<std::size_t>(p), static_cast<std::uint64_t>(degree_cap),
                          [&](const std::vector<Exponent>& d) {
    const MultiDegree degree(d.begin(), d.end());
    const auto columns = monomials_of_multidegree(alphabet, degree);
    std::unordered_map<ExponentVector, std::size_t, VectorHash> column_of;
    for (std::size_t i = 0; i < columns.size(); ++i) column_of.emplace(columns[i], i);

    IntegerEchelon echelon(columns.size());
    for (const auto& [c, f] : generators) {
      if (echelon.full()) break;
      const MultiDegree w = weight(c);
      MultiDegree rest(degree.size());
      bool fits = true;
      for (std::size_t j = 0; j < degree.size(); ++j) {
        if (w[j] > degree[j]) fits = false;
        else rest[j] = degree[j] - w[j];
      }
      if (!fits) continue;
      for (const auto& m : monomials_of_multidegree(alphabet, rest)) {
        if (echelon.full()) break;
        if (++rows > row_ceiling) {
          throw ResourceLimitError("oracle exceeded " + std::to_string(row_ceiling) + " rows");
        }
        std::vector<Integer> row(columns.size(), 0);
        const Polynomial product = f * Monomial(alphabet, m);
        for (const auto& [exps, coeff] : product) {
          row[column_of.at(exps)] = coeff.get_num();  // chain sums have integer coefficients
        }
        echelon.insert(std::move(row));
      }
    }
    out[degree] = columns.size() - echelon.rank();
  });
  return out;
}

}  // namespace bqs
