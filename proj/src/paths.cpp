#include "bqs/paths.hpp"

#include <algorithm>
#include <numeric>

#include "bqs/errors.hpp"

namespace bqs {

PVector::PVector(int p, std::vector<Exponent> entries) : p_(p), entries_(std::move(entries)) {
  if (p_ < 1) throw DimensionError("p-vector needs p >= 1");
  if (entries_.size() % static_cast<std::size_t>(p_) != 0) {
    throw DimensionError("p-vector length " + std::to_string(entries_.size()) +
                         " is not a multiple of p=" + std::to_string(p_));
  }
}

PVector PVector::zero(int p, int size) {
  return PVector(p, std::vector<Exponent>(static_cast<std::size_t>(p) * size, 0));
}

PVector PVector::of_monomial(const Monomial& m) {
  return PVector(m.alphabet().p, m.exponents());
}

std::span<const Exponent> PVector::block(int k) const {
  return std::span<const Exponent>(entries_).subspan(static_cast<std::size_t>(k - 1) * p_, p_);
}

std::uint64_t PVector::total() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::uint64_t{0});
}

PVector PVector::padded(int size) const {
  if (size < this->size()) throw DimensionError("cannot pad a p-vector to a smaller size");
  std::vector<Exponent> out(entries_);
  out.resize(static_cast<std::size_t>(size) * p_, 0);
  return PVector(p_, std::move(out));
}

PVector PVector::truncated(int blocks) const {
  blocks = std::clamp(blocks, 0, size());
  return PVector(p_, std::vector<Exponent>(entries_.begin(),
                                           entries_.begin() + static_cast<std::ptrdiff_t>(blocks) * p_));
}

Monomial PVector::monomial(Alphabet alphabet) const {
  if (alphabet.p != p_ || alphabet.n != size()) {
    throw DimensionError("p-vector of size " + std::to_string(size()) +
                         " does not index a monomial over n=" + std::to_string(alphabet.n));
  }
  return Monomial(alphabet, entries_);
}

std::string to_string(const PVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.entries().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

int length(const PVector& v) {
  for (int k = v.size(); k >= 1; --k) {
    auto b = v.block(k);
    if (std::any_of(b.begin(), b.end(), [](Exponent e) { return e != 0; })) return k;
  }
  return 0;
}

MultiDegree weight(const PVector& v) {
  MultiDegree w(v.p(), 0);
  for (std::size_t i = 0; i < v.entries().size(); ++i) w[i % v.p()] += v[i];
  return w;
}

bool is_p_composition(const PVector& v) {
  int run = 0;
  for (Exponent e : v.entries()) {
    run = e == 0 ? run + 1 : 0;
    if (run >= v.p()) return false;
  }
  return true;
}

bool is_transdiagonal(std::span<const Exponent> entries, int p) {
  std::uint64_t prefix = 0;
  std::uint64_t block = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    prefix += entries[i];
    if ((i + 1) % static_cast<std::size_t>(p) == 0) {
      ++block;
      if (prefix >= block) return true;
    }
  }
  return false;
}

bool is_transdiagonal(const PVector& v) { return is_transdiagonal(v.entries(), v.p()); }

PVector reverse_vector(const PVector& v) {
  return PVector(v.p(), std::vector<Exponent>(v.entries().rbegin(), v.entries().rend()));
}

PComposition::PComposition(PVector v) : v_(std::move(v)) {
  if (!is_p_composition(v_)) {
    throw CompositionError("(" + to_string(v_) + ") contains a run of " + std::to_string(v_.p()) +
                           " zeros and is not a p-composition");
  }
}

std::size_t LatticePath::horizontal_count() const {
  return static_cast<std::size_t>(std::count(steps.begin(), steps.end(), Step::Horizontal));
}

std::size_t LatticePath::vertical_count() const {
  return static_cast<std::size_t>(std::count(steps.begin(), steps.end(), Step::Vertical));
}

std::string to_string(const LatticePath& path) {
  std::string out;
  out.reserve(path.steps.size());
  for (Step s : path.steps) out += s == Step::Horizontal ? 'H' : 'V';
  return out;
}

LatticePath path_of_vector(const PVector& v) {
  LatticePath path{v.p(), {}};
  path.steps.reserve(v.entries().size() + v.total());
  for (Exponent e : v.entries()) {
    path.steps.insert(path.steps.end(), e, Step::Horizontal);
    path.steps.push_back(Step::Vertical);
  }
  return path;
}

PVector vector_of_path(const LatticePath& path) {
  if (path.p < 1) throw PathError("path needs p >= 1");
  std::vector<Exponent> entries;
  Exponent run = 0;
  for (Step s : path.steps) {
    if (s == Step::Horizontal) {
      ++run;
    } else {
      entries.push_back(run);
      run = 0;
    }
  }
  if (run != 0) throw PathError("path ends with a horizontal run not followed by a vertical step");
  if (entries.size() % static_cast<std::size_t>(path.p) != 0) {
    throw PathError("vertical step count " + std::to_string(entries.size()) +
                    " is not a multiple of p=" + std::to_string(path.p));
  }
  return PVector(path.p, std::move(entries));
}

bool crosses_below_diagonal(const LatticePath& path) {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  for (Step s : path.steps) {
    if (s == Step::Horizontal) {
      x += static_cast<std::uint64_t>(path.p);
      if (x > y) return true;
    } else {
      ++y;
    }
  }
  return false;
}

namespace {

// Depth-first generation of Dyck vectors; after block l the running sum
// must stay <= l - 1.
class DyckEnumerator {
 public:
  DyckEnumerator(int n, int p, std::size_t ceiling)
      : p_(p), ceiling_(ceiling), current_(static_cast<std::size_t>(n) * p, 0) {}

  std::vector<PVector> run() {
    visit(0, 0);
    return std::move(out_);
  }

 private:
  void visit(std::size_t flat, std::uint64_t sum) {
    if (flat == current_.size()) {
      if (out_.size() >= ceiling_) {
        throw ResourceLimitError("p-Dyck enumeration exceeds ceiling of " +
                                 std::to_string(ceiling_) + " vectors");
      }
      out_.emplace_back(p_, current_);
      return;
    }
    const std::uint64_t block = flat / p_ + 1;
    const std::uint64_t bound = block - 1;  // prefix through this block stays below l
    for (std::uint64_t e = 0; sum + e <= bound; ++e) {
      current_[flat] = static_cast<Exponent>(e);
      visit(flat + 1, sum + e);
    }
    current_[flat] = 0;
  }

  int p_;
  std::size_t ceiling_;
  std::vector<Exponent> current_;
  std::vector<PVector> out_;
};

void bounded_rec(std::vector<Exponent>& cur, std::size_t i, std::uint64_t left,
                 const std::function<void(const std::vector<Exponent>&)>& visit) {
  if (i == cur.size()) {
    visit(cur);
    return;
  }
  for (std::uint64_t e = 0; e <= left; ++e) {
    cur[i] = static_cast<Exponent>(e);
    bounded_rec(cur, i + 1, left - e, visit);
  }
  cur[i] = 0;
}

}  // namespace

void for_each_bounded_vector(std::size_t slots, std::uint64_t max_total,
                             const std::function<void(const std::vector<Exponent>&)>& visit) {
  std::vector<Exponent> cur(slots, 0);
  bounded_rec(cur, 0, max_total, visit);
}

std::vector<PVector> enumerate_p_dyck(int n, int p, std::size_t ceiling) {
  if (n < 1 || p < 1) throw DimensionError("enumerate_p_dyck needs n >= 1 and p >= 1");
  auto out = DyckEnumerator(n, p, ceiling).run();
  for (const auto& v : out) {
    if (v.total() + 1 > static_cast<std::uint64_t>(n)) {
      throw Error("internal: p-Dyck vector with |v| >= n");
    }
  }
  return out;
}

std::vector<PVector> enumerate_minimal_transdiagonal(int n, int p) {
  if (n < 1 || p < 1) {
    throw DimensionError("enumerate_minimal_transdiagonal needs n >= 1 and p >= 1");
  }
  // A minimal vector has |v| equal to its first crossing index, so |v| <= n.
  std::vector<PVector> out;
  for_each_bounded_vector(static_cast<std::size_t>(n) * p, static_cast<std::uint64_t>(n),
                          [&](const std::vector<Exponent>& entries) {
                            PVector v(p, entries);
                            if (!is_transdiagonal(v)) return;
                            std::vector<Exponent> probe = entries;
                            for (std::size_t i = 0; i < probe.size(); ++i) {
                              if (probe[i] == 0) continue;
                              --probe[i];
                              const bool still = is_transdiagonal(PVector(p, probe));
                              ++probe[i];
                              if (still) return;
                            }
                            out.push_back(std::move(v));
                          });
  return out;
}

}  // namespace bqs
