#include "bqs/groebner.hpp"

#include <algorithm>

#include "bqs/errors.hpp"
#include "bqs/text.hpp"

namespace bqs {

std::optional<GRecursionStep> g_recursion_step(const PVector& v) {
  const auto& e = v.entries();
  const std::size_t p = static_cast<std::size_t>(v.p());
  std::size_t last = e.size();
  while (last > 0 && e[last - 1] == 0) --last;
  if (last == 0) return std::nullopt;
  // last - 1 is the flat index of the last nonzero entry.  Scan leftwards for
  // the first index that opens a run of p zeros.
  std::size_t run = 0;
  for (std::size_t i = last - 1; i-- > 0;) {
    run = e[i] == 0 ? run + 1 : 0;
    if (run == p) {
      std::vector<Exponent> reduced;
      reduced.reserve(e.size());
      reduced.insert(reduced.end(), e.begin(), e.begin() + static_cast<std::ptrdiff_t>(i));
      reduced.insert(reduced.end(), e.begin() + static_cast<std::ptrdiff_t>(i + p), e.end());
      reduced.resize(e.size(), 0);
      std::vector<Exponent> lowered = reduced;
      --lowered[i];  // the entry right after the run, nonzero since the run is rightmost
      GRecursionStep step{PVector(v.p(), std::move(reduced)), PVector(v.p(), std::move(lowered)),
                          static_cast<int>(i / p) + 1, static_cast<int>(i % p) + 1};
      return step;
    }
  }
  return std::nullopt;
}

GFamily::GFamily(Alphabet alphabet) : alphabet_(alphabet) { validate_alphabet(alphabet); }

void GFamily::check_index(const PVector& v) const {
  if (v.p() != alphabet_.p || v.size() != alphabet_.n) {
    throw DimensionError("G index (" + to_string(v) + ") must have size n=" +
                         std::to_string(alphabet_.n) + " and p=" + std::to_string(alphabet_.p));
  }
  if (!is_transdiagonal(v)) {
    throw IndexError("G index (" + to_string(v) + ") is not transdiagonal");
  }
}

const Polynomial& GFamily::element(const PVector& v) {
  if (auto it = memo_.find(v.entries()); it != memo_.end()) return it->second;
  check_index(v);

  Polynomial g(alphabet_);
  if (auto step = g_recursion_step(v)) {
    if (!is_transdiagonal(step->reduced) || !is_transdiagonal(step->lowered)) {
      throw Error("internal: G recursion left the transdiagonal set at (" + to_string(v) + ")");
    }
    g = element(step->reduced);
    g.add_scaled(element(step->lowered), -1,
                 Monomial::variable(alphabet_, step->position, step->cls));
  } else {
    g = fundamental(PComposition(v.truncated(length(v))), alphabet_);
  }
  return memo_.emplace(v.entries(), std::move(g)).first->second;
}

GCombination GFamily::combination(const PVector& v) {
  check_index(v);
  auto step = g_recursion_step(v);
  if (!step) {
    return {GTerm{1, Monomial(alphabet_), PComposition(v.truncated(length(v)))}};
  }
  GCombination out = combination(step->reduced);
  const Monomial var = Monomial::variable(alphabet_, step->position, step->cls);
  for (auto& t : combination(step->lowered)) {
    out.push_back(GTerm{-t.sign, t.multiplier * var, std::move(t.composition)});
  }
  return out;
}

ReductionRecord GFamily::normal_form(const Polynomial& f, std::size_t ceiling) {
  if (f.alphabet() != alphabet_) throw DimensionError("polynomial over a different alphabet");
  ReductionRecord record{f, {}};
  Polynomial& r = record.remainder;
  const Monomial one(alphabet_);
  auto it = r.begin();
  std::size_t steps = 0;
  while (it != r.end()) {
    if (!is_transdiagonal(it->first, alphabet_.p)) {
      ++it;
      continue;
    }
    if (++steps > ceiling) {
      throw ResourceLimitError("normal form exceeded " + std::to_string(ceiling) + " reductions");
    }
    PVector u(alphabet_.p, it->first);
    Rational c = it->second;
    // G_u is monic with leading monomial A^u, so every term it touches other
    // than A^u itself is smaller and the scan can resume right below u.
    r.add_scaled(element(u), -c, one);
    it = r.terms().upper_bound(u.entries());
    record.used.emplace_back(std::move(c), std::move(u));
  }
  return record;
}

bool GFamily::is_member(const Polynomial& f) { return normal_form(f).remainder.is_zero(); }

Polynomial groebner_element(const PVector& v, Alphabet alphabet) {
  return GFamily(alphabet).element(v);
}

GCombination g_as_f_combination(const PVector& v, Alphabet alphabet) {
  return GFamily(alphabet).combination(v);
}

ReductionRecord normal_form(const Polynomial& f) { return GFamily(f.alphabet()).normal_form(f); }

bool is_member(const Polynomial& f) { return GFamily(f.alphabet()).is_member(f); }

bool leading_monomial_check(const PVector& v) {
  const Alphabet alphabet{v.p(), v.size()};
  const Term lead = groebner_element(v, alphabet).leading_term();
  return lead.monomial.exponents() == v.entries() && lead.coefficient == 1;
}

Polynomial evaluate(const GCombination& combination, Alphabet alphabet) {
  Polynomial out(alphabet);
  for (const auto& t : combination) {
    out.add_scaled(fundamental(t.composition, alphabet), t.sign, t.multiplier);
  }
  return out;
}

std::vector<BasisElement> minimal_groebner_basis(int n, int p) {
  const Alphabet alphabet{p, n};
  GFamily family(alphabet);
  std::vector<BasisElement> out;
  for (auto& v : enumerate_minimal_transdiagonal(n, p)) {
    Polynomial g = family.element(v);
    out.push_back(BasisElement{std::move(v), std::move(g)});
  }
  return out;
}

Polynomial reduce_by_basis(const Polynomial& f, const std::vector<BasisElement>& basis,
                           std::size_t ceiling) {
  const Alphabet alphabet = f.alphabet();
  Polynomial r = f;
  auto it = r.begin();
  std::size_t steps = 0;
  while (it != r.end()) {
    const ExponentVector& u = it->first;
    auto divisor = std::find_if(basis.begin(), basis.end(), [&](const BasisElement& b) {
      const auto& w = b.index.entries();
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] > u[i]) return false;
      }
      return true;
    });
    if (divisor == basis.end()) {
      ++it;
      continue;
    }
    if (++steps > ceiling) {
      throw ResourceLimitError("basis reduction exceeded " + std::to_string(ceiling) + " steps");
    }
    const ExponentVector pivot = u;
    const Rational c = it->second;
    const Monomial shift = Monomial(alphabet, pivot) / divisor->index.monomial(alphabet);
    r.add_scaled(divisor->polynomial, -c, shift);
    it = r.terms().upper_bound(pivot);
  }
  return r;
}

GroebnerReport verify_groebner(int n, int p, const GroebnerCheckOptions& options) {
  const Alphabet alphabet{p, n};
  validate_alphabet(alphabet);
  GroebnerReport report;
  const auto basis = minimal_groebner_basis(n, p);
  report.basis_size = basis.size();

  for (const auto& b : basis) {
    const Term lead = b.polynomial.leading_term();
    if (lead.monomial.exponents() != b.index.entries() || lead.coefficient != 1) {
      report.counterexample = "G_(" + to_string(b.index) + ") has leading term " +
                              to_string(Polynomial(lead.monomial, lead.coefficient));
      return report;
    }
  }

  std::size_t work = 0;
  auto over_budget = [&] {
    if (++work <= options.max_pairs) return false;
    report.partial = true;
    return true;
  };

  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial lead_i = basis[i].index.monomial(alphabet);
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (over_budget()) return report;
      const Monomial lead_j = basis[j].index.monomial(alphabet);
      const Monomial l = lead_i.lcm(lead_j);
      Polynomial s = basis[i].polynomial * (l / lead_i);
      s.add_scaled(basis[j].polynomial, -1, l / lead_j);
      Polynomial r = reduce_by_basis(s, basis);
      ++report.pairs_checked;
      if (!r.is_zero()) {
        report.counterexample = "S(G_(" + to_string(basis[i].index) + "), G_(" +
                                to_string(basis[j].index) + ")) reduces to " + to_string(r);
        return report;
      }
    }
  }

  GFamily family(alphabet);
  const int max_size = std::min(n, options.composition_degree);
  for (int size = 1; size <= max_size; ++size) {
    std::vector<PComposition> comps;
    for_each_bounded_vector(static_cast<std::size_t>(size) * p,
                            static_cast<std::uint64_t>(options.composition_degree),
                            [&](const std::vector<Exponent>& e) {
                              PVector v(p, e);
                              if (v.total() > 0 && is_p_composition(v)) comps.emplace_back(v);
                            });
    for (const auto& c : comps) {
      const Polynomial f = fundamental(c, alphabet);
      bool stop = false;
      for_each_bounded_vector(alphabet.size(), static_cast<std::uint64_t>(options.multiplier_degree),
                              [&](const std::vector<Exponent>& e) {
                                if (stop || !report.counterexample.empty()) return;
                                if (over_budget()) {
                                  stop = true;
                                  return;
                                }
                                const Monomial m(alphabet, e);
                                const Polynomial product = f * m;
                                ++report.generators_checked;
                                Polynomial r = reduce_by_basis(product, basis);
                                if (r.is_zero()) r = family.normal_form(product).remainder;
                                if (!r.is_zero()) {
                                  report.counterexample =
                                      to_string(Polynomial(m)) + " * F_(" + to_string(c.vector()) +
                                      ") reduces to " + to_string(r);
                                }
                              });
      if (stop || !report.counterexample.empty()) return report;
    }
  }
  report.passed = true;
  return report;
}

}  // namespace bqs
