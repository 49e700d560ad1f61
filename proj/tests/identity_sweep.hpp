#pragma once

// Sweeps of the variable-times-G rewriting rules over every small index shape
// at p = 2.  Shared by the unit tests and the acceptance binary.

#include <functional>
#include <string>
#include <vector>

#include "bqs/groebner.hpp"
#include "bqs/paths.hpp"

namespace sweep {

using bqs::Exponent;

// u = w (alpha, beta) d 0*, with (alpha, beta) in block k.
struct Shape {
  std::vector<Exponent> w;  // k - 1 blocks
  Exponent alpha = 0;
  Exponent beta = 0;
  std::vector<Exponent> d;  // a 2-composition, possibly empty
  int k = 1;

  // (alpha+1, beta, d) contains 0, 0 when beta = 0 and d opens with 0.
  bool straddles() const { return beta == 0 && !d.empty() && d[0] == 0; }
};

enum class Rule {
  XShift,          // x_k G_{w a b d} = G_{w (a+1) b d} - G_{w 0 0 (a+1) b d}
  YShiftAsPrinted, // y_k G_{w a b d} = G_{w a (b+1) d} - G_{w 0 0 a (b+1) d}
  YShift,          // y_k G_{w a b d} = G_{w a (b+1) d} - G_{w a 0 0 (b+1) d}
  XFresh,          // x_k G_{w 0*}   = G_{w 0* (1,0)@k} - G_{w 0* (1,0)@k+1}
  YFresh,          // y_k G_{w 0*}   = G_{w 0* (0,1)@k} - G_{w 0* (0,1)@k+1}
};

struct Result {
  std::size_t shapes = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

inline std::vector<Exponent> concat(std::initializer_list<std::vector<Exponent>> parts, int n) {
  std::vector<Exponent> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  if (out.size() > static_cast<std::size_t>(2 * n)) return {};
  out.resize(static_cast<std::size_t>(2 * n), 0);
  return out;
}

inline std::string show(const std::vector<Exponent>& e) { return bqs::to_string(bqs::PVector(2, e)); }

// Visits every shape with entries <= 2, |u| <= n + 1, u transdiagonal, and
// room for the one-block shift inside n blocks.
inline void for_each_shape(int n, const std::function<void(const Shape&)>& visit) {
  for (int k = 1; k <= n - 1; ++k) {
    std::vector<std::vector<Exponent>> ws;
    bqs::for_each_bounded_vector(static_cast<std::size_t>(2 * (k - 1)), static_cast<std::uint64_t>(n + 1),
                                 [&](const std::vector<Exponent>& w) {
                                   for (Exponent x : w)
                                     if (x > 2) return;
                                   ws.push_back(w);
                                 });
    std::vector<std::vector<Exponent>> ds{{}};
    for (int size = 1; size <= n - k - 1; ++size) {
      bqs::for_each_bounded_vector(static_cast<std::size_t>(2 * size), static_cast<std::uint64_t>(n + 1),
                                   [&](const std::vector<Exponent>& d) {
                                     for (Exponent x : d)
                                       if (x > 2) return;
                                     if (bqs::is_p_composition(bqs::PVector(2, d))) ds.push_back(d);
                                   });
    }
    for (const auto& w : ws) {
      for (Exponent a = 0; a <= 2; ++a) {
        for (Exponent b = 0; b <= 2; ++b) {
          if (a == 0 && b == 0) continue;
          for (const auto& d : ds) {
            Shape s{w, a, b, d, k};
            const auto u = concat({w, {a, b}, d}, n);
            std::uint64_t total = 0;
            for (Exponent x : u) total += x;
            if (total > static_cast<std::uint64_t>(n + 1)) continue;
            if (!bqs::is_transdiagonal(bqs::PVector(2, u))) continue;
            visit(s);
          }
        }
      }
    }
  }
}

inline Result run(Rule rule, int n, const std::function<bool(const Shape&)>& keep = nullptr) {
  const bqs::Alphabet alphabet{2, n};
  bqs::GFamily family(alphabet);
  Result result;
  auto check = [&](const std::vector<Exponent>& u, const std::vector<Exponent>& u1,
                   const std::vector<Exponent>& u2, int k, int cls) {
    ++result.shapes;
    std::string why;
    const bqs::PVector v(2, u), v1(2, u1), v2(2, u2);
    if (!bqs::is_transdiagonal(v1) || !bqs::is_transdiagonal(v2)) {
      why = "right-hand index not transdiagonal";
    } else {
      const bqs::Polynomial lhs = family.element(v) * bqs::Monomial::variable(alphabet, k, cls);
      const bqs::Polynomial rhs = family.element(v1) - family.element(v2);
      if (!(lhs == rhs)) why = "polynomials differ";
    }
    if (why.empty()) return;
    if (result.failures++ == 0) {
      result.first_failure = std::string(cls == 1 ? "x" : "y") + std::to_string(k) + " * G(" +
                             show(u) + ") vs G(" + show(u1) + ") - G(" + show(u2) + "): " + why;
    }
  };

  if (rule == Rule::XFresh || rule == Rule::YFresh) {
    bqs::for_each_bounded_vector(static_cast<std::size_t>(2 * n), static_cast<std::uint64_t>(n),
                                 [&](const std::vector<Exponent>& u) {
      const bqs::PVector v(2, u);
      if (!bqs::is_transdiagonal(v)) return;
      const int cls = rule == Rule::XFresh ? 1 : 2;
      for (int k = bqs::length(v) + 1; k <= n - 1; ++k) {
        auto u1 = u, u2 = u;
        u1[static_cast<std::size_t>(2 * (k - 1) + cls - 1)] = 1;
        u2[static_cast<std::size_t>(2 * k + cls - 1)] = 1;
        check(u, u1, u2, k, cls);
      }
    });
    return result;
  }

  for_each_shape(n, [&](const Shape& s) {
    if (keep && !keep(s)) return;
    const auto u = concat({s.w, {s.alpha, s.beta}, s.d}, n);
    std::vector<Exponent> u1, u2;
    int cls = 1;
    switch (rule) {
      case Rule::XShift:
        u1 = concat({s.w, {s.alpha + 1, s.beta}, s.d}, n);
        u2 = concat({s.w, {0, 0, s.alpha + 1, s.beta}, s.d}, n);
        break;
      case Rule::YShiftAsPrinted:
        cls = 2;
        u1 = concat({s.w, {s.alpha, s.beta + 1}, s.d}, n);
        u2 = concat({s.w, {0, 0, s.alpha, s.beta + 1}, s.d}, n);
        break;
      case Rule::YShift:
        cls = 2;
        u1 = concat({s.w, {s.alpha, s.beta + 1}, s.d}, n);
        u2 = concat({s.w, {s.alpha, 0, 0, s.beta + 1}, s.d}, n);
        break;
      default:
        break;
    }
    check(u, u1, u2, s.k, cls);
  });
  return result;
}

}  // namespace sweep
