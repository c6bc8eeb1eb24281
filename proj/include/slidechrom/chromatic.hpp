#pragma once

/**
 * @file chromatic.hpp
 * @brief Chromatic nonsymmetric polynomials of Dyck graphs: brute-force
 * coloring enumeration, the slide expansion over permutations, and the
 * fundamental quasisymmetric expansion of the stable limit.
 */

#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "compositions.hpp"
#include "dyck.hpp"
#include "partitions.hpp"
#include "polynomial.hpp"
#include "slide.hpp"

namespace slidechrom {

/**
 * Sum over proper colorings f with f(i) in [w.lo, min(rho(i), w.hi)] of
 * t^{des(f)} x_{f(1)} ... x_{f(n)}; a descent is an edge {i, j}, i < j, with
 * f(i) > f(j).
 */
inline TPolynomial chromatic_brute(const PartialDyckPath& D, const Window& w) {
  const int n = D.n();
  const DyckGraph G = dyck_graph(D);
  const RestrictionMap rho = restriction_map(D);
  TPolynomial p(w);
  if (n == 0) {
    p.add_term(WeakComposition{}, 1);
    return p;
  }
  // Neighbours below v form the range [first_below[v], v - 1].
  std::vector<int> first_below(static_cast<std::size_t>(n + 1));
  for (int v = 1; v <= n; ++v) {
    int u = v;
    while (u > 1 && G.has_edge(u - 1, v)) --u;
    first_below[static_cast<std::size_t>(v)] = u;
  }
  std::vector<int> f(static_cast<std::size_t>(n + 1), 0);
  std::map<std::vector<int>, std::vector<long long>> acc;  // dense exponent -> counts by t-degree
  std::vector<int> counts(static_cast<std::size_t>(w.size()), 0);
  std::function<void(int, int)> rec = [&](int v, int des) {
    if (v > n) {
      auto& slot = acc[counts];
      if (slot.size() <= static_cast<std::size_t>(des)) slot.resize(static_cast<std::size_t>(des) + 1, 0);
      ++slot[static_cast<std::size_t>(des)];
      return;
    }
    int hi = std::min(rho[static_cast<std::size_t>(v - 1)], w.hi);
    for (int c = w.lo; c <= hi; ++c) {
      int d = des;
      bool proper = true;
      for (int u = first_below[static_cast<std::size_t>(v)]; u < v; ++u) {
        int fu = f[static_cast<std::size_t>(u)];
        if (fu == c) {
          proper = false;
          break;
        }
        if (fu > c) ++d;
      }
      if (!proper) continue;
      f[static_cast<std::size_t>(v)] = c;
      ++counts[static_cast<std::size_t>(c - w.lo)];
      rec(v + 1, d);
      --counts[static_cast<std::size_t>(c - w.lo)];
    }
  };
  rec(1, 0);
  for (const auto& [e, byDeg] : acc) {
    TCoefficient c;
    for (std::size_t d = 0; d < byDeg.size(); ++d)
      if (byDeg[d]) c += TCoefficient::monomial(static_cast<int>(d), BigInt(byDeg[d]));
    p.add_term(WeakComposition(w.lo, e), c);
  }
  return p;
}

/// sum over pi in S_n of t^{inv_G(pi)} at rdes(pi, rho_D, P_D).
inline SlideExpansion chromatic_slide_expansion(const PartialDyckPath& D) {
  const DyckGraph G = dyck_graph(D);
  const RestrictionMap rho = restriction_map(D);
  const Poset P = incomparability_poset(G);
  SlideExpansion e;
  for_each_permutation(D.n(), [&](const Permutation& pi) { e.add(rdes(pi, rho, P), TCoefficient::monomial(inv_g(G, pi))); });
  return e;
}

struct TheoremResult {
  TPolynomial polynomial;
  SlideExpansion expansion;
};

/// sum_pi t^{inv_G(pi)} slide_poly(rdes(pi), w), assembled and as an expansion.
inline TheoremResult chromatic_theorem(const PartialDyckPath& D, const Window& w) {
  TheoremResult r{TPolynomial(w), chromatic_slide_expansion(D)};
  r.polynomial = assemble_slides(r.expansion, w);
  return r;
}

struct MismatchTerm {
  WeakComposition exponent;
  TCoefficient difference;  ///< brute minus theorem
};

struct ChromaticReport {
  PartialDyckPath path;
  Window window;
  TPolynomial brute;
  TPolynomial theorem;
  bool equal = false;
  bool slide_positive = false;
  SlideExpansion slide_expansion;
  std::vector<MismatchTerm> mismatch_terms;
};

inline ChromaticReport verify_theorem(const PartialDyckPath& D, const Window& w) {
  ChromaticReport rep;
  rep.path = D;
  rep.window = w;
  rep.brute = chromatic_brute(D, w);
  auto th = chromatic_theorem(D, w);
  rep.theorem = th.polynomial;
  rep.slide_expansion = th.expansion;
  rep.slide_positive = th.expansion.is_positive();
  TPolynomial diff = rep.brute - rep.theorem;
  for (const auto& [e, c] : diff.terms()) rep.mismatch_terms.push_back({e, c});
  rep.equal = rep.mismatch_terms.empty();
  return rep;
}

/// sum_pi t^{inv_G(pi)} at comp(Des_{P_D}(pi))^t.
inline std::map<StrongComposition, TCoefficient> chromatic_qsym_fundamental(const PartialDyckPath& D) {
  const DyckGraph G = dyck_graph(D);
  const Poset P = incomparability_poset(G);
  std::map<StrongComposition, TCoefficient> out;
  for_each_permutation(D.n(), [&](const Permutation& pi) {
    auto key = transpose(comp_of_subset(p_descents(P, pi), D.n()));
    out[key] += TCoefficient::monomial(inv_g(G, pi));
  });
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

/// sum_alpha c_alpha F_alpha on the window.
inline TPolynomial assemble_fundamentals(const std::map<StrongComposition, TCoefficient>& e, const Window& w) {
  TPolynomial p(w);
  for (const auto& [alpha, c] : e) p += fundamental_qsym(alpha, w).scaled(c);
  return p;
}

/// Colorings in [1 - m, 0] against the fundamental expansion on the same window.
inline bool verify_corollary(const PartialDyckPath& D, int m) {
  if (m < 1) throw std::invalid_argument("verify_corollary: m must be positive");
  const Window w(1 - m, 0);
  return chromatic_brute(D, w) == assemble_fundamentals(chromatic_qsym_fundamental(D), w);
}

}  // namespace slidechrom
