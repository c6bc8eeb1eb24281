#pragma once

/**
 * @file partitions.hpp
 * @brief Posets, acyclic orientations and rho-restricted (P, omega)-partitions.
 *
 * Ground sets are [n]; permutations are one-line words pi(1)..pi(n) stored
 * 0-based as vectors of 1-based values. A permutation pi is read as the linear
 * order pi(1) < pi(2) < ... < pi(n).
 */

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "compositions.hpp"
#include "dyck.hpp"
#include "polynomial.hpp"

namespace slidechrom {

using Permutation = std::vector<int>;

inline bool is_permutation(const Permutation& pi) {
  std::vector<char> seen(pi.size() + 1, 0);
  for (int v : pi) {
    if (v < 1 || v > static_cast<int>(pi.size()) || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

inline Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  return p;
}

/// "645123" for n <= 9, space separated otherwise.
inline std::string permutation_string(const Permutation& pi) {
  std::ostringstream os;
  bool spaced = pi.size() > 9;
  for (std::size_t i = 0; i < pi.size(); ++i) os << (spaced && i ? " " : "") << pi[i];
  return os.str();
}

/// Calls fn on every permutation of [n] in lexicographic order (one for n = 0).
inline void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
  Permutation p = identity_permutation(n);
  do {
    fn(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

/// Strict partial order on [n], stored as a transitively closed matrix.
class Poset {
 public:
  Poset() = default;
  explicit Poset(int n) : n_(n), less_(static_cast<std::size_t>(n * n), 0) {}

  /// Transitive closure of the given pairs (i, j) meaning i < j.
  static Poset from_relations(int n, const std::vector<std::pair<int, int>>& rel) {
    Poset P(n);
    for (auto [i, j] : rel) {
      if (i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("poset: element outside [n]");
      P.less_[P.idx(i, j)] = 1;
    }
    P.close();
    return P;
  }

  /// pi(1) < pi(2) < ... < pi(n).
  static Poset chain(const Permutation& pi) {
    std::vector<std::pair<int, int>> rel;
    for (std::size_t k = 0; k + 1 < pi.size(); ++k) rel.emplace_back(pi[k], pi[k + 1]);
    return from_relations(static_cast<int>(pi.size()), rel);
  }

  int n() const { return n_; }
  bool less(int i, int j) const { return less_[idx(i, j)] != 0; }
  bool comparable(int i, int j) const { return less(i, j) || less(j, i); }

  /// i covers-below j: i < j with nothing strictly between.
  bool covers(int i, int j) const {
    if (!less(i, j)) return false;
    for (int k = 1; k <= n_; ++k)
      if (less(i, k) && less(k, j)) return false;
    return true;
  }

  std::vector<std::pair<int, int>> cover_relations() const {
    std::vector<std::pair<int, int>> c;
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j)
        if (covers(i, j)) c.emplace_back(i, j);
    return c;
  }

  std::vector<std::pair<int, int>> relations() const {
    std::vector<std::pair<int, int>> c;
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j)
        if (less(i, j)) c.emplace_back(i, j);
    return c;
  }

  bool operator==(const Poset&) const = default;

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>((i - 1) * n_ + (j - 1)); }

  void close() {
    for (int k = 1; k <= n_; ++k)
      for (int i = 1; i <= n_; ++i)
        if (less_[idx(i, k)])
          for (int j = 1; j <= n_; ++j)
            if (less_[idx(k, j)]) less_[idx(i, j)] = 1;
    for (int i = 1; i <= n_; ++i)
      if (less_[idx(i, i)]) throw std::invalid_argument("poset: relation has a cycle");
  }

  int n_ = 0;
  std::vector<unsigned char> less_;
};

/// (P, omega, rho). omega is a permutation of [n] used as labeling.
struct LabeledPoset {
  Poset order;
  Permutation omega;
  RestrictionMap rho;

  LabeledPoset() = default;
  LabeledPoset(Poset P, Permutation w, RestrictionMap r) : order(std::move(P)), omega(std::move(w)), rho(std::move(r)) {
    if (static_cast<int>(omega.size()) != order.n() || !is_permutation(omega))
      throw std::invalid_argument("labeled poset: omega is not a bijection of [n]");
    if (static_cast<int>(rho.size()) != order.n()) throw std::invalid_argument("labeled poset: rho has wrong size");
  }

  int n() const { return order.n(); }
  int label(int v) const { return omega[static_cast<std::size_t>(v - 1)]; }
  int bound(int v) const { return rho[static_cast<std::size_t>(v - 1)]; }
};

/// i < j in P_D iff i < j as integers and {i, j} is not an edge.
inline Poset incomparability_poset(const DyckGraph& G) {
  const int n = G.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (!G.has_edge(i, j) && !G.has_edge(j, k) && G.has_edge(i, k))
          throw std::invalid_argument("incomparability_poset: complement relation is not transitive");
  std::vector<std::pair<int, int>> rel;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!G.has_edge(i, j)) rel.emplace_back(i, j);
  return Poset::from_relations(n, rel);
}

/// Acyclic orientation of a graph; arcs are (source, target).
class Orientation {
 public:
  Orientation() = default;
  Orientation(DyckGraph G, std::vector<std::pair<int, int>> arcs) : graph_(std::move(G)), arcs_(std::move(arcs)) {
    if (arcs_.size() != graph_.edges().size()) throw std::invalid_argument("orientation: arc count mismatch");
    for (auto [s, t] : arcs_)
      if (!graph_.has_edge(s, t)) throw std::invalid_argument("orientation: arc is not an edge");
    if (!acyclic()) throw std::invalid_argument("orientation: not acyclic");
  }

  const DyckGraph& graph() const { return graph_; }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  bool has_arc(int s, int t) const { return std::find(arcs_.begin(), arcs_.end(), std::pair{s, t}) != arcs_.end(); }

  bool operator==(const Orientation& o) const {
    auto a = arcs_, b = o.arcs_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return graph_ == o.graph_ && a == b;
  }

 private:
  bool acyclic() const {
    const int n = graph_.n();
    std::vector<int> indeg(static_cast<std::size_t>(n + 1), 0);
    for (auto [s, t] : arcs_) ++indeg[static_cast<std::size_t>(t)];
    std::vector<int> stack;
    for (int v = 1; v <= n; ++v)
      if (indeg[static_cast<std::size_t>(v)] == 0) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++seen;
      for (auto [s, t] : arcs_)
        if (s == v && --indeg[static_cast<std::size_t>(t)] == 0) stack.push_back(t);
    }
    return seen == n;
  }

  DyckGraph graph_;
  std::vector<std::pair<int, int>> arcs_;
};

/// Edge {pi(i), pi(j)} with i < j is directed pi(j) -> pi(i).
inline Orientation orientation_from_perm(const DyckGraph& G, const Permutation& pi) {
  if (static_cast<int>(pi.size()) != G.n() || !is_permutation(pi))
    throw std::invalid_argument("orientation_from_perm: not a permutation of [n]");
  std::vector<int> pos(pi.size() + 1);
  for (std::size_t k = 0; k < pi.size(); ++k) pos[static_cast<std::size_t>(pi[k])] = static_cast<int>(k);
  std::vector<std::pair<int, int>> arcs;
  for (auto [u, v] : G.edges()) {
    if (pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(v)])
      arcs.emplace_back(v, u);
    else
      arcs.emplace_back(u, v);
  }
  return Orientation(G, std::move(arcs));
}

/// All acyclic orientations, by brute force over the 2^|E| choices.
inline std::vector<Orientation> acyclic_orientations(const DyckGraph& G) {
  auto edges = G.edges();
  std::vector<Orientation> out;
  const std::size_t m = edges.size();
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    std::vector<std::pair<int, int>> arcs;
    for (std::size_t k = 0; k < m; ++k) {
      auto [u, v] = edges[k];
      if (mask & (1UL << k))
        arcs.emplace_back(v, u);
      else
        arcs.emplace_back(u, v);
    }
    try {
      out.emplace_back(G, std::move(arcs));
    } catch (const std::invalid_argument&) {
    }
  }
  return out;
}

/**
 * Labels vertices 1, 2, ... by repeatedly removing the largest vertex of
 * indegree 0. Sources get small labels: j covered by i in P_o implies
 * omega(i) < omega(j).
 */
inline Permutation omega_labeling(const Orientation& o) {
  const int n = o.graph().n();
  std::vector<int> indeg(static_cast<std::size_t>(n + 1), 0);
  for (auto [s, t] : o.arcs()) ++indeg[static_cast<std::size_t>(t)];
  std::vector<char> removed(static_cast<std::size_t>(n + 1), 0);
  Permutation omega(static_cast<std::size_t>(n), 0);
  for (int ctr = 1; ctr <= n; ++ctr) {
    int pick = 0;
    for (int v = n; v >= 1; --v) {
      if (!removed[static_cast<std::size_t>(v)] && indeg[static_cast<std::size_t>(v)] == 0) {
        pick = v;
        break;
      }
    }
    if (pick == 0) throw std::logic_error("omega_labeling: orientation has a cycle");
    omega[static_cast<std::size_t>(pick - 1)] = ctr;
    removed[static_cast<std::size_t>(pick)] = 1;
    for (auto [s, t] : o.arcs())
      if (s == pick) --indeg[static_cast<std::size_t>(t)];
  }
  return omega;
}

/// j < i in P_o iff there is a directed path i -> ... -> j.
inline Poset poset_of_orientation(const Orientation& o) {
  std::vector<std::pair<int, int>> rel;
  for (auto [s, t] : o.arcs()) rel.emplace_back(t, s);
  return Poset::from_relations(o.graph().n(), rel);
}

/**
 * Number of edges {u, v}, u < v, with v placed before u in pi, i.e. pairs of
 * positions i < j with {pi(i), pi(j)} an edge and pi(i) > pi(j). This is the
 * number of arcs u -> v, u < v, of the orientation induced by pi.
 */
inline int inv_g(const DyckGraph& G, const Permutation& pi) {
  std::vector<int> pos(pi.size() + 1);
  for (std::size_t k = 0; k < pi.size(); ++k) pos[static_cast<std::size_t>(pi[k])] = static_cast<int>(k);
  int c = 0;
  for (auto [u, v] : G.edges())
    if (pos[static_cast<std::size_t>(v)] < pos[static_cast<std::size_t>(u)]) ++c;
  return c;
}

/// {i in [n-1] : pi(i+1) < pi(i) in P}.
inline std::set<int> p_descents(const Poset& P, const Permutation& pi) {
  std::set<int> d;
  for (std::size_t i = 0; i + 1 < pi.size(); ++i)
    if (P.less(pi[i + 1], pi[i])) d.insert(static_cast<int>(i) + 1);
  return d;
}

namespace detail {

// Top-down tightening; joined(i) says whether positions i and i+1 (0-based)
// share a chain, in which case the bound carries over unchanged.
template <class Joined>
RestrictionMap tighten(const Permutation& pi, const RestrictionMap& rho, Joined joined) {
  const std::size_t n = pi.size();
  RestrictionMap bar(n, 0);
  if (n == 0) return bar;
  auto at = [&](int v) -> int& { return bar[static_cast<std::size_t>(v - 1)]; };
  auto rho_of = [&](int v) { return rho[static_cast<std::size_t>(v - 1)]; };
  at(pi[n - 1]) = rho_of(pi[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;) {
    int above = at(pi[k + 1]);
    at(pi[k]) = joined(k) ? std::min(above, rho_of(pi[k])) : std::min(above - 1, rho_of(pi[k]));
  }
  return bar;
}

template <class Joined>
WeakComposition chains_to_composition(const Permutation& pi, const RestrictionMap& bar, Joined joined) {
  const std::size_t n = pi.size();
  if (n == 0) return {};
  std::vector<std::pair<int, int>> blocks;  // (index, size)
  std::size_t start = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k + 1 == n || !joined(k)) {
      blocks.emplace_back(bar[static_cast<std::size_t>(pi[start] - 1)], static_cast<int>(k - start + 1));
      start = k + 1;
    }
  }
  for (std::size_t b = 1; b < blocks.size(); ++b)
    if (blocks[b].first <= blocks[b - 1].first) throw std::logic_error("rdes: block indices not strictly increasing");
  int lo = blocks.front().first, hi = blocks.back().first;
  std::vector<int> e(static_cast<std::size_t>(hi - lo + 1), 0);
  for (auto [idx, size] : blocks) e[static_cast<std::size_t>(idx - lo)] = size;
  return WeakComposition(lo, std::move(e));
}

}  // namespace detail

/// Tightest restriction on the linear order L_pi; positions i and i+1 share
/// a bound when pi(i) > pi(i+1) in P. Output indexed by vertex.
inline RestrictionMap barrho(const Permutation& pi, const RestrictionMap& rho, const Poset& P) {
  return detail::tighten(pi, rho, [&](std::size_t k) { return P.less(pi[k + 1], pi[k]); });
}

/// Labeling form: positions i and i+1 share a bound when omega(pi(i)) < omega(pi(i+1)).
inline RestrictionMap barrho_by_labels(const Permutation& pi, const RestrictionMap& rho, const Permutation& omega) {
  return detail::tighten(pi, rho, [&](std::size_t k) {
    return omega[static_cast<std::size_t>(pi[k] - 1)] < omega[static_cast<std::size_t>(pi[k + 1] - 1)];
  });
}

/// Reduced weak descent composition: chains are maximal runs with
/// pi(i) > pi(i+1) in P; each contributes its size at barrho of its minimum.
inline WeakComposition rdes(const Permutation& pi, const RestrictionMap& rho, const Poset& P) {
  auto joined = [&](std::size_t k) { return P.less(pi[k + 1], pi[k]); };
  return detail::chains_to_composition(pi, detail::tighten(pi, rho, joined), joined);
}

/// Labeling form: chains split at descents of omega o pi.
inline WeakComposition rdes_by_labels(const Permutation& pi, const RestrictionMap& rho, const Permutation& omega) {
  auto joined = [&](std::size_t k) {
    return omega[static_cast<std::size_t>(pi[k] - 1)] < omega[static_cast<std::size_t>(pi[k + 1] - 1)];
  };
  return detail::chains_to_composition(pi, detail::tighten(pi, rho, joined), joined);
}

/// Calls fn on every linear extension, in lexicographic order.
inline void for_each_linear_extension(const Poset& P, const std::function<void(const Permutation&)>& fn) {
  const int n = P.n();
  Permutation cur;
  std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == n) {
      fn(cur);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      bool minimal = true;
      for (int u = 1; u <= n && minimal; ++u)
        if (!used[static_cast<std::size_t>(u)] && P.less(u, v)) minimal = false;
      if (!minimal) continue;
      used[static_cast<std::size_t>(v)] = 1;
      cur.push_back(v);
      rec();
      cur.pop_back();
      used[static_cast<std::size_t>(v)] = 0;
    }
  };
  rec();
}

inline std::vector<Permutation> linear_extensions(const Poset& P) {
  std::vector<Permutation> out;
  for_each_linear_extension(P, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

using RestrictedPartition = std::vector<int>;  ///< f(1..n) stored at [0..n-1]

/**
 * Calls fn on every f: [n] -> [w.lo, min(rho(i), w.hi)] with
 * f(i) <= f(j) on covers i < j with omega(i) < omega(j), and f(i) < f(j) on
 * covers with omega(i) > omega(j).
 */
inline void for_each_restricted_partition(const LabeledPoset& LP, const Window& w,
                                          const std::function<void(const RestrictedPartition&)>& fn) {
  const int n = LP.n();
  // Sorting by number of predecessors gives a linear extension.
  Permutation order = identity_permutation(n);
  std::vector<int> below(static_cast<std::size_t>(n + 1), 0);
  for (auto [i, j] : LP.order.relations()) ++below[static_cast<std::size_t>(j)];
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return below[static_cast<std::size_t>(a)] < below[static_cast<std::size_t>(b)]; });
  if (n == 0) {
    fn({});
    return;
  }
  std::vector<std::vector<std::pair<int, bool>>> lower(static_cast<std::size_t>(n + 1));  // (cover, strict)
  for (auto [i, j] : LP.order.cover_relations()) lower[static_cast<std::size_t>(j)].emplace_back(i, LP.label(i) > LP.label(j));
  RestrictedPartition f(static_cast<std::size_t>(n), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == order.size()) {
      fn(f);
      return;
    }
    int v = order[k];
    int lo = w.lo;
    for (auto [u, strict] : lower[static_cast<std::size_t>(v)]) lo = std::max(lo, f[static_cast<std::size_t>(u - 1)] + (strict ? 1 : 0));
    int hi = std::min(LP.bound(v), w.hi);
    for (int c = lo; c <= hi; ++c) {
      f[static_cast<std::size_t>(v - 1)] = c;
      rec(k + 1);
    }
  };
  rec(0);
}

inline std::vector<RestrictedPartition> enumerate_restricted_partitions(const LabeledPoset& LP, const Window& w) {
  std::vector<RestrictedPartition> out;
  for_each_restricted_partition(LP, w, [&](const RestrictedPartition& f) { out.push_back(f); });
  return out;
}

/// Monomial x_{f(1)} ... x_{f(n)} of a coloring or partition.
inline WeakComposition monomial_of(const std::vector<int>& f, const Window& w) {
  if (f.empty()) return {};
  std::vector<int> e(static_cast<std::size_t>(w.size()), 0);
  for (int c : f) ++e[static_cast<std::size_t>(c - w.lo)];
  return WeakComposition(w.lo, std::move(e));
}

inline TPolynomial partition_gf(const LabeledPoset& LP, const Window& w) {
  TPolynomial p(w);
  for_each_restricted_partition(LP, w, [&](const RestrictedPartition& f) { p.add_term(monomial_of(f, w), 1); });
  return p;
}

/// Hasse diagram in DOT: node text is the omega label, annotation the rho bound.
inline std::string to_dot(const LabeledPoset& LP) {
  std::ostringstream os;
  os << "digraph P {\n  rankdir=BT;\n";
  for (int v = 1; v <= LP.n(); ++v)
    os << "  " << v << " [label=\"" << LP.label(v) << "\", xlabel=\"<=" << LP.bound(v) << "\"];\n";
  for (auto [i, j] : LP.order.cover_relations()) os << "  " << i << " -> " << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace slidechrom
