#pragma once

/**
 * @file dyck.hpp
 * @brief Partial Dyck paths, their Dyck graphs and restriction maps.
 *
 * A path in P_{n,r} starts at (0, r), ends at (n + r, n + r), uses unit N and
 * E steps and never goes below y = x. Diagonal square k is
 * [k-1, k] x [k-1, k]; the square s(p, q) is [p-1, p] x [q-1, q]. It lies
 * below the path iff the E step crossing column p runs at height >= q.
 * Columns p <= 0 are crossed at height r (the path is extended west by E
 * steps).
 */

#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace slidechrom {

using RestrictionMap = std::vector<int>;  ///< rho(1..n) stored at [0..n-1]

class PartialDyckPath {
 public:
  PartialDyckPath() = default;

  /// Validates step counts, alphabet, and the weakly-above condition.
  PartialDyckPath(std::string steps, int n, int r) : n_(n), r_(r), steps_(std::move(steps)) {
    if (n < 0 || r < 0) throw std::invalid_argument("path: n and r must be nonnegative");
    if (steps_.size() != static_cast<std::size_t>(2 * n + r))
      throw std::invalid_argument("path: expected " + std::to_string(2 * n + r) + " steps, got " +
                                  std::to_string(steps_.size()));
    int x = 0, y = r, norths = 0;
    for (std::size_t k = 0; k < steps_.size(); ++k) {
      char c = steps_[k];
      if (c == 'N') {
        ++y;
        ++norths;
      } else if (c == 'E') {
        ++x;
      } else {
        throw std::invalid_argument(std::string("path: stray character '") + c + "'");
      }
      if (y < x) throw std::invalid_argument("path: dips below the diagonal after step " + std::to_string(k + 1));
    }
    if (norths != n) throw std::invalid_argument("path: expected " + std::to_string(n) + " N steps");
  }

  int n() const { return n_; }
  int r() const { return r_; }
  const std::string& steps() const { return steps_; }

  /// Height of the E step crossing column p (x from p-1 to p).
  int column_height(int p) const {
    if (p <= 0) return r_;
    int x = 0, y = r_;
    for (char c : steps_) {
      if (c == 'N') {
        ++y;
      } else {
        ++x;
        if (x == p) return y;
      }
    }
    throw std::out_of_range("path: column beyond the path");
  }

  std::vector<int> column_heights() const {
    std::vector<int> h;
    int y = r_;
    for (char c : steps_) {
      if (c == 'N')
        ++y;
      else
        h.push_back(y);
    }
    return h;
  }

  /// True iff s(p, q) lies below the path.
  bool square_below(int p, int q) const { return column_height(p) >= q; }

  /// "<word>@n,r"
  std::string literal() const { return steps_ + "@" + std::to_string(n_) + "," + std::to_string(r_); }

  bool operator==(const PartialDyckPath&) const = default;

 private:
  int n_ = 0;
  int r_ = 0;
  std::string steps_;
};

inline PartialDyckPath parse_path(std::string word, int n, int r) { return PartialDyckPath(std::move(word), n, r); }

/// Parses "<word>@n,r".
inline PartialDyckPath parse_path_literal(std::string_view lit) {
  auto at = lit.find('@');
  if (at == std::string_view::npos) throw std::invalid_argument("path literal: missing '@'");
  auto comma = lit.find(',', at);
  if (comma == std::string_view::npos) throw std::invalid_argument("path literal: missing ','");
  auto number = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("path literal: empty number");
    int v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw std::invalid_argument("path literal: bad number");
      v = v * 10 + (c - '0');
    }
    return v;
  };
  return PartialDyckPath(std::string(lit.substr(0, at)), number(lit.substr(at + 1, comma - at - 1)),
                         number(lit.substr(comma + 1)));
}

/// Simple graph on [n] with an adjacency matrix. Dyck graphs additionally
/// have the interval property; see has_interval_property().
class DyckGraph {
 public:
  DyckGraph() = default;
  explicit DyckGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n * n), 0) {}
  DyckGraph(int n, const std::vector<std::pair<int, int>>& edges) : DyckGraph(n) {
    for (auto [i, j] : edges) add_edge(i, j);
  }

  void add_edge(int i, int j) {
    if (i == j || i < 1 || j < 1 || i > n_ || j > n_) throw std::invalid_argument("graph: bad edge");
    adj_[idx(i, j)] = adj_[idx(j, i)] = 1;
  }

  int n() const { return n_; }
  bool has_edge(int i, int j) const { return i != j && adj_[idx(i, j)] != 0; }

  /// Edges {i, j} with i < j in lexicographic order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j)
        if (has_edge(i, j)) e.emplace_back(i, j);
    return e;
  }

  bool has_interval_property() const {
    for (auto [i, j] : edges())
      for (int a = i; a <= j; ++a)
        for (int b = a + 1; b <= j; ++b)
          if (!has_edge(a, b)) return false;
    return true;
  }

  bool operator==(const DyckGraph&) const = default;

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>((i - 1) * n_ + (j - 1)); }

  int n_ = 0;
  std::vector<unsigned char> adj_;
};

/// {i, j} is an edge iff i < j and s(i + r, j + r) lies below D.
inline DyckGraph dyck_graph(const PartialDyckPath& D) {
  const int n = D.n(), r = D.r();
  auto h = D.column_heights();
  DyckGraph G(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (h[static_cast<std::size_t>(i + r - 1)] >= j + r) G.add_edge(i, j);
  return G;
}

/// rho(i) = largest j <= r with s(j, i + r) above D, or 0 if there is none.
inline RestrictionMap restriction_map(const PartialDyckPath& D) {
  const int n = D.n(), r = D.r();
  auto h = D.column_heights();
  RestrictionMap rho(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = r; j >= 1; --j) {
      if (h[static_cast<std::size_t>(j - 1)] < i + r) {
        rho[static_cast<std::size_t>(i - 1)] = j;
        break;
      }
    }
  }
  return rho;
}

/// Calls fn on every path of P_{n,r}, in lexicographic order of the step
/// word with E < N.
inline void for_each_path(int n, int r, const std::function<void(const PartialDyckPath&)>& fn) {
  if (n < 0 || r < 0) throw std::invalid_argument("paths: n and r must be nonnegative");
  std::string word;
  std::function<void(int, int, int)> rec = [&](int x, int y, int norths) {
    if (static_cast<int>(word.size()) == 2 * n + r) {
      fn(PartialDyckPath(word, n, r));
      return;
    }
    int easts = static_cast<int>(word.size()) - norths;
    if (easts < n + r && y >= x + 1) {
      word.push_back('E');
      rec(x + 1, y, norths);
      word.pop_back();
    }
    if (norths < n) {
      word.push_back('N');
      rec(x, y + 1, norths + 1);
      word.pop_back();
    }
  };
  rec(0, r, 0);
}

inline std::vector<PartialDyckPath> enumerate_paths(int n, int r) {
  std::vector<PartialDyckPath> out;
  for_each_path(n, r, [&](const PartialDyckPath& D) { out.push_back(D); });
  return out;
}

/// Graph in DOT format; vertices annotated with their rho bound.
inline std::string to_dot(const DyckGraph& G, const RestrictionMap& rho) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int i = 1; i <= G.n(); ++i) {
    os << "  " << i << " [label=\"" << i;
    if (static_cast<int>(rho.size()) >= i) os << "\\n<=" << rho[static_cast<std::size_t>(i - 1)];
    os << "\"];\n";
  }
  for (auto [i, j] : G.edges()) os << "  " << i << " -- " << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace slidechrom
