#pragma once

/**
 * @file compositions.hpp
 * @brief Weak and strong compositions, refinement, dominance and slide supports.
 *
 * A weak composition is an integer-indexed sequence of nonnegative integers
 * with finite support. Indices may be zero or negative; the bar notation
 * "1,1|1" places a bar between index 0 and index 1.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace slidechrom {

/// Closed integer interval [lo, hi] of variable indices. hi == lo - 1 is the
/// empty window (e.g. [1, 0] for r = 0).
struct Window {
  int lo = 1;
  int hi = 0;

  Window() = default;
  Window(int lo_, int hi_) : lo(lo_), hi(hi_) {
    if (hi < lo - 1) throw std::invalid_argument("window: hi < lo - 1");
  }

  static Window positive(int r) { return Window(1, r); }

  bool empty() const { return hi < lo; }
  int size() const { return empty() ? 0 : hi - lo + 1; }
  bool contains(int i) const { return lo <= i && i <= hi; }
  bool contains(const Window& w) const { return w.empty() || (lo <= w.lo && w.hi <= hi); }

  bool operator==(const Window&) const = default;
};

/// Smallest window containing both.
inline Window hull(const Window& a, const Window& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return Window(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

struct StrongComposition {
  std::vector<int> parts;

  StrongComposition() = default;
  StrongComposition(std::initializer_list<int> p) : StrongComposition(std::vector<int>(p)) {}
  explicit StrongComposition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
      if (x < 1) throw std::invalid_argument("strong composition: parts must be positive");
  }

  int weight() const {
    int s = 0;
    for (int x : parts) s += x;
    return s;
  }
  std::size_t length() const { return parts.size(); }
  bool empty() const { return parts.empty(); }

  auto operator<=>(const StrongComposition&) const = default;

  std::string to_string() const {
    if (parts.empty()) return "()";
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ')';
    return os.str();
  }
};

inline StrongComposition concat(const StrongComposition& a, const StrongComposition& b) {
  std::vector<int> p = a.parts;
  p.insert(p.end(), b.parts.begin(), b.parts.end());
  return StrongComposition(std::move(p));
}

/**
 * Weak composition stored as a dense window [lo, lo + entries.size()).
 *
 * Canonical form: first and last stored entries are nonzero; the all-zero
 * composition stores nothing with lo = 0. Equality and ordering act on the
 * canonical storage, hence on logical values.
 */
class WeakComposition {
 public:
  WeakComposition() = default;

  WeakComposition(int lo, std::vector<int> entries) : lo_(lo), entries_(std::move(entries)) {
    for (int x : entries_)
      if (x < 0) throw std::invalid_argument("weak composition: negative entry");
    canonicalize();
  }

  /// (a_1, ..., a_k) with the first entry at index 1.
  static WeakComposition positive(std::vector<int> entries) { return WeakComposition(1, std::move(entries)); }

  /// Bar notation: "1,2|0,2,0,1", "0202", "1|2", "11|1". Without commas
  /// every character is a single-digit entry.
  static WeakComposition parse(std::string_view text) {
    auto split = [](std::string_view s) {
      std::vector<int> out;
      if (s.empty()) return out;
      if (s.find(',') == std::string_view::npos) {
        for (char c : s) {
          if (c < '0' || c > '9') throw std::invalid_argument("weak composition: bad character");
          out.push_back(c - '0');
        }
        return out;
      }
      std::size_t start = 0;
      while (start <= s.size()) {
        auto pos = s.find(',', start);
        auto tok = s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
        if (tok.empty()) throw std::invalid_argument("weak composition: empty entry");
        int v = 0;
        for (char c : tok) {
          if (c < '0' || c > '9') throw std::invalid_argument("weak composition: bad character");
          v = v * 10 + (c - '0');
        }
        out.push_back(v);
        if (pos == std::string_view::npos) break;
        start = pos + 1;
      }
      return out;
    };
    std::string cleaned;
    for (char c : text)
      if (c != ' ' && c != '(' && c != ')') cleaned.push_back(c);
    std::string_view s = cleaned;
    auto bar = s.find('|');
    if (bar == std::string_view::npos) return positive(split(s));
    if (s.find('|', bar + 1) != std::string_view::npos) throw std::invalid_argument("weak composition: two bars");
    auto neg = split(s.substr(0, bar));
    auto pos = split(s.substr(bar + 1));
    int lo = 1 - static_cast<int>(neg.size());
    neg.insert(neg.end(), pos.begin(), pos.end());
    return WeakComposition(lo, std::move(neg));
  }

  int operator[](int i) const {
    if (i < lo_ || i >= lo_ + static_cast<int>(entries_.size())) return 0;
    return entries_[static_cast<std::size_t>(i - lo_)];
  }

  bool is_zero() const { return entries_.empty(); }
  /// Smallest index in the support (meaningless for the zero composition).
  int min_index() const { return lo_; }
  /// Largest index in the support (meaningless for the zero composition).
  int max_index() const { return lo_ + static_cast<int>(entries_.size()) - 1; }
  const std::vector<int>& entries() const { return entries_; }

  int weight() const {
    int s = 0;
    for (int x : entries_) s += x;
    return s;
  }

  bool supported_in(const Window& w) const {
    return is_zero() || (w.lo <= min_index() && max_index() <= w.hi);
  }

  std::vector<int> support() const {
    std::vector<int> s;
    for (std::size_t k = 0; k < entries_.size(); ++k)
      if (entries_[k] > 0) s.push_back(lo_ + static_cast<int>(k));
    return s;
  }

  /// Index-wise sum (monomial product).
  WeakComposition operator+(const WeakComposition& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    int lo = std::min(min_index(), o.min_index());
    int hi = std::max(max_index(), o.max_index());
    std::vector<int> e(static_cast<std::size_t>(hi - lo + 1));
    for (int i = lo; i <= hi; ++i) e[static_cast<std::size_t>(i - lo)] = (*this)[i] + o[i];
    return WeakComposition(lo, std::move(e));
  }

  /// Entries on [lo, hi] as a dense vector.
  std::vector<int> dense(const Window& w) const {
    std::vector<int> v(static_cast<std::size_t>(w.size()));
    for (int i = w.lo; i <= w.hi; ++i) v[static_cast<std::size_t>(i - w.lo)] = (*this)[i];
    return v;
  }

  auto operator<=>(const WeakComposition&) const = default;

  /// Bar notation with commas; no bar when the support is positive.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    if (min_index() >= 1) {
      for (int i = 1; i <= max_index(); ++i) os << (i > 1 ? "," : "") << (*this)[i];
      return os.str();
    }
    for (int i = min_index(); i <= 0; ++i) os << (i > min_index() ? "," : "") << (*this)[i];
    os << '|';
    for (int i = 1; i <= max_index(); ++i) os << (i > 1 ? "," : "") << (*this)[i];
    return os.str();
  }

 private:
  void canonicalize() {
    std::size_t first = 0;
    while (first < entries_.size() && entries_[first] == 0) ++first;
    if (first == entries_.size()) {
      entries_.clear();
      lo_ = 0;
      return;
    }
    std::size_t last = entries_.size();
    while (entries_[last - 1] == 0) --last;
    entries_ = std::vector<int>(entries_.begin() + static_cast<std::ptrdiff_t>(first),
                                entries_.begin() + static_cast<std::ptrdiff_t>(last));
    lo_ += static_cast<int>(first);
  }

  int lo_ = 0;
  std::vector<int> entries_;
};

/// Order on exponent vectors comparing logical values from the lowest index up.
inline bool lex_less(const WeakComposition& a, const WeakComposition& b) {
  if (a == b) return false;
  int lo = std::min(a.is_zero() ? b.min_index() : a.min_index(), b.is_zero() ? a.min_index() : b.min_index());
  int hi = std::max(a.is_zero() ? b.max_index() : a.max_index(), b.is_zero() ? a.max_index() : b.max_index());
  for (int i = lo; i <= hi; ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

inline StrongComposition flatten(const WeakComposition& a) {
  std::vector<int> p;
  for (int x : a.entries())
    if (x > 0) p.push_back(x);
  return StrongComposition(std::move(p));
}

/// Partial sums of all parts but the last: the cut set in [weight - 1].
inline std::vector<int> cut_set(const StrongComposition& alpha) {
  std::vector<int> s;
  int acc = 0;
  for (std::size_t i = 0; i + 1 < alpha.parts.size(); ++i) s.push_back(acc += alpha.parts[i]);
  return s;
}

/// True iff beta is obtained from alpha by merging adjacent parts.
inline bool refines(const StrongComposition& alpha, const StrongComposition& beta) {
  if (alpha.weight() != beta.weight()) return false;
  auto ca = cut_set(alpha);
  auto cb = cut_set(beta);
  return std::includes(ca.begin(), ca.end(), cb.begin(), cb.end());
}

/// Prefix-sum dominance: sum_{i<=k} b_i >= sum_{i<=k} a_i for every k.
inline bool dominates(const WeakComposition& b, const WeakComposition& a) {
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  int lo = std::min(a.min_index(), b.min_index());
  int hi = std::max(a.max_index(), b.max_index());
  int sb = 0, sa = 0;
  for (int i = lo; i <= hi; ++i) {
    sb += b[i];
    sa += a[i];
    if (sb < sa) return false;
  }
  return true;
}

namespace detail {

inline void slide_set_rec(const WeakComposition& a, const StrongComposition& target, const Window& w, int index,
                          int remaining, int prefix_b, int prefix_a, std::vector<int>& cur,
                          std::vector<WeakComposition>& out) {
  if (index > w.hi) {
    if (remaining != 0) return;
    WeakComposition b(w.lo, cur);
    if (refines(flatten(b), target)) out.push_back(std::move(b));
    return;
  }
  int pa = prefix_a + a[index];
  for (int v = 0; v <= remaining; ++v) {
    if (prefix_b + v < pa) continue;
    cur.push_back(v);
    slide_set_rec(a, target, w, index + 1, remaining - v, prefix_b + v, pa, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/**
 * All b with support in w such that flatten(b) refines flatten(a) and b
 * dominates a. Sorted by the canonical order.
 */
inline std::vector<WeakComposition> slide_set(const WeakComposition& a, const Window& w) {
  std::vector<WeakComposition> out;
  if (a.is_zero()) {
    out.emplace_back();
    return out;
  }
  // Mass of a strictly left of the window can never be dominated.
  if (w.empty() || a.min_index() < w.lo) return out;
  std::vector<int> cur;
  detail::slide_set_rec(a, flatten(a), w, w.lo, a.weight(), 0, 0, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// Composition of n whose cut points are the elements of S.
inline StrongComposition comp_of_subset(const std::set<int>& S, int n) {
  if (n < 0) throw std::domain_error("comp_of_subset: negative n");
  for (int s : S)
    if (s < 1 || s > n - 1) throw std::domain_error("comp_of_subset: element outside [n-1]");
  if (n == 0) return {};
  std::vector<int> parts;
  int prev = 0;
  for (int s : S) {
    parts.push_back(s - prev);
    prev = s;
  }
  parts.push_back(n - prev);
  return StrongComposition(std::move(parts));
}

/// Ribbon transpose: comp(S)^t = comp([n-1] \ S).
inline StrongComposition transpose(const StrongComposition& alpha) {
  int n = alpha.weight();
  auto cuts = cut_set(alpha);
  std::set<int> complement;
  for (int i = 1; i <= n - 1; ++i)
    if (!std::binary_search(cuts.begin(), cuts.end(), i)) complement.insert(i);
  return comp_of_subset(complement, n);
}

}  // namespace slidechrom
