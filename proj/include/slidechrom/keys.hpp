#pragma once

/**
 * @file keys.hpp
 * @brief Key (Demazure) polynomials, exact key expansions, and the search
 * for chromatic nonsymmetric polynomials that are not key-positive.
 */

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include <deque>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chromatic.hpp"
#include "compositions.hpp"
#include "dyck.hpp"
#include "parallel.hpp"
#include "polynomial.hpp"
#include "slide.hpp"

namespace slidechrom {

using KeyExpansion = BasisExpansion;
using Rational = boost::multiprecision::cpp_rational;

/**
 * Isobaric divided difference pi_i f = (x_i f - s_i(x_i f)) / (x_i - x_{i+1}).
 * The quotient is taken term by term: x_i^A x_{i+1}^B - x_i^B x_{i+1}^A is
 * divisible by x_i - x_{i+1} for every pair of exponents.
 */
inline TPolynomial demazure(const TPolynomial& f, int i) {
  TPolynomial out(hull(f.window(), Window(i, i + 1)));
  for (const auto& [e, c] : f.terms()) {
    const int A = e[i] + 1, B = e[i + 1];
    if (A == B) continue;
    const int lo = std::min(A, B), d = std::abs(A - B);
    const TCoefficient coef = A > B ? c : -c;
    // (x_i^d - x_{i+1}^d) / (x_i - x_{i+1}) = sum_k x_i^{d-1-k} x_{i+1}^k
    for (int k = 0; k < d; ++k) {
      int imin = std::min(e.is_zero() ? i : e.min_index(), i);
      int imax = std::max(e.is_zero() ? i + 1 : e.max_index(), i + 1);
      std::vector<int> v(static_cast<std::size_t>(imax - imin + 1));
      for (int j = imin; j <= imax; ++j) v[static_cast<std::size_t>(j - imin)] = e[j];
      v[static_cast<std::size_t>(i - imin)] = lo + d - 1 - k;
      v[static_cast<std::size_t>(i + 1 - imin)] = lo + k;
      out.add_term(WeakComposition(imin, std::move(v)), coef);
    }
  }
  return out;
}

namespace detail {

inline ConcurrentCache<std::pair<WeakComposition, int>, TPolynomial>& key_cache() {
  static ConcurrentCache<std::pair<WeakComposition, int>, TPolynomial> cache;
  return cache;
}

}  // namespace detail

/**
 * kappa_a in x_1..x_r: the monomial x^a when a is weakly decreasing,
 * otherwise pi_i kappa_{s_i a} for the smallest i with a_i < a_{i+1}.
 * Memoized per (a, r).
 */
inline TPolynomial key_polynomial(const WeakComposition& a, int r) {
  if (r < 1) throw std::domain_error("key_polynomial: r must be positive");
  if (!a.supported_in(Window(1, r))) throw std::domain_error("key_polynomial: support outside [1, r]");
  return detail::key_cache().get_or_compute({a, r}, [&] {
    for (int i = 1; i < r; ++i) {
      if (a[i] < a[i + 1]) {
        auto v = a.dense(Window(1, r));
        std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
        TPolynomial k = demazure(key_polynomial(WeakComposition::positive(std::move(v)), r), i);
        return restrict_to(k, Window(1, r));
      }
    }
    return TPolynomial::monomial(a, 1, Window(1, r));
  });
}

/// Weak compositions of d with support in [1, r], in canonical order.
inline std::vector<WeakComposition> weak_compositions(int d, int r) {
  std::vector<WeakComposition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == r) {
      if (left == 0) out.push_back(WeakComposition::positive(cur));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur.push_back(v);
      rec(i + 1, left - v);
      cur.pop_back();
    }
  };
  if (r >= 1) rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

/**
 * Key polynomials of degree d in r variables with an elimination order
 * discovered from the coefficient matrix itself: repeatedly pick a monomial
 * that occurs in exactly one not-yet-eliminated key. When such an order
 * exists the matrix is triangular in it and solving is exact substitution.
 */
class KeyBasis {
 public:
  KeyBasis() = default;
  KeyBasis(int d, int r) : degree_(d), r_(r), comps_(weak_compositions(d, r)) {
    const std::size_t N = comps_.size();
    std::map<WeakComposition, int> id;
    for (std::size_t k = 0; k < N; ++k) id.emplace(comps_[k], static_cast<int>(k));
    std::vector<std::vector<std::pair<int, BigInt>>> rows(N);  // key -> (monomial, coef)
    std::vector<std::vector<int>> column(N);                   // monomial -> keys
    for (std::size_t a = 0; a < N; ++a) {
      const TPolynomial kp = key_polynomial(comps_[a], r);
      for (const auto& [e, c] : kp.terms()) {
        int b = id.at(e);
        rows[a].emplace_back(b, c[0]);
        column[static_cast<std::size_t>(b)].push_back(static_cast<int>(a));
      }
    }
    dense_rows_ = rows;
    std::vector<int> count(N, 0);
    for (std::size_t b = 0; b < N; ++b) count[b] = static_cast<int>(column[b].size());
    std::vector<char> key_done(N, 0), mono_done(N, 0);
    std::deque<int> queue;
    for (std::size_t b = 0; b < N; ++b)
      if (count[b] == 1) queue.push_back(static_cast<int>(b));
    std::vector<int> rank(N, -1);
    while (!queue.empty()) {
      int b = queue.front();
      queue.pop_front();
      if (mono_done[static_cast<std::size_t>(b)] || count[static_cast<std::size_t>(b)] != 1) continue;
      int a = -1;
      for (int k : column[static_cast<std::size_t>(b)])
        if (!key_done[static_cast<std::size_t>(k)]) a = k;
      mono_done[static_cast<std::size_t>(b)] = 1;
      key_done[static_cast<std::size_t>(a)] = 1;
      rank[static_cast<std::size_t>(b)] = static_cast<int>(pivots_.size());
      pivots_.push_back({a, b});
      for (const auto& [b2, c] : rows[static_cast<std::size_t>(a)])
        if (--count[static_cast<std::size_t>(b2)] == 1 && !mono_done[static_cast<std::size_t>(b2)]) queue.push_back(b2);
    }
    triangular_ = pivots_.size() == N;
    if (!triangular_) return;
    rank_of_ = std::map<WeakComposition, int>();
    for (std::size_t b = 0; b < N; ++b) rank_of_.emplace(comps_[b], rank[b]);
    ranked_rows_.resize(N);
    for (std::size_t k = 0; k < N; ++k) {
      auto [a, b] = pivots_[k];
      for (const auto& [b2, c] : rows[static_cast<std::size_t>(a)]) {
        int rk = rank[static_cast<std::size_t>(b2)];
        if (rk < static_cast<int>(k)) throw std::logic_error("KeyBasis: elimination order is not triangular");
        ranked_rows_[k].emplace_back(rk, c);
      }
    }
  }

  bool triangular() const { return triangular_; }
  std::size_t dimension() const { return comps_.size(); }
  const std::vector<WeakComposition>& compositions() const { return comps_; }

  /// Coefficients of sum c_a kappa_a equal to the given homogeneous terms.
  KeyExpansion solve(const std::vector<std::pair<WeakComposition, TCoefficient>>& terms) const {
    if (!triangular_) throw std::logic_error("KeyBasis: no triangular order; use the dense solve");
    std::map<int, TCoefficient> residual;
    for (const auto& [e, c] : terms) residual[rank_of_.at(e)] += c;
    std::erase_if(residual, [](const auto& kv) { return kv.second.is_zero(); });
    KeyExpansion out;
    while (!residual.empty()) {
      auto [k, value] = *residual.begin();
      const auto& row = ranked_rows_[static_cast<std::size_t>(k)];
      const BigInt& pivot = row_entry(row, k);
      TCoefficient c = value.divided_exactly(pivot);
      out.add(comps_[static_cast<std::size_t>(pivots_[static_cast<std::size_t>(k)].first)], c);
      for (const auto& [rk, m] : row) {
        TCoefficient delta = c;
        delta *= m;
        auto& slot = residual[rk];
        slot -= delta;
        if (slot.is_zero()) residual.erase(rk);
      }
    }
    return out;
  }

  /// Plain Gaussian elimination over Q on the full square system.
  KeyExpansion solve_dense(const std::vector<std::pair<WeakComposition, TCoefficient>>& terms) const {
    const std::size_t N = comps_.size();
    int tdeg = -1;
    for (const auto& [e, c] : terms) tdeg = std::max(tdeg, c.degree());
    KeyExpansion out;
    if (tdeg < 0) return out;
    const std::size_t R = static_cast<std::size_t>(tdeg) + 1;
    std::map<WeakComposition, std::size_t> id;
    for (std::size_t k = 0; k < N; ++k) id.emplace(comps_[k], k);
    // Row b (monomial), column a (key); augmented by one column per t-degree.
    std::vector<std::vector<Rational>> M(N, std::vector<Rational>(N + R));
    for (std::size_t a = 0; a < N; ++a)
      for (const auto& [b, c] : dense_rows_[a]) M[static_cast<std::size_t>(b)][a] = Rational(c);
    for (const auto& [e, c] : terms)
      for (std::size_t d = 0; d < R; ++d) M[id.at(e)][N + d] += Rational(c[static_cast<int>(d)]);
    for (std::size_t col = 0; col < N; ++col) {
      std::size_t piv = col;
      while (piv < N && M[piv][col] == 0) ++piv;
      if (piv == N) throw std::logic_error("expand_in_keys: singular key system");
      std::swap(M[piv], M[col]);
      Rational inv = 1 / M[col][col];
      for (auto& x : M[col]) x *= inv;
      for (std::size_t row = 0; row < N; ++row) {
        if (row == col || M[row][col] == 0) continue;
        Rational f = M[row][col];
        for (std::size_t j = col; j < N + R; ++j)
          if (M[col][j] != 0) M[row][j] -= f * M[col][j];
      }
    }
    for (std::size_t a = 0; a < N; ++a) {
      TCoefficient c;
      for (std::size_t d = 0; d < R; ++d) {
        const Rational& x = M[a][N + d];
        if (denominator(x) != 1) throw std::logic_error("expand_in_keys: non-integral key coefficient");
        c += TCoefficient::monomial(static_cast<int>(d), numerator(x));
      }
      out.add(comps_[a], c);
    }
    return out;
  }

 private:
  static const BigInt& row_entry(const std::vector<std::pair<int, BigInt>>& row, int k) {
    for (const auto& [rk, c] : row)
      if (rk == k) return c;
    throw std::logic_error("KeyBasis: missing pivot entry");
  }

  int degree_ = 0;
  int r_ = 0;
  std::vector<WeakComposition> comps_;
  std::vector<std::vector<std::pair<int, BigInt>>> dense_rows_;
  std::vector<std::pair<int, int>> pivots_;  // (key, monomial) in elimination order
  std::map<WeakComposition, int> rank_of_;
  std::vector<std::vector<std::pair<int, BigInt>>> ranked_rows_;
  bool triangular_ = false;
};

namespace detail {

inline const KeyBasis& key_basis(int d, int r) {
  static ConcurrentCache<std::pair<int, int>, KeyBasis> cache;
  return cache.get_or_compute({d, r}, [&] { return KeyBasis(d, r); });
}

inline std::map<int, std::vector<std::pair<WeakComposition, TCoefficient>>> by_degree(const TPolynomial& p, int r) {
  if (r < 1) throw std::domain_error("expand_in_keys: r must be positive");
  std::map<int, std::vector<std::pair<WeakComposition, TCoefficient>>> slices;
  for (const auto& [e, c] : p.terms()) {
    if (!e.supported_in(Window(1, r))) throw std::domain_error("expand_in_keys: exponent outside [1, r]");
    slices[e.weight()].emplace_back(e, c);
  }
  return slices;
}

}  // namespace detail

/// Unique c_a(t) with p = sum_a c_a(t) kappa_a, solved exactly per homogeneous degree.
inline KeyExpansion expand_in_keys(const TPolynomial& p, int r) {
  KeyExpansion out;
  for (const auto& [d, terms] : detail::by_degree(p, r)) {
    const KeyBasis& basis = detail::key_basis(d, r);
    auto part = basis.triangular() ? basis.solve(terms) : basis.solve_dense(terms);
    for (const auto& [a, c] : part.terms()) out.add(a, c);
  }
  return out;
}

/// Same contract as expand_in_keys, always through dense elimination over Q.
inline KeyExpansion expand_in_keys_dense(const TPolynomial& p, int r) {
  KeyExpansion out;
  for (const auto& [d, terms] : detail::by_degree(p, r)) {
    const KeyExpansion part = detail::key_basis(d, r).solve_dense(terms);
    for (const auto& [a, c] : part.terms()) out.add(a, c);
  }
  return out;
}

inline bool is_key_positive(const KeyExpansion& e) { return e.is_positive(); }

/// Key expansion of slide_poly(a, [1, r]), memoized.
inline const KeyExpansion& slide_key_expansion(const WeakComposition& a, int r) {
  static ConcurrentCache<std::pair<WeakComposition, int>, KeyExpansion> cache;
  return cache.get_or_compute({a, r}, [&] { return expand_in_keys(slide_poly(a, Window(1, r)), r); });
}

/// Key expansion of the chromatic polynomial over [1, r], assembled from the
/// slide expansion by linearity.
inline KeyExpansion chromatic_key_expansion(const PartialDyckPath& D, int r) {
  KeyExpansion out;
  const SlideExpansion slides = chromatic_slide_expansion(D);
  for (const auto& [a, c] : slides.terms()) {
    if (!a.supported_in(Window(1, r))) continue;  // slide vanishes on [1, r]
    for (const auto& [k, v] : slide_key_expansion(a, r).terms()) out.add(k, v * c);
  }
  return out;
}

struct CounterexampleRecord {
  PartialDyckPath path;
  WeakComposition composition;
  TCoefficient coefficient;
  bool operator==(const CounterexampleRecord&) const = default;
};

/**
 * Every negative key coefficient of X_D(x_r; t) for D in P_{n,r}, r <= r_max,
 * ordered by r, then path enumeration order, then composition.
 */
inline std::vector<CounterexampleRecord> search_counterexamples(int n, int r_max, unsigned threads = 1) {
  std::vector<CounterexampleRecord> out;
  for (int r = 1; r <= r_max; ++r) {
    auto paths = enumerate_paths(n, r);
    auto found = parallel_map<std::vector<CounterexampleRecord>>(paths.size(), threads, [&](std::size_t k) {
      std::vector<CounterexampleRecord> recs;
      const KeyExpansion e = chromatic_key_expansion(paths[k], r);
      for (const auto& [a, c] : e.terms())
        if (c.has_negative()) recs.push_back({paths[k], a, c});
      return recs;
    });
    for (auto& recs : found) out.insert(out.end(), recs.begin(), recs.end());
  }
  return out;
}

inline nlohmann::json to_json(const CounterexampleRecord& rec) {
  return {{"path", rec.path.literal()},
          {"composition", to_json(rec.composition)},
          {"composition_text", rec.composition.to_string()},
          {"coefficient", to_json(rec.coefficient)}};
}

inline CounterexampleRecord counterexample_from_json(const nlohmann::json& j) {
  CounterexampleRecord rec{parse_path_literal(j.at("path").get<std::string>()), weak_composition_from_json(j.at("composition")),
                           tcoefficient_from_json(j.at("coefficient"))};
  if (!rec.coefficient.has_negative()) throw std::invalid_argument("counterexample record: coefficient has no negative entry");
  return rec;
}

}  // namespace slidechrom
