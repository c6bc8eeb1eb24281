#pragma once

/**
 * @file slide.hpp
 * @brief Fundamental slide polynomials, slide expansions, fundamental
 * quasisymmetric polynomials and the tail-strong decomposition of backstable
 * slides.
 */

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "compositions.hpp"
#include "polynomial.hpp"

namespace slidechrom {

/// Coefficients c_a(t) of a basis expansion sum_a c_a(t) B_a.
class BasisExpansion {
 public:
  using Map = std::map<WeakComposition, TCoefficient>;

  void add(const WeakComposition& a, const TCoefficient& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(a, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TCoefficient coefficient(const WeakComposition& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? TCoefficient{} : it->second;
  }

  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Every integer coefficient is >= 0.
  bool is_positive() const {
    return std::none_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.has_negative(); });
  }

  bool operator==(const BasisExpansion&) const = default;

 private:
  Map terms_;
};

using SlideExpansion = BasisExpansion;

/// Sum of x^b over slide_set(a, w).
inline TPolynomial slide_poly(const WeakComposition& a, const Window& w) {
  TPolynomial p(w);
  for (const auto& b : slide_set(a, w)) p.add_term(b, 1);
  return p;
}

/**
 * Generating function of the flagged chain for a: one block per nonzero
 * entry a_c (block size a_c, flag c), values weakly increasing within a
 * block, strictly increasing from one block to the next, every value in the
 * window and at most the flag of its block.
 */
inline TPolynomial slide_poly_chain_oracle(const WeakComposition& a, const Window& w) {
  std::vector<std::pair<int, int>> blocks;  // (flag, size)
  for (int c : a.support()) blocks.emplace_back(c, a[c]);
  TPolynomial p(w);
  if (blocks.empty()) {
    p.add_term(WeakComposition{}, 1);
    return p;
  }
  if (w.empty()) return p;
  std::vector<int> counts(static_cast<std::size_t>(w.size()), 0);
  // rec(block, filled, prev): prev is the last value placed; strict applies at block starts.
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t b, int filled, int prev) {
    if (b == blocks.size()) {
      p.add_term(WeakComposition(w.lo, counts), 1);
      return;
    }
    auto [flag, size] = blocks[b];
    int lo = filled == 0 ? prev + 1 : prev;
    int hi = std::min(flag, w.hi);
    for (int v = std::max(lo, w.lo); v <= hi; ++v) {
      ++counts[static_cast<std::size_t>(v - w.lo)];
      if (filled + 1 == size)
        rec(b + 1, 0, v);
      else
        rec(b, filled + 1, v);
      --counts[static_cast<std::size_t>(v - w.lo)];
    }
  };
  rec(0, 0, w.lo - 1);
  return p;
}

/// Identical to slide_poly over a window reaching into nonpositive indices.
inline TPolynomial backstable_slide_truncated(const WeakComposition& a, const Window& w) { return slide_poly(a, w); }

enum class PeelOrder { lowest_first, highest_first };

/**
 * Unique coefficients c_a with p = sum_a c_a slide_poly(a, w). Repeatedly
 * takes a dominance-minimal exponent of the remainder (ties broken by
 * lex_less, or its reverse), reads its coefficient and subtracts that
 * multiple of the slide.
 */
inline SlideExpansion expand_in_slides(const TPolynomial& p, const Window& w, PeelOrder order = PeelOrder::lowest_first) {
  for (const auto& [e, c] : p.terms())
    if (!e.supported_in(w)) throw std::domain_error("expand_in_slides: exponent outside window");
  SlideExpansion out;
  TPolynomial rest = p.widened(w);
  std::size_t max_weight = 0;
  for (const auto& [e, c] : p.terms()) max_weight = std::max<std::size_t>(max_weight, static_cast<std::size_t>(e.weight()));
  const std::size_t guard = (p.size() + 1) * (max_weight + 1) * 64 + 1024;
  std::size_t iterations = 0;
  while (!rest.is_zero()) {
    if (++iterations > guard) throw std::logic_error("expand_in_slides: no termination; input is not in the slide span");
    std::vector<WeakComposition> minimal;
    for (const auto& [e, c] : rest.terms()) {
      bool is_min = true;
      for (const auto& [f, d] : rest.terms()) {
        if (f != e && f.weight() == e.weight() && dominates(e, f)) {
          is_min = false;
          break;
        }
      }
      if (is_min) minimal.push_back(e);
    }
    auto pick = order == PeelOrder::lowest_first ? std::min_element(minimal.begin(), minimal.end(), lex_less)
                                                 : std::max_element(minimal.begin(), minimal.end(), lex_less);
    WeakComposition a = *pick;
    TCoefficient c = rest.coefficient(a);
    out.add(a, c);
    rest -= slide_poly(a, w).scaled(c);
  }
  return out;
}

/// sum_a c_a slide_poly(a, w).
inline TPolynomial assemble_slides(const SlideExpansion& e, const Window& w) {
  TPolynomial p(w);
  for (const auto& [a, c] : e.terms()) p += slide_poly(a, w).scaled(c);
  return p;
}

/**
 * F_alpha on the window: weakly increasing words i_1 <= ... <= i_n in the
 * window, strictly increasing from the last letter of one block of alpha to
 * the first letter of the next.
 */
inline TPolynomial fundamental_qsym(const StrongComposition& alpha, const Window& w) {
  TPolynomial p(w);
  if (alpha.empty()) {
    p.add_term(WeakComposition{}, 1);
    return p;
  }
  if (w.empty()) return p;
  std::vector<bool> strict_before;  // strict_before[k]: letter k must exceed letter k-1
  for (int part : alpha.parts)
    for (int k = 0; k < part; ++k) strict_before.push_back(k == 0);
  std::vector<int> counts(static_cast<std::size_t>(w.size()), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int prev) {
    if (k == strict_before.size()) {
      p.add_term(WeakComposition(w.lo, counts), 1);
      return;
    }
    int lo = k == 0 ? w.lo : (strict_before[k] ? prev + 1 : prev);
    for (int v = lo; v <= w.hi; ++v) {
      ++counts[static_cast<std::size_t>(v - w.lo)];
      rec(k + 1, v);
      --counts[static_cast<std::size_t>(v - w.lo)];
    }
  };
  rec(0, w.lo);
  return p;
}

/// F_alpha in x_1..x_m.
inline TPolynomial fundamental_qsym(const StrongComposition& alpha, int m) { return fundamental_qsym(alpha, Window(1, m)); }

/// Nonzero entries at nonpositive indices form a contiguous run ending at 0.
inline bool is_tail_strong(const WeakComposition& a) {
  if (a.is_zero() || a.min_index() > 0) return true;
  for (int i = a.min_index(); i <= 0; ++i)
    if (a[i] == 0) return false;
  return true;
}

/// One term F_{fundamental}(x_-) * slide_{slide}(x_1..x_r).
struct BackstableTerm {
  StrongComposition fundamental;
  WeakComposition slide;
  bool operator==(const BackstableTerm&) const = default;
};

/**
 * Splits a tail-strong a in S^r into F_{alpha.gamma} * slide_{a_+^delta}
 * over every way of writing flatten(a_+) as gamma.delta or gamma (.) delta
 * (near-concatenation). gamma takes the leading parts of a_+, ordered by
 * increasing weight of gamma.
 */
inline std::vector<BackstableTerm> backstable_decompose(const WeakComposition& a, int r) {
  if (!is_tail_strong(a)) throw std::domain_error("backstable_decompose: composition is not tail-strong");
  if (!a.is_zero() && a.max_index() > r) throw std::domain_error("backstable_decompose: support exceeds r");
  std::vector<int> alpha_parts;
  std::vector<std::pair<int, int>> positive;  // (index, part)
  for (int i : a.support()) {
    if (i <= 0)
      alpha_parts.push_back(a[i]);
    else
      positive.emplace_back(i, a[i]);
  }
  const StrongComposition alpha(alpha_parts);
  std::vector<BackstableTerm> out;
  // gamma = first k parts whole, plus `taken` units of part k (0 <= taken < part).
  for (std::size_t k = 0; k <= positive.size(); ++k) {
    int max_taken = k < positive.size() ? positive[k].second : 1;
    for (int taken = 0; taken < max_taken; ++taken) {
      std::vector<int> gamma;
      for (std::size_t j = 0; j < k; ++j) gamma.push_back(positive[j].second);
      if (taken > 0) gamma.push_back(taken);
      std::vector<int> rest(static_cast<std::size_t>(std::max(r, 0)), 0);
      for (std::size_t j = k; j < positive.size(); ++j) {
        int part = positive[j].second - (j == k ? taken : 0);
        rest[static_cast<std::size_t>(positive[j].first - 1)] = part;
      }
      out.push_back({concat(alpha, StrongComposition(gamma)), WeakComposition::positive(std::move(rest))});
    }
  }
  return out;
}

/// flatten(a): the fundamental that survives setting x_i = 0 for i > 0.
inline StrongComposition eta0_of_backstable_slide(const WeakComposition& a) {
  if (!is_tail_strong(a)) throw std::domain_error("eta0: composition is not tail-strong");
  return flatten(a);
}

}  // namespace slidechrom
