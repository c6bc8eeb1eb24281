#pragma once

/**
 * @file polynomial.hpp
 * @brief Exact sparse polynomials in x_lo..x_hi with coefficients in Z[t].
 */

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "compositions.hpp"

namespace slidechrom {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial in t with integer coefficients, stored densely by degree with
/// trailing zeros trimmed. The zero polynomial stores nothing.
class TCoefficient {
 public:
  TCoefficient() = default;
  TCoefficient(int c) : TCoefficient(BigInt(c)) {}  // NOLINT(google-explicit-constructor)
  TCoefficient(BigInt c) {                            // NOLINT(google-explicit-constructor)
    if (c != 0) c_.push_back(std::move(c));
  }

  static TCoefficient monomial(int degree, BigInt c = 1) {
    TCoefficient r;
    if (c == 0) return r;
    r.c_.assign(static_cast<std::size_t>(degree) + 1, BigInt(0));
    r.c_.back() = std::move(c);
    return r;
  }

  /// From low-to-high coefficient list: {1, 3} is 1 + 3t.
  static TCoefficient from_list(std::initializer_list<int> coeffs) {
    TCoefficient r;
    for (int c : coeffs) r.c_.emplace_back(c);
    r.trim();
    return r;
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree in t; -1 for zero.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  BigInt operator[](int d) const {
    if (d < 0 || d >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(d)];
  }
  const std::vector<BigInt>& coefficients() const { return c_; }

  TCoefficient& operator+=(const TCoefficient& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  TCoefficient& operator-=(const TCoefficient& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend TCoefficient operator+(TCoefficient a, const TCoefficient& b) { return a += b; }
  friend TCoefficient operator-(TCoefficient a, const TCoefficient& b) { return a -= b; }
  TCoefficient operator-() const {
    TCoefficient r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend TCoefficient operator*(const TCoefficient& a, const TCoefficient& b) {
    TCoefficient r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }
  TCoefficient& operator*=(const BigInt& k) {
    if (k == 0) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= k;
    return *this;
  }

  /// Exact division of every coefficient by k; throws if some coefficient is
  /// not divisible.
  TCoefficient divided_exactly(const BigInt& k) const {
    TCoefficient r = *this;
    for (auto& c : r.c_) {
      if (c % k != 0) throw std::logic_error("TCoefficient: inexact division");
      c /= k;
    }
    return r;
  }

  /// Multiply by t^k.
  TCoefficient shifted(int k) const {
    if (k < 0) throw std::invalid_argument("TCoefficient: negative shift");
    TCoefficient r = *this;
    if (!r.c_.empty()) r.c_.insert(r.c_.begin(), static_cast<std::size_t>(k), BigInt(0));
    return r;
  }

  BigInt at_one() const {
    BigInt s = 0;
    for (const auto& c : c_) s += c;
    return s;
  }

  bool has_negative() const {
    return std::any_of(c_.begin(), c_.end(), [](const BigInt& c) { return c < 0; });
  }

  bool operator==(const TCoefficient&) const = default;

  /// "1+3t", "t^2", "-2+t", "0".
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = 0; d < c_.size(); ++d) {
      const BigInt& c = c_[d];
      if (c == 0) continue;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (c < 0)
        os << '-';
      else if (!first)
        os << '+';
      if (d == 0 || mag != 1) os << mag;
      if (d >= 1) os << 't';
      if (d >= 2) os << '^' << d;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

/**
 * Sparse polynomial over a variable window. The window is metadata: every
 * exponent must lie inside it, and no operation silently truncates.
 */
class TPolynomial {
 public:
  using TermMap = std::map<WeakComposition, TCoefficient>;

  TPolynomial() = default;
  explicit TPolynomial(Window w) : window_(w) {}

  static TPolynomial one(Window w = {}) {
    TPolynomial p(w);
    p.terms_.emplace(WeakComposition{}, TCoefficient(1));
    return p;
  }
  static TPolynomial monomial(const WeakComposition& e, TCoefficient c, Window w) {
    TPolynomial p(w);
    p.add_term(e, std::move(c));
    return p;
  }
  /// x_i in the window [i, i].
  static TPolynomial variable(int i) { return monomial(WeakComposition(i, {1}), 1, Window(i, i)); }

  const Window& window() const { return window_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const WeakComposition& e, const TCoefficient& c) {
    if (!e.supported_in(window_)) throw std::domain_error("TPolynomial: exponent outside window " + e.to_string());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TCoefficient coefficient(const WeakComposition& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? TCoefficient{} : it->second;
  }

  /// Same terms, larger window.
  TPolynomial widened(const Window& w) const {
    TPolynomial r = *this;
    r.window_ = hull(window_, w);
    return r;
  }

  TPolynomial& operator+=(const TPolynomial& o) {
    window_ = hull(window_, o.window_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  TPolynomial& operator-=(const TPolynomial& o) {
    window_ = hull(window_, o.window_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend TPolynomial operator+(TPolynomial a, const TPolynomial& b) { return a += b; }
  friend TPolynomial operator-(TPolynomial a, const TPolynomial& b) { return a -= b; }

  friend TPolynomial operator*(const TPolynomial& a, const TPolynomial& b) {
    TPolynomial r(hull(a.window_, b.window_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  /// Multiply every coefficient by c.
  TPolynomial scaled(const TCoefficient& c) const {
    TPolynomial r(window_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.add_term(e, v * c);
    return r;
  }

  /// Structural equality of canonical forms; windows are metadata and ignored.
  bool operator==(const TPolynomial& o) const { return terms_ == o.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      std::string cs = c.to_string();
      bool unit = cs == "1";
      if (!unit) os << '(' << cs << ')';
      if (e.is_zero()) {
        if (unit) os << '1';
        continue;
      }
      bool firstvar = unit;
      for (int i = e.min_index(); i <= e.max_index(); ++i) {
        int k = e[i];
        if (k == 0) continue;
        if (!firstvar) os << '*';
        firstvar = false;
        os << 'x' << (i < 0 ? "m" + std::to_string(-i) : std::to_string(i));
        if (k > 1) os << '^' << k;
      }
    }
    return os.str();
  }

 private:
  Window window_;
  TermMap terms_;
};

inline TPolynomial add(const TPolynomial& p, const TPolynomial& q) { return p + q; }
inline TPolynomial mul(const TPolynomial& p, const TPolynomial& q) { return p * q; }

/// Every t-exponent shifted up by k.
inline TPolynomial scale_t(const TPolynomial& p, int k) { return p.scaled(TCoefficient::monomial(k)); }

inline TCoefficient evaluate_all_ones(const TPolynomial& p) {
  TCoefficient s;
  for (const auto& [e, c] : p.terms()) s += c;
  return s;
}

inline TCoefficient coefficient(const TPolynomial& p, const WeakComposition& e) { return p.coefficient(e); }

/// Terms supported in w only, re-windowed to w.
inline TPolynomial restrict_to(const TPolynomial& p, const Window& w) {
  TPolynomial r(w);
  for (const auto& [e, c] : p.terms())
    if (e.supported_in(w)) r.add_term(e, c);
  return r;
}

// ---------------------------------------------------------------------------
// JSON
//   {"window":[lo,hi],"terms":[{"exp":{"lo":l,"entries":[...]},
//                               "t":[{"deg":d,"coef":"<decimal>"}]}]}

inline nlohmann::json to_json(const WeakComposition& e) {
  return {{"lo", e.min_index()}, {"entries", e.entries()}};
}

inline WeakComposition weak_composition_from_json(const nlohmann::json& j) {
  return WeakComposition(j.at("lo").get<int>(), j.at("entries").get<std::vector<int>>());
}

inline nlohmann::json to_json(const TCoefficient& c) {
  nlohmann::json arr = nlohmann::json::array();
  for (int d = 0; d <= c.degree(); ++d) {
    if (c[d] == 0) continue;
    arr.push_back({{"deg", d}, {"coef", c[d].str()}});
  }
  return arr;
}

inline TCoefficient tcoefficient_from_json(const nlohmann::json& j) {
  TCoefficient c;
  for (const auto& term : j) c += TCoefficient::monomial(term.at("deg").get<int>(), BigInt(term.at("coef").get<std::string>()));
  return c;
}

inline nlohmann::json to_json(const TPolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", to_json(e)}, {"t", to_json(c)}});
  return {{"window", {p.window().lo, p.window().hi}}, {"terms", terms}};
}

inline TPolynomial tpolynomial_from_json(const nlohmann::json& j) {
  const auto& w = j.at("window");
  TPolynomial p(Window(w.at(0).get<int>(), w.at(1).get<int>()));
  for (const auto& term : j.at("terms")) p.add_term(weak_composition_from_json(term.at("exp")), tcoefficient_from_json(term.at("t")));
  return p;
}

}  // namespace slidechrom
