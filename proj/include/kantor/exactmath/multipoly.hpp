#pragma once

// Multivariate polynomials over Q in named variables, used for identities
// that must hold for every value of a family parameter.

#include "kantor/exactmath/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kantor {

/// Graded lexicographic order on exponent vectors (total degree first).
struct GradedLex {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

class MultiPoly {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Rational, GradedLex>;

  MultiPoly() = default;
  MultiPoly(const Rational& c) {  // NOLINT(google-explicit-constructor): constants embed implicitly
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
  }
  MultiPoly(int c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(const std::string& name) {
    MultiPoly p;
    p.vars_ = {name};
    p.terms_.emplace(Exponents{1}, Rational(1));
    return p;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }
  Rational constant_term() const {
    for (const auto& [e, c] : terms_)
      if (total_degree(e) == 0) return c;
    return Rational(0);
  }

  MultiPoly& operator+=(const MultiPoly& o) { return accumulate(o, Rational(1)); }
  MultiPoly& operator-=(const MultiPoly& o) { return accumulate(o, Rational(-1)); }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly& operator*=(const Rational& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, coef] : terms_) coef *= c;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator/(MultiPoly a, const Rational& c) {
    if (c.is_zero()) throw std::domain_error("polynomial division by zero");
    return a *= Rational(1) / c;
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly x = a, y = b;
    align(x, y);
    MultiPoly out;
    out.vars_ = x.vars_;
    for (const auto& [ea, ca] : x.terms_)
      for (const auto& [eb, cb] : y.terms_) {
        Exponents e(x.vars_.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = at(ea, i) + at(eb, i);
        out.add_term(std::move(e), ca * cb);
      }
    return out;
  }

  MultiPoly pow(unsigned k) const {
    MultiPoly acc(1), base = *this;
    while (k) {
      if (k & 1) acc *= base;
      base *= base;
      k >>= 1;
    }
    return acc;
  }

  /// Canonical equality: the difference has no terms.
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return (a - b).is_zero(); }

  /// Replaces variable `name` by the polynomial `value` throughout.
  MultiPoly substitute(const std::string& name, const MultiPoly& value) const {
    const auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return *this;
    const std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    MultiPoly out;
    for (const auto& [e, c] : terms_) {
      MultiPoly mono(c);
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        const int k = at(e, i);
        if (k == 0) continue;
        mono *= (i == idx ? value : variable(vars_[i])).pow(static_cast<unsigned>(k));
      }
      out += mono;
    }
    return out;
  }

  /// Exact evaluation; every variable with a nonzero exponent must be assigned.
  Rational eval(const std::map<std::string, Rational>& assignment) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        const int k = at(e, i);
        if (k == 0) continue;
        const auto found = assignment.find(vars_[i]);
        if (found == assignment.end()) {
          throw std::invalid_argument("poly_eval: variable '" + vars_[i] + "' has no value");
        }
        for (int j = 0; j < k; ++j) term *= found->second;
      }
      acc += term;
    }
    return acc;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        const int k = at(e, i);
        if (k == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[i];
        if (k > 1) mono += "^" + std::to_string(k);
      }
      std::string coef = kantor::to_string(c);
      if (!out.empty()) out += c < 0 ? " - " : " + ";
      else if (c < 0) out += "-";
      if (c < 0) coef = kantor::to_string(Rational(-c));
      if (mono.empty()) out += coef;
      else if (coef == "1") out += mono;
      else out += coef + "*" + mono;
    }
    return out;
  }

 private:
  static int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }
  static int at(const Exponents& e, std::size_t i) { return i < e.size() ? e[i] : 0; }

  void add_term(Exponents e, const Rational& c) {
    if (c.is_zero()) return;
    while (!e.empty() && e.back() == 0) e.pop_back();
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Extends both variable lists to their union, keeping a's order first.
  static void align(MultiPoly& a, MultiPoly& b) {
    if (a.vars_ == b.vars_) return;
    std::vector<std::string> merged = a.vars_;
    for (const auto& v : b.vars_)
      if (std::find(merged.begin(), merged.end(), v) == merged.end()) merged.push_back(v);
    a.reindex(merged);
    b.reindex(merged);
  }

  void reindex(const std::vector<std::string>& target) {
    if (vars_ == target) return;
    std::vector<std::size_t> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i)
      where[i] = static_cast<std::size_t>(std::find(target.begin(), target.end(), vars_[i]) - target.begin());
    Terms fresh;
    for (const auto& [e, c] : terms_) {
      Exponents ne(target.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
      while (!ne.empty() && ne.back() == 0) ne.pop_back();
      fresh.emplace(std::move(ne), c);
    }
    vars_ = target;
    terms_ = std::move(fresh);
  }

  MultiPoly& accumulate(const MultiPoly& o, const Rational& sign) {
    MultiPoly other = o;
    align(*this, other);
    for (const auto& [e, c] : other.terms_) add_term(e, c * sign);
    return *this;
  }

  std::vector<std::string> vars_;
  Terms terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
inline std::string to_string(const MultiPoly& p) { return p.to_string(); }

inline Rational poly_eval(const MultiPoly& p, const std::map<std::string, Rational>& assignment) {
  return p.eval(assignment);
}
inline bool poly_is_zero(const MultiPoly& p) { return p.is_zero(); }

/// Vector with polynomial coordinates.
using ParamVec = std::vector<MultiPoly>;

}  // namespace kantor
