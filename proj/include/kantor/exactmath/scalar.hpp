#pragma once

// Exact scalars: arbitrary-precision rationals and residues modulo a prime.

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>

namespace kantor {

// Expression templates off: results are plain values, so they deduce
// cleanly in generic code.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

inline bool is_zero(const Rational& x) { return x.is_zero(); }

/// "n" for integers, "n/d" otherwise (always lowest terms, d > 0).
inline std::string to_string(const Rational& x) {
  const Integer& d = boost::multiprecision::denominator(x);
  if (d == 1) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" + d.str();
}

inline Integer parse_integer(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (body.empty()) throw std::invalid_argument("empty integer literal");
  for (char ch : body) {
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("malformed integer literal '" + std::string(s) + "'");
    }
  }
  return Integer(std::string(s));
}

inline Rational parse_rational(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(s.substr(0, slash));
  Integer den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

/// Residue modulo a prime p. A default-constructed value (p = 0) is the
/// unbound zero: it adopts the modulus of whatever it is combined with.
class ModInt {
 public:
  ModInt() = default;
  ModInt(std::int64_t v, std::uint32_t p) : p_(p) {
    assert(p != 0);
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  ModInt& operator+=(ModInt o) {
    bind(o);
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
  }
  ModInt& operator-=(ModInt o) {
    bind(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
  }
  ModInt& operator*=(ModInt o) {
    bind(o);
    v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % (p_ ? p_ : 1));
    return *this;
  }
  ModInt& operator/=(ModInt o) { return *this *= o.inverse(); }

  ModInt operator-() const {
    ModInt r = *this;
    if (r.v_ != 0) r.v_ = p_ - r.v_;
    return r;
  }

  ModInt pow(std::uint64_t e) const {
    ModInt base = *this, acc(1, p_);
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  ModInt inverse() const {
    if (v_ == 0) throw std::domain_error("division by zero in GF(p)");
    // extended Euclid on (v, p)
    std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
    while (b) {
      std::int64_t q = a / b;
      std::tie(a, b) = std::make_pair(b, a - q * b);
      std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    }
    return ModInt(x0, p_);
  }

  friend ModInt operator+(ModInt a, ModInt b) { return a += b; }
  friend ModInt operator-(ModInt a, ModInt b) { return a -= b; }
  friend ModInt operator*(ModInt a, ModInt b) { return a *= b; }
  friend ModInt operator/(ModInt a, ModInt b) { return a /= b; }
  friend bool operator==(ModInt a, ModInt b) { return a.v_ == b.v_; }
  friend auto operator<=>(ModInt a, ModInt b) { return a.v_ <=> b.v_; }

 private:
  void bind(ModInt o) {
    assert(p_ == 0 || o.p_ == 0 || p_ == o.p_);
    if (p_ == 0) p_ = o.p_;
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

inline bool is_zero(ModInt x) { return x.is_zero(); }
inline std::string to_string(ModInt x) { return std::to_string(x.value()); }

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Euler's criterion. Zero is reported as a non-residue.
inline bool is_quadratic_residue(ModInt a) {
  if (a.is_zero()) return false;
  return a.pow((a.modulus() - 1) / 2).value() == 1;
}

inline ModInt smallest_nonresidue(std::uint32_t p) {
  for (std::uint32_t z = 2; z < p; ++z) {
    if (!is_quadratic_residue(ModInt(z, p))) return ModInt(z, p);
  }
  throw std::domain_error("no quadratic non-residue modulo " + std::to_string(p));
}

/// Tonelli-Shanks. Returns the smaller of the two roots; throws for non-residues.
inline ModInt sqrt_mod(ModInt a) {
  const std::uint32_t p = a.modulus();
  if (a.is_zero()) return a;
  if (!is_quadratic_residue(a)) throw std::domain_error("sqrt_mod: not a quadratic residue");
  std::uint32_t q = p - 1, s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  ModInt z = smallest_nonresidue(p);
  ModInt c = z.pow(q);
  ModInt r = a.pow((q + 1) / 2);
  ModInt t = a.pow(q);
  std::uint32_t m = s;
  while (t.value() != 1) {
    std::uint32_t i = 0;
    ModInt tt = t;
    while (tt.value() != 1) {
      tt *= tt;
      ++i;
    }
    ModInt b = c;
    for (std::uint32_t k = 0; k + i + 1 < m; ++k) b *= b;
    r *= b;
    c = b * b;
    t *= c;
    m = i;
  }
  ModInt other = -r;
  return other.value() < r.value() ? other : r;
}

}  // namespace kantor
