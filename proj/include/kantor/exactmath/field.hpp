#pragma once

// Field descriptors. Generic code takes a field object to build constants;
// element types themselves are value types with the usual operators.

#include "kantor/exactmath/scalar.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kantor {

struct RationalField {
  using value_type = Rational;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(std::int64_t n) const { return Rational(n); }
  Rational from_frac(std::int64_t n, std::int64_t d) const { return Rational(n) / Rational(d); }
  Rational from_rational(const Rational& r) const { return r; }
  Rational parse(std::string_view s) const { return parse_rational(s); }
  std::uint32_t characteristic() const { return 0; }
  std::string name() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

class PrimeField {
 public:
  using value_type = ModInt;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("GF(p): " + std::to_string(p) + " is not prime");
    if (p < 5) {
      throw std::invalid_argument("GF(p): characteristic " + std::to_string(p) +
                                  " rejected, p >= 5 required");
    }
  }

  ModInt zero() const { return ModInt(0, p_); }
  ModInt one() const { return ModInt(1, p_); }
  ModInt from_int(std::int64_t n) const { return ModInt(n, p_); }
  ModInt from_frac(std::int64_t n, std::int64_t d) const { return from_int(n) / from_int(d); }
  ModInt from_rational(const Rational& r) const {
    const Integer pn = Integer(p_);
    Integer n = boost::multiprecision::numerator(r) % pn;
    Integer d = boost::multiprecision::denominator(r) % pn;
    if (d == 0) throw std::domain_error("denominator divisible by p in GF(" + std::to_string(p_) + ")");
    return ModInt(static_cast<std::int64_t>(n), p_) / ModInt(static_cast<std::int64_t>(d), p_);
  }
  ModInt parse(std::string_view s) const { return from_rational(parse_rational(s)); }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t p() const { return p_; }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  /// The i-th element in the fixed enumeration order 0, 1, ..., p-1.
  ModInt element(std::uint32_t i) const { return ModInt(i, p_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

/// Runtime description of the active field, as named on the command line
/// and in algebra files: "Q", "GF(p)", "gfp" (e.g. "gf5").
struct FieldSpec {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p) {
    PrimeField check(p);
    return {Kind::prime, check.p()};
  }

  static FieldSpec parse(std::string_view s) {
    if (s == "Q" || s == "q") return rationals();
    std::string_view digits;
    if (s.size() > 4 && (s.substr(0, 3) == "GF(" || s.substr(0, 3) == "gf(") && s.back() == ')') {
      digits = s.substr(3, s.size() - 4);
    } else if (s.size() > 2 && (s.substr(0, 2) == "gf" || s.substr(0, 2) == "GF")) {
      digits = s.substr(2);
    } else {
      throw std::invalid_argument("unknown field '" + std::string(s) + "' (expected Q, GF(p) or gfp)");
    }
    std::uint64_t p = 0;
    for (char ch : digits) {
      if (ch < '0' || ch > '9' || p > 1'000'000'000) {
        throw std::invalid_argument("malformed field '" + std::string(s) + "'");
      }
      p = p * 10 + static_cast<std::uint64_t>(ch - '0');
    }
    return prime(static_cast<std::uint32_t>(p));
  }

  bool is_rational() const { return kind == Kind::rationals; }
  std::string name() const { return is_rational() ? "Q" : "GF(" + std::to_string(p) + ")"; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Calls fn(field) with a RationalField or PrimeField according to spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.is_rational()) return fn(RationalField{});
  return fn(PrimeField(spec.p));
}

}  // namespace kantor
