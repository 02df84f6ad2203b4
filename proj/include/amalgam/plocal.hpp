#pragma once

/**
 * @file plocal.hpp
 * @brief Exact arithmetic in Z localized at a prime p.
 */

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>

#include "amalgam/error.hpp"

namespace amalgam {

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("int64 overflow in addition");
  return out;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("int64 overflow in multiplication");
  return out;
}

inline std::int64_t neg(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("int64 overflow in negation");
  return -a;
}

}  // namespace checked

/// An element num/den of Z_(p): reduced, den > 0, p ∤ den.
class PLocalRational {
 public:
  PLocalRational(std::int64_t p, std::int64_t num, std::int64_t den = 1) : p_(p) {
    if (p < 2) throw error("prime must be at least 2");
    if (den == 0) throw error("zero denominator");
    if (den < 0) {
      num = checked::neg(num);
      den = checked::neg(den);
    }
    const auto g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
    if (den_ % p_ == 0) {
      throw error(std::to_string(num) + "/" + std::to_string(den) + " is not in Z_(" + std::to_string(p) + ")");
    }
  }

  std::int64_t prime() const noexcept { return p_; }
  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_unit() const noexcept { return num_ != 0 && num_ % p_ != 0; }

  /// Exponent of p in the numerator.
  int valuation() const {
    if (num_ == 0) throw undefined_valuation_error("valuation of 0 is undefined");
    int v = 0;
    for (auto n = num_; n % p_ == 0; n /= p_) ++v;
    return v;
  }

  /// max(|num|, den).
  std::int64_t height() const noexcept { return std::max(std::abs(num_), den_); }

  friend PLocalRational operator+(const PLocalRational& x, const PLocalRational& y) {
    x.same_prime(y);
    return {x.p_, checked::add(checked::mul(x.num_, y.den_), checked::mul(y.num_, x.den_)), checked::mul(x.den_, y.den_)};
  }
  friend PLocalRational operator*(const PLocalRational& x, const PLocalRational& y) {
    x.same_prime(y);
    return {x.p_, checked::mul(x.num_, y.num_), checked::mul(x.den_, y.den_)};
  }
  PLocalRational operator-() const { return {p_, checked::neg(num_), den_}; }
  friend PLocalRational operator-(const PLocalRational& x, const PLocalRational& y) { return x + (-y); }

  friend bool operator==(const PLocalRational& x, const PLocalRational& y) {
    x.same_prime(y);
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// x / y when the quotient lies in Z_(p); y must be nonzero.
  friend std::optional<PLocalRational> divide(const PLocalRational& x, const PLocalRational& y) {
    x.same_prime(y);
    if (y.is_zero()) throw error("division by zero");
    auto num = checked::mul(x.num_, y.den_);
    auto den = checked::mul(x.den_, y.num_);
    if (den < 0) {
      num = checked::neg(num);
      den = checked::neg(den);
    }
    const auto g = std::gcd(num, den);
    if ((den / g) % x.p_ == 0) return std::nullopt;
    return PLocalRational(x.p_, num, den);
  }

 private:
  void same_prime(const PLocalRational& o) const {
    if (p_ != o.p_) {
      throw prime_mismatch_error("operands over Z_(" + std::to_string(p_) + ") and Z_(" + std::to_string(o.p_) + ")");
    }
  }

  std::int64_t p_;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Exponent k of the ideal p^k Z_(p); kZeroIdeal stands for I = (0).
inline constexpr int kZeroIdeal = std::numeric_limits<int>::max();

inline std::string exponent_to_string(int k) { return k == kZeroIdeal ? "inf" : std::to_string(k); }

inline bool in_power_ideal(const PLocalRational& x, int k) {
  if (x.is_zero()) return true;
  if (k == kZeroIdeal) return false;
  return x.valuation() >= k;
}

inline std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) out = checked::mul(out, base);
  return out;
}

/// Search order: height, then |num|, then positive before negative, then den.
inline auto rational_key(const PLocalRational& x) {
  return std::tuple{x.height(), std::abs(x.numerator()), x.numerator() < 0, x.denominator()};
}

}  // namespace amalgam
