#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace spectre {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rat(const BigInt& value) : value_(value) {}
  Rat(const BigInt& num, const BigInt& den);
  explicit Rat(const mpq_class& value) : value_(value) { value_.canonicalize(); }

  /// Parses "p" or "p/q" with an optional leading minus sign.
  static Rat parse(std::string_view text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }
  const mpq_class& raw() const noexcept { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  BigInt floor() const;
  BigInt ceil() const;
  /// Fractional part in [0, 1).
  Rat frac() const { return *this - Rat(floor()); }
  double to_double() const { return value_.get_d(); }

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string to_string() const;

  Rat operator-() const { return Rat(mpq_class(-value_)); }
  Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
  Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
  Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
/// Exact floor of the square root of a non-negative integer.
BigInt isqrt(const BigInt& a);

}  // namespace spectre

template <>
struct std::hash<spectre::Rat> {
  std::size_t operator()(const spectre::Rat& r) const noexcept;
};
