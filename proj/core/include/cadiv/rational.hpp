// Exact integers and rationals. Everything downstream of this header is
// computed without floating point.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cadiv {

using Int = mpz_class;

/// gcd with gcd(0, n) = |n|.
std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);
Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

/// Least nonnegative residue of a modulo m (m > 0).
std::int64_t mod(std::int64_t a, std::int64_t m);

/// Multiplicative inverse of a modulo m in [0, m); throws std::invalid_argument
/// when gcd(a, m) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

/// Exact square root of a perfect square, or -1 when v is not one.
Int exact_sqrt(const Int& v);

/// Narrowing conversion that throws std::overflow_error instead of wrapping.
std::int64_t to_int64(const Int& v);
Int to_int(std::int64_t v);

/// A reduced fraction p/q with q >= 1.
class Rat {
 public:
  Rat() = default;
  Rat(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rat(const Int& value);    // NOLINT(google-explicit-constructor)
  Rat(std::int64_t num, std::int64_t den);
  Rat(const Int& num, const Int& den);

  /// Parses "p/q" or "p". Throws std::invalid_argument on malformed input or q = 0.
  static Rat parse(std::string_view text);

  Int numerator() const { return value_.get_num(); }
  Int denominator() const { return value_.get_den(); }

  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rat abs() const;
  Rat reciprocal() const;

  /// Always "p/q", including "n/1" for integers.
  std::string str() const;

  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const;

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace cadiv
