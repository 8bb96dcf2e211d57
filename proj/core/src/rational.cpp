#include "cadiv/rational.hpp"

#include <cstdlib>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace cadiv {

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("mod: modulus must be positive");
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("mod_inverse: modulus must be positive");
  if (m == 1) return 0;
  // Extended Euclid on (a mod m, m).
  std::int64_t old_r = mod(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) {
    throw std::invalid_argument("mod_inverse: " + std::to_string(a) +
                                " is not invertible modulo " + std::to_string(m));
  }
  return mod(old_s, m);
}

Int exact_sqrt(const Int& v) {
  if (v < 0) return Int(-1);
  if (mpz_perfect_square_p(v.get_mpz_t()) == 0) return Int(-1);
  Int r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

static_assert(sizeof(long) == sizeof(std::int64_t), "Int conversions assume LP64");

std::int64_t to_int64(const Int& v) {
  if (mpz_fits_slong_p(v.get_mpz_t()) == 0) {
    throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
  }
  return static_cast<std::int64_t>(v.get_si());
}

Int to_int(std::int64_t v) { return Int(static_cast<long>(v)); }

Rat::Rat(std::int64_t value) : value_(to_int(value)) {}

Rat::Rat(const Int& value) : value_(value) {}

Rat::Rat(std::int64_t num, std::int64_t den) : Rat(to_int(num), to_int(den)) {}

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("Rat: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const auto digits = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false)) {
    throw std::invalid_argument("Rat::parse: not an exact fraction: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  return Rat(Int(n), Int(std::string(den)));
}

Rat Rat::abs() const { return sign() < 0 ? -*this : *this; }

Rat Rat::reciprocal() const {
  if (sign() == 0) throw std::domain_error("Rat: reciprocal of zero");
  return Rat(denominator(), numerator());
}

std::string Rat::str() const { return numerator().get_str() + "/" + denominator().get_str(); }

Rat& Rat::operator+=(const Rat& o) {
  value_ += o.value_;
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  value_ -= o.value_;
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  value_ *= o.value_;
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.sign() == 0) throw std::domain_error("Rat: division by zero");
  value_ /= o.value_;
  return *this;
}

Rat Rat::operator-() const {
  Rat r;
  r.value_ = -value_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace cadiv
