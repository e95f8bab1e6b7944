#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "hfk/errors.hpp"

namespace hfk {

/// Exact rational in reduced form with a positive denominator, stored as a
/// boost::rational. Integers convert implicitly.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d) : v_(n, d) {}

  std::int64_t numerator() const { return v_.numerator(); }
  std::int64_t denominator() const { return v_.denominator(); }

  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
  {
    if (a.v_ == b.v_) return std::strong_ordering::equal;
    return a.v_ < b.v_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

 private:
  explicit Rational(boost::rational<std::int64_t> v) : v_(v) {}
  boost::rational<std::int64_t> v_;
};

inline Rational abs(const Rational& r) { return r < 0 ? -r : r; }

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

inline std::int64_t floor(const Rational& r)
{
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

inline std::int64_t ceil(const Rational& r)
{
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
  return q;
}

/// Fractional part in [0, 1).
inline Rational frac(const Rational& r) { return r - Rational(floor(r)); }

inline std::int64_t to_integer(const Rational& r)
{
  if (!is_integer(r))
    throw error(errc::invalid_argument, "expected an integer, got a proper fraction");
  return r.numerator();
}

inline std::string to_string(const Rational& r)
{
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Accepts "n" or "n/d" with optional leading sign on n; d must be positive.
inline Rational parse_rational(std::string_view text)
{
  auto parse_int = [&](std::string_view s, bool allow_sign) -> std::int64_t {
    if (s.empty()) throw error(errc::parse_error, "malformed rational '" + std::string(text) + "'");
    std::size_t i = 0;
    bool neg = false;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) throw error(errc::parse_error, "malformed rational '" + std::string(text) + "'");
    std::int64_t v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw error(errc::parse_error, "malformed rational '" + std::string(text) + "'");
      if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, s[i] - '0', &v))
        throw error(errc::parse_error, "rational out of range '" + std::string(text) + "'");
    }
    return neg ? -v : v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, true));
  std::int64_t n = parse_int(text.substr(0, slash), true);
  std::int64_t d = parse_int(text.substr(slash + 1), false);
  if (d == 0) throw error(errc::parse_error, "zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

}  // namespace hfk
