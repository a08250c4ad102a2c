#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "error.hpp"

namespace ultratree {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction in lowest terms with a positive denominator.
///
/// All distances, labels and radii are carried as Rational so that the
/// equality tests the analyses hinge on (d == diam, t in D(X)) are exact.
class Rational {
 public:
  using value_type = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(ErrorKind::InvalidInput, "zero denominator");
    value_ = value_type(num);
    value_ /= value_type(den);
  }
  explicit Rational(value_type value) : value_(std::move(value)) {}

  /// Parses "p/q" or an integer string. Decimal or exponent notation is rejected.
  static Rational parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
      return s;
    };
    const std::string_view s = trim(text);
    auto digits_ok = [](std::string_view part, bool allow_sign) {
      if (allow_sign && !part.empty() && part.front() == '-') part.remove_prefix(1);
      if (part.empty()) return false;
      for (char c : part)
        if (c < '0' || c > '9') return false;
      return true;
    };
    const auto slash = s.find('/');
    const std::string_view num = s.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
    if (!digits_ok(num, true) || (slash != std::string_view::npos && !digits_ok(den, false)))
      throw Error(ErrorKind::InvalidInput,
                  "not an exact rational (expected \"p/q\" or an integer): \"" + std::string(text) + "\"");
    const BigInt n{std::string(num)};
    const BigInt d = slash == std::string_view::npos ? BigInt(1) : BigInt(std::string(den));
    return Rational(n, d);
  }

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  const value_type& value() const { return value_; }

  bool is_zero() const { return value_ == 0; }
  int sign() const { return value_.sign(); }

  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const {
    const BigInt den = denominator();
    if (den == 1) return numerator().str();
    return numerator().str() + "/" + den.str();
  }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::InvalidInput, "division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(value_type(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  value_type value_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace ultratree
