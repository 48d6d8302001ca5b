#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace critlab {

/// Exact rational number, always in lowest terms with positive denominator.
///
/// All space indices, weights and criticality slacks are carried as
/// Rationals so that the equality case (slack == 0) is decidable; nothing
/// in the index algebra ever touches floating point. Backed by
/// arbitrary-precision integers, so chained interpolation arithmetic
/// cannot overflow.
class Rational {
public:
  using Int = boost::multiprecision::cpp_int;

  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(Int numerator, Int denominator);
  Rational(long long numerator, long long denominator)
      : Rational(Int(numerator), Int(denominator)) {}

  /// Accepts "a/b", plain integers, and finite decimal strings.
  /// Decimals convert by exact base-10 expansion ("0.75" -> 3/4), never
  /// through binary floating point.
  static std::optional<Rational> try_parse(std::string_view text);
  static Rational parse(std::string_view text);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  double to_double() const;
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  void normalize();

  Int num_;
  Int den_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

}  // namespace critlab
