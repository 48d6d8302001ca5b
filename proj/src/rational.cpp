#include "critlab/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>

namespace critlab {

namespace {
using Int = Rational::Int;

bool parse_integer(std::string_view s, Int& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = (s[0] == '-');
    i = 1;
  }
  if (i == s.size()) return false;
  Int v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    v = v * 10 + (s[i] - '0');
  }
  out = neg ? -v : v;
  return true;
}
}  // namespace

Rational::Rational(Int numerator, Int denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

std::optional<Rational> Rational::try_parse(std::string_view text) {
  // strip surrounding whitespace
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Int n, d;
    if (!parse_integer(text.substr(0, slash), n)) return std::nullopt;
    if (!parse_integer(text.substr(slash + 1), d)) return std::nullopt;
    if (d == 0) return std::nullopt;
    return Rational(std::move(n), std::move(d));
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view head = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty()) return std::nullopt;
    bool neg = false;
    if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
      neg = (head[0] == '-');
      head.remove_prefix(1);
    }
    Int whole = 0;
    if (!head.empty() && !parse_integer(head, whole)) return std::nullopt;
    Int digits;
    if (!parse_integer(frac, digits) || digits < 0) return std::nullopt;
    Int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Int n = whole * scale + digits;
    if (neg) n = -n;
    return Rational(std::move(n), std::move(scale));
  }

  Int n;
  if (!parse_integer(text, n)) return std::nullopt;
  return Rational(std::move(n), Int(1));
}

Rational Rational::parse(std::string_view text) {
  auto r = try_parse(text);
  if (!r) throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  return *r;
}

double Rational::to_double() const {
  return num_.convert_to<double>() / den_.convert_to<double>();
}

std::string Rational::str() const {
  std::string s = num_.str();
  if (den_ != 1) s += "/" + den_.str();
  return s;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace critlab
