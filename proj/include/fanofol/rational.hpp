#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <regex>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "fanofol/errors.hpp"

namespace fanofol {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction in lowest terms with a positive denominator.
///
/// Thin value wrapper over boost's cpp_rational that fixes the text format
/// ("p/q", or "p" for integers) and adds the handful of helpers the divisor
/// calculus needs (floor/ceil, integrality).
class Rational {
 public:
  using Impl = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(int v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = Impl(num, den);
  }

  /// Parses "p", "+p", "-p", "p/q", "-p/q". No whitespace, no decimals.
  static Rational parse(std::string_view text) {
    static const std::regex kPattern(R"(^([+-]?)([0-9]+)(?:/([0-9]+))?$)");
    std::string s(text);
    std::smatch m;
    if (!std::regex_match(s, m, kPattern)) {
      throw ParseError("malformed rational '" + s + "' (expected p or p/q)");
    }
    BigInt num(m[2].str());
    if (m[1].str() == "-") num = -num;
    BigInt den = 1;
    if (m[3].matched) {
      den = BigInt(m[3].str());
      if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    }
    return Rational(num, den);
  }

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_integer() const { return denominator() == 1; }
  bool is_zero() const { return v_ == 0; }
  int sign() const { return v_.sign(); }

  BigInt floor() const {
    BigInt n = numerator(), d = denominator();
    BigInt q = n / d;  // truncates toward zero
    if (n < 0 && q * d != n) q -= 1;
    return q;
  }
  BigInt ceil() const {
    BigInt f = floor();
    return f * denominator() == numerator() ? f : f + 1;
  }

  std::string str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

  const Impl& impl() const { return v_; }

  Rational operator-() const { return from_impl(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = a.v_.compare(b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static Rational from_impl(Impl v) {
    Rational r;
    r.v_ = std::move(v);
    return r;
  }

  Impl v_{0};
};

inline Rational parse_rational(std::string_view text) { return Rational::parse(text); }

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

}  // namespace fanofol
