#pragma once

#include <ostream>
#include <string>

#include <boost/integer/common_factor_rt.hpp>

#include "fanofol/rational.hpp"

namespace fanofol {

/// Divisor class beta*Lambda + gamma*A on a rank-2 Picard lattice.
/// The basis order (tautological class, fiber class) is fixed everywhere.
struct Class2 {
  Rational beta;
  Rational gamma;

  bool is_integral() const { return beta.is_integer() && gamma.is_integer(); }
  bool is_zero() const { return beta.is_zero() && gamma.is_zero(); }

  std::string str() const { return "(" + beta.str() + "," + gamma.str() + ")"; }

  friend bool operator==(const Class2&, const Class2&) = default;

  Class2 operator-() const { return {-beta, -gamma}; }
  friend Class2 operator+(const Class2& a, const Class2& b) { return {a.beta + b.beta, a.gamma + b.gamma}; }
  friend Class2 operator-(const Class2& a, const Class2& b) { return {a.beta - b.beta, a.gamma - b.gamma}; }
  friend Class2 operator*(const Rational& t, const Class2& a) { return {t * a.beta, t * a.gamma}; }

  friend std::ostream& operator<<(std::ostream& os, const Class2& c) { return os << c.str(); }
};

/// gcd(|beta|, |gamma|) of a nonzero integral class.
inline BigInt content(const Class2& v) {
  if (!v.is_integral()) throw DomainError("content of non-integral class " + v.str());
  if (v.is_zero()) throw DomainError("content of the zero class");
  BigInt a = abs(v.beta).numerator();
  BigInt b = abs(v.gamma).numerator();
  return boost::integer::gcd(a, b);
}

enum class Membership { interior, boundary, outside };

inline const char* to_string(Membership m) {
  switch (m) {
    case Membership::interior: return "interior";
    case Membership::boundary: return "boundary";
    case Membership::outside: return "outside";
  }
  return "?";
}

/// Two-dimensional rational polyhedral cone spanned by two primitive,
/// non-proportional integral rays.
class Cone2 {
 public:
  Cone2(Class2 ray1, Class2 ray2) : ray1_(std::move(ray1)), ray2_(std::move(ray2)) {
    for (const Class2* r : {&ray1_, &ray2_}) {
      if (!r->is_integral() || r->is_zero()) throw DomainError("cone ray must be a nonzero integral class");
      if (content(*r) != 1) throw DomainError("cone ray " + r->str() + " is not primitive");
    }
    if (det().is_zero()) throw DomainError("cone rays are proportional");
  }

  const Class2& ray1() const { return ray1_; }
  const Class2& ray2() const { return ray2_; }

  /// Coordinates (a, b) with v = a*ray1 + b*ray2, by Cramer's rule.
  std::pair<Rational, Rational> coordinates(const Class2& v) const {
    Rational d = det();
    Rational a = (v.beta * ray2_.gamma - v.gamma * ray2_.beta) / d;
    Rational b = (ray1_.beta * v.gamma - ray1_.gamma * v.beta) / d;
    return {a, b};
  }

  Membership membership(const Class2& v) const {
    auto [a, b] = coordinates(v);
    if (a.sign() < 0 || b.sign() < 0) return Membership::outside;
    if (a.sign() > 0 && b.sign() > 0) return Membership::interior;
    return Membership::boundary;
  }

  bool contains(const Class2& v) const { return membership(v) != Membership::outside; }

  std::string str() const { return "<" + ray1_.str() + "," + ray2_.str() + ">"; }

  friend bool operator==(const Cone2&, const Cone2&) = default;

 private:
  Rational det() const { return ray1_.beta * ray2_.gamma - ray1_.gamma * ray2_.beta; }

  Class2 ray1_;
  Class2 ray2_;
};

inline Membership cone2_membership(const Cone2& cone, const Class2& v) { return cone.membership(v); }

}  // namespace fanofol
