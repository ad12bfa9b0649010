#pragma once

#include <concepts>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "ybe/laurent.hpp"
#include "ybe/rational.hpp"

namespace ybe {

// Rational | Laurent, with constant polynomials always stored as Rational so
// that equality is structural.
class Scalar {
 public:
  Scalar() : v_(Rational()) {}
  template <std::integral I>
  Scalar(I v) : v_(Rational(v)) {}  // NOLINT
  Scalar(Rational r) : v_(std::move(r)) {}  // NOLINT
  Scalar(Laurent p);  // NOLINT
  static Scalar var(Var v, int power = 1) { return Scalar(Laurent::variable(v, power)); }

  bool is_zero() const;
  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  const Rational* rational() const { return std::get_if<Rational>(&v_); }
  Laurent to_laurent() const;
  bool is_unit() const;
  std::vector<Var> variables() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) = default;

  Scalar inverse() const;
  Scalar pow(int e) const;
  Rational evaluate(const Assignment& at) const;
  Scalar substitute(Var v, const Scalar& value) const;

  std::string str() const;

 private:
  std::variant<Rational, Laurent> v_;
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

// Shorthands used throughout the formula code.
inline Scalar lam() { return Scalar::var(Var::lambda); }
inline Scalar lam1() { return Scalar::var(Var::lambda1); }
inline Scalar lam2() { return Scalar::var(Var::lambda2); }
inline Scalar lam3() { return Scalar::var(Var::lambda3); }
inline Scalar sq(int power = 1) { return Scalar::var(Var::s, power); }
// q^k written in s.
inline Scalar qpow(int k) { return Scalar::var(Var::s, 2 * k); }

}  // namespace ybe
