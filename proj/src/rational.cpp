#include "ybe/rational.hpp"

#include "ybe/errors.hpp"

namespace ybe {

Rational::Rational(long num, long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputError("empty rational literal");
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw InputError("malformed rational literal '" + s + "'");
  if (v.get_den() == 0) throw InputError("rational with zero denominator");
  return Rational(std::move(v));
}

Rational Rational::inverse() const {
  if (is_zero()) throw InputError("inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Rational base = *this;
  Rational out(1);
  unsigned k = static_cast<unsigned>(e);
  while (k != 0) {
    if (k & 1u) out *= base;
    base *= base;
    k >>= 1u;
  }
  return out;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InputError("division by zero");
  v_ /= o.v_;
  return *this;
}

}  // namespace ybe
