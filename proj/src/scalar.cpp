#include "ybe/scalar.hpp"

#include "ybe/errors.hpp"

namespace ybe {

Scalar::Scalar(Laurent p) {
  if (auto c = p.as_constant())
    v_ = std::move(*c);
  else
    v_ = std::move(p);
}

bool Scalar::is_zero() const {
  const auto* r = rational();
  return r != nullptr && r->is_zero();
}

Laurent Scalar::to_laurent() const {
  if (const auto* r = rational()) return Laurent(*r);
  return std::get<Laurent>(v_);
}

bool Scalar::is_unit() const {
  if (const auto* r = rational()) return !r->is_zero();
  return std::get<Laurent>(v_).is_monomial();
}

std::vector<Var> Scalar::variables() const {
  if (is_rational()) return {};
  return std::get<Laurent>(v_).variables();
}

Scalar Scalar::operator-() const {
  if (const auto* r = rational()) return Scalar(-*r);
  return Scalar(-std::get<Laurent>(v_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  const auto* a = rational();
  const auto* b = o.rational();
  if (a != nullptr && b != nullptr) {
    std::get<Rational>(v_) += *b;
    return *this;
  }
  return *this = Scalar(to_laurent() + o.to_laurent());
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  const auto* a = rational();
  const auto* b = o.rational();
  if (a != nullptr && b != nullptr) {
    std::get<Rational>(v_) *= *b;
    return *this;
  }
  if ((a != nullptr && a->is_zero()) || (b != nullptr && b->is_zero())) return *this = Scalar();
  return *this = Scalar(to_laurent() * o.to_laurent());
}

Scalar Scalar::inverse() const {
  if (const auto* r = rational()) return Scalar(r->inverse());
  return Scalar(std::get<Laurent>(v_).inverse());
}

Scalar Scalar::pow(int e) const {
  if (const auto* r = rational()) return Scalar(r->pow(e));
  return Scalar(std::get<Laurent>(v_).pow(e));
}

Rational Scalar::evaluate(const Assignment& at) const {
  if (const auto* r = rational()) return *r;
  return std::get<Laurent>(v_).evaluate(at);
}

Scalar Scalar::substitute(Var v, const Scalar& value) const {
  if (is_rational()) return *this;
  return Scalar(std::get<Laurent>(v_).substitute(v, value.to_laurent()));
}

std::string Scalar::str() const {
  if (const auto* r = rational()) return r->str();
  return std::get<Laurent>(v_).str();
}

}  // namespace ybe
