#include "ybe/laurent.hpp"

#include <algorithm>
#include <limits>

#include "ybe/errors.hpp"

namespace ybe {

namespace {

constexpr std::array<std::string_view, kVarCount> kNames = {
    "lambda", "lambda1", "lambda2", "lambda3", "q", "s", "z1", "z2", "z3"};

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents out{};
  for (std::size_t i = 0; i < kVarCount; ++i) {
    const int e = a[i] + b[i];
    if (e > std::numeric_limits<std::int16_t>::max() || e < std::numeric_limits<std::int16_t>::min())
      throw InputError("Laurent exponent overflow");
    out[i] = static_cast<std::int16_t>(e);
  }
  return out;
}

}  // namespace

std::string_view var_name(Var v) { return kNames[static_cast<std::size_t>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kVarCount; ++i)
    if (kNames[i] == name) return static_cast<Var>(i);
  return std::nullopt;
}

Laurent::Laurent(const Rational& c) {
  if (!c.is_zero()) terms_.emplace_back(Exponents{}, c);
}

Laurent Laurent::variable(Var v, int power) {
  Exponents e{};
  e[static_cast<std::size_t>(v)] = static_cast<std::int16_t>(power);
  return monomial(e, Rational(1));
}

Laurent Laurent::monomial(const Exponents& e, const Rational& c) {
  Laurent out;
  if (!c.is_zero()) out.terms_.emplace_back(e, c);
  return out;
}

void Laurent::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.second.is_zero(); });
  terms_ = std::move(merged);
}

std::optional<Rational> Laurent::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.front().first == Exponents{}) return terms_.front().second;
  return std::nullopt;
}

std::vector<Var> Laurent::variables() const {
  std::vector<Var> out;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    const bool used = std::any_of(terms_.begin(), terms_.end(),
                                  [i](const Term& t) { return t.first[i] != 0; });
    if (used) out.push_back(static_cast<Var>(i));
  }
  return out;
}

Laurent Laurent::operator-() const {
  Laurent out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (!c.is_zero()) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out;
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.terms_.emplace_back(add_exponents(ea, eb), ca * cb);
  out.canonicalize();
  return out;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent Laurent::inverse() const {
  if (!is_monomial()) throw InputError("inverse of non-monomial Laurent polynomial " + str());
  Exponents e{};
  for (std::size_t i = 0; i < kVarCount; ++i) e[i] = static_cast<std::int16_t>(-terms_[0].first[i]);
  return monomial(e, terms_[0].second.inverse());
}

Laurent Laurent::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Laurent base = *this;
  Laurent out(Rational(1));
  unsigned k = static_cast<unsigned>(e);
  while (k != 0) {
    if (k & 1u) out *= base;
    if (k > 1) base *= base;
    k >>= 1u;
  }
  return out;
}

Rational Laurent::evaluate(const Assignment& at) const {
  Rational sum;
  for (const auto& [e, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      const auto it = at.find(static_cast<Var>(i));
      if (it == at.end())
        throw InputError("assignment is missing variable " + std::string(kNames[i]));
      if (e[i] < 0 && it->second.is_zero())
        throw InputError("zero substituted into negative power of " + std::string(kNames[i]));
      v *= it->second.pow(e[i]);
    }
    sum += v;
  }
  return sum;
}

Laurent Laurent::substitute(Var v, const Laurent& value) const {
  const auto idx = static_cast<std::size_t>(v);
  Laurent out;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[idx] = 0;
    out += monomial(rest, c) * value.pow(e[idx]);
  }
  return out;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest exponent first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool constant = e == Exponents{};
    std::string coeff = c.str();
    bool negative = c.sign() < 0;
    if (negative) coeff.erase(0, 1);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string mono;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += kNames[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (constant)
      out += coeff;
    else if (coeff == "1")
      out += mono;
    else
      out += coeff + "*" + mono;
  }
  return out;
}

}  // namespace ybe
