#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ybe/rational.hpp"

namespace ybe {

// The fixed symbol alphabet. q is a legal name but formulas in the q-sector
// are written in s with q := s^2.
enum class Var : std::uint8_t { lambda, lambda1, lambda2, lambda3, q, s, z1, z2, z3 };
inline constexpr std::size_t kVarCount = 9;

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

using Exponents = std::array<std::int16_t, kVarCount>;
using Assignment = std::map<Var, Rational>;

// Multivariate Laurent polynomial with rational coefficients. Terms are kept
// sorted by exponent vector, with no zero coefficients.
class Laurent {
 public:
  using Term = std::pair<Exponents, Rational>;

  Laurent() = default;
  Laurent(const Rational& c);  // NOLINT: constants embed implicitly
  static Laurent variable(Var v, int power = 1);
  static Laurent monomial(const Exponents& e, const Rational& c);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<Rational> as_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::vector<Var> variables() const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent& a, const Laurent& b) = default;

  // Only monomials are units in this ring.
  Laurent inverse() const;
  Laurent pow(int e) const;
  Rational evaluate(const Assignment& at) const;
  // Replaces v by value; value must be a unit when v occurs with a negative power.
  Laurent substitute(Var v, const Laurent& value) const;

  std::string str() const;

 private:
  void canonicalize();
  std::vector<Term> terms_;
};

}  // namespace ybe
