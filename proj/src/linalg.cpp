#include "ybe/linalg.hpp"

#include <utility>

namespace ybe {

std::optional<SparseMat> monomial_inverse(const SparseMat& m) {
  if (!is_monomial_matrix(m)) return std::nullopt;
  SparseMat out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r) {
    const auto& [c, v] = m.row(r).front();
    if (!v.is_unit()) return std::nullopt;
    out.add(c, r, v.inverse());
  }
  return out;
}

std::optional<RationalMat> rational_inverse(const RationalMat& m) {
  const std::size_t d = m.dim();
  // Dense augmented rows; the sizes involved here stay below a few hundred.
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(2 * d));
  for (std::size_t r = 0; r < d; ++r) {
    for (const auto& [c, v] : m.row(r)) a[r][c] = v;
    a[r][d + r] = Rational(1);
  }
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && a[piv][col].is_zero()) ++piv;
    if (piv == d) return std::nullopt;
    std::swap(a[piv], a[col]);
    const Rational inv = a[col][col].inverse();
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (std::size_t k = col; k < 2 * d; ++k)
        if (!a[col][k].is_zero()) a[r][k] -= f * a[col][k];
    }
  }
  RationalMat out(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) out.add(r, c, a[r][d + c]);
  return out;
}

std::optional<SparseMat> try_inverse(const SparseMat& m) {
  if (is_monomial_matrix(m)) {
    if (auto inv = monomial_inverse(m)) return inv;
  }
  if (!is_rational_matrix(m))
    throw InputError("inverse of a non-monomial matrix with polynomial entries is not supported");
  auto inv = rational_inverse(to_rational(m));
  if (!inv) return std::nullopt;
  return to_scalar(*inv);
}

SparseMat inverse(const SparseMat& m) {
  auto inv = try_inverse(m);
  if (!inv) throw InputError("matrix is singular");
  return *std::move(inv);
}

}  // namespace ybe
