#include "ybe/sparse_matrix.hpp"

namespace ybe {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

std::vector<std::size_t> basis_digits(std::size_t index, std::size_t n, std::size_t legs) {
  std::vector<std::size_t> d(legs);
  for (std::size_t i = legs; i-- > 0;) {
    d[i] = index % n;
    index /= n;
  }
  return d;
}

std::size_t basis_index(const std::vector<std::size_t>& digits, std::size_t n) {
  std::size_t idx = 0;
  for (auto d : digits) idx = idx * n + d;
  return idx;
}

std::string basis_label(std::size_t index, std::size_t n, std::size_t legs) {
  std::string out = "|";
  const auto d = basis_digits(index, n, legs);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(d[i]);
  }
  return out + ">";
}

std::size_t leg_count(std::size_t dim, std::size_t n) {
  if (n < 2) throw InputError("leg_count: site dimension must be at least 2");
  std::size_t legs = 0;
  std::size_t p = 1;
  while (p < dim) {
    p *= n;
    ++legs;
  }
  if (p != dim) throw InputError("dimension " + std::to_string(dim) + " is not a power of " +
                                 std::to_string(n));
  return legs;
}

RationalMat eval_at(const SparseMat& m, const Assignment& at) {
  return m.map([&](const Scalar& v) { return v.evaluate(at); });
}

SparseMat substitute(const SparseMat& m, Var v, const Scalar& value) {
  return m.map([&](const Scalar& x) { return x.substitute(v, value); });
}

SparseMat to_scalar(const RationalMat& m) {
  return m.map([](const Rational& r) { return Scalar(r); });
}

std::set<Var> variables(const SparseMat& m) {
  std::set<Var> out;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (const auto& [c, v] : m.row(r))
      for (auto x : v.variables()) out.insert(x);
  return out;
}

bool is_rational_matrix(const SparseMat& m) {
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (const auto& [c, v] : m.row(r))
      if (!v.is_rational()) return false;
  return true;
}

RationalMat to_rational(const SparseMat& m) {
  return m.map([](const Scalar& v) {
    const auto* r = v.rational();
    if (r == nullptr) throw InputError("entry " + v.str() + " is not a rational constant");
    return *r;
  });
}

}  // namespace ybe
