#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ybe/errors.hpp"
#include "ybe/rational.hpp"
#include "ybe/scalar.hpp"

namespace ybe {

// Square sparse matrix. Rows hold (column, value) pairs sorted by column;
// zero values are never stored, so == is structural equality.
template <class T>
class SparseMatrix {
 public:
  using Index = std::size_t;
  using Entry = std::pair<Index, T>;
  using Row = std::vector<Entry>;

  SparseMatrix() = default;
  explicit SparseMatrix(Index dim) : dim_(dim), rows_(dim) {}

  static SparseMatrix identity(Index dim, const T& diag = T(1)) {
    SparseMatrix m(dim);
    if (is_zero(diag)) return m;
    for (Index i = 0; i < dim; ++i) m.rows_[i].emplace_back(i, diag);
    return m;
  }

  // Matrix unit e_{r,c} scaled by v.
  static SparseMatrix unit(Index dim, Index r, Index c, const T& v = T(1)) {
    SparseMatrix m(dim);
    m.add(r, c, v);
    return m;
  }

  Index dim() const { return dim_; }
  const Row& row(Index r) const { return rows_.at(r); }

  T at(Index r, Index c) const {
    const Row& row = rows_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, Index k) { return e.first < k; });
    if (it != row.end() && it->first == c) return it->second;
    return T();
  }

  // Accumulates v into entry (r, c).
  void add(Index r, Index c, const T& v) {
    if (r >= dim_ || c >= dim_)
      throw InputError("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                       ") out of range for dim " + std::to_string(dim_));
    if (is_zero(v)) return;
    Row& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, Index k) { return e.first < k; });
    if (it != row.end() && it->first == c) {
      it->second += v;
      if (is_zero(it->second)) row.erase(it);
    } else {
      row.insert(it, Entry(c, v));
    }
  }

  std::size_t nnz() const {
    std::size_t k = 0;
    for (const auto& r : rows_) k += r.size();
    return k;
  }
  bool is_zero_matrix() const { return nnz() == 0; }

  SparseMatrix& operator+=(const SparseMatrix& o) {
    require_same_dim(o);
    for (Index r = 0; r < dim_; ++r) rows_[r] = merge_rows(rows_[r], o.rows_[r], false);
    return *this;
  }
  SparseMatrix& operator-=(const SparseMatrix& o) {
    require_same_dim(o);
    for (Index r = 0; r < dim_; ++r) rows_[r] = merge_rows(rows_[r], o.rows_[r], true);
    return *this;
  }
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
  SparseMatrix operator-() const { return scaled(T(-1)); }

  SparseMatrix scaled(const T& c) const {
    SparseMatrix out(dim_);
    if (is_zero(c)) return out;
    for (Index r = 0; r < dim_; ++r) {
      out.rows_[r].reserve(rows_[r].size());
      for (const auto& [col, v] : rows_[r]) {
        T p = c * v;
        if (!is_zero(p)) out.rows_[r].emplace_back(col, std::move(p));
      }
    }
    return out;
  }
  friend SparseMatrix operator*(const T& c, const SparseMatrix& m) { return m.scaled(c); }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    a.require_same_dim(b);
    SparseMatrix out(a.dim_);
    // Sparse accumulator reused across rows.
    std::vector<std::ptrdiff_t> slot(a.dim_, -1);
    std::vector<Index> cols;
    std::vector<T> vals;
    for (Index r = 0; r < a.dim_; ++r) {
      cols.clear();
      vals.clear();
      for (const auto& [k, av] : a.rows_[r]) {
        for (const auto& [c, bv] : b.rows_[k]) {
          if (slot[c] < 0) {
            slot[c] = static_cast<std::ptrdiff_t>(cols.size());
            cols.push_back(c);
            vals.push_back(av * bv);
          } else {
            vals[static_cast<std::size_t>(slot[c])] += av * bv;
          }
        }
      }
      Row& row = out.rows_[r];
      row.reserve(cols.size());
      for (std::size_t i = 0; i < cols.size(); ++i) {
        slot[cols[i]] = -1;
        if (!is_zero(vals[i])) row.emplace_back(cols[i], std::move(vals[i]));
      }
      std::sort(row.begin(), row.end(),
                [](const Entry& x, const Entry& y) { return x.first < y.first; });
    }
    return out;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.dim_ == b.dim_ && a.rows_ == b.rows_;
  }

  template <class F>
  auto map(F&& f) const {
    using U = decltype(f(std::declval<const T&>()));
    SparseMatrix<U> out(dim_);
    for (Index r = 0; r < dim_; ++r)
      for (const auto& [c, v] : rows_[r]) out.add(r, c, f(v));
    return out;
  }

 private:
  void require_same_dim(const SparseMatrix& o) const {
    if (dim_ != o.dim_)
      throw InputError("dimension mismatch: " + std::to_string(dim_) + " vs " +
                       std::to_string(o.dim_));
  }

  static Row merge_rows(const Row& a, const Row& b, bool subtract) {
    Row out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
      if (j == b.end() || (i != a.end() && i->first < j->first)) {
        out.push_back(*i++);
      } else if (i == a.end() || j->first < i->first) {
        out.emplace_back(j->first, subtract ? T() - j->second : j->second);
        ++j;
      } else {
        T v = subtract ? i->second - j->second : i->second + j->second;
        if (!is_zero(v)) out.emplace_back(i->first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  Index dim_ = 0;
  std::vector<Row> rows_;
};

using SparseMat = SparseMatrix<Scalar>;
using RationalMat = SparseMatrix<Rational>;

// Big-endian digits: leg 0 is the most significant.
std::vector<std::size_t> basis_digits(std::size_t index, std::size_t n, std::size_t legs);
std::size_t basis_index(const std::vector<std::size_t>& digits, std::size_t n);
std::string basis_label(std::size_t index, std::size_t n, std::size_t legs);
// Number of legs N with n^N = dim; throws when dim is not a power of n.
std::size_t leg_count(std::size_t dim, std::size_t n);
std::size_t ipow(std::size_t base, std::size_t exp);

template <class T>
SparseMatrix<T> kron(const SparseMatrix<T>& a, const SparseMatrix<T>& b) {
  const std::size_t bd = b.dim();
  SparseMatrix<T> out(a.dim() * bd);
  for (std::size_t ra = 0; ra < a.dim(); ++ra)
    for (const auto& [ca, va] : a.row(ra))
      for (std::size_t rb = 0; rb < bd; ++rb)
        for (const auto& [cb, vb] : b.row(rb)) out.add(ra * bd + rb, ca * bd + cb, va * vb);
  return out;
}

template <class T>
SparseMatrix<T> kron(std::initializer_list<SparseMatrix<T>> factors) {
  auto it = factors.begin();
  SparseMatrix<T> out = *it++;
  for (; it != factors.end(); ++it) out = kron(out, *it);
  return out;
}

// Places factor i of M (a k-leg operator) on leg legs[i] of an N-leg space.
template <class T>
SparseMatrix<T> embed(const SparseMatrix<T>& m, const std::vector<std::size_t>& legs,
                      std::size_t n, std::size_t N) {
  const std::size_t k = legs.size();
  if (k == 0 || k > N) throw InputError("embed: leg list must have between 1 and N entries");
  if (m.dim() != ipow(n, k))
    throw InputError("embed: operator dim " + std::to_string(m.dim()) + " is not n^" +
                     std::to_string(k));
  std::vector<bool> used(N, false);
  for (auto l : legs) {
    if (l >= N) throw InputError("embed: leg " + std::to_string(l) + " out of range");
    if (used[l]) throw InputError("embed: repeated leg " + std::to_string(l));
    used[l] = true;
  }
  std::vector<std::size_t> rest;
  for (std::size_t l = 0; l < N; ++l)
    if (!used[l]) rest.push_back(l);

  std::vector<std::size_t> stride(N);
  for (std::size_t l = 0; l < N; ++l) stride[l] = ipow(n, N - 1 - l);
  auto place = [&](std::size_t sub) {
    std::size_t idx = 0;
    for (std::size_t i = k; i-- > 0;) {
      idx += (sub % n) * stride[legs[i]];
      sub /= n;
    }
    return idx;
  };
  std::vector<std::size_t> row_off(m.dim());
  for (std::size_t s = 0; s < m.dim(); ++s) row_off[s] = place(s);

  SparseMatrix<T> out(ipow(n, N));
  const std::size_t rest_count = ipow(n, rest.size());
  for (std::size_t rc = 0; rc < rest_count; ++rc) {
    std::size_t base = 0;
    std::size_t t = rc;
    for (std::size_t i = rest.size(); i-- > 0;) {
      base += (t % n) * stride[rest[i]];
      t /= n;
    }
    for (std::size_t r = 0; r < m.dim(); ++r)
      for (const auto& [c, v] : m.row(r)) out.add(base + row_off[r], base + row_off[c], v);
  }
  return out;
}

template <class T>
SparseMatrix<T> transpose(const SparseMatrix<T>& m) {
  SparseMatrix<T> out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (const auto& [c, v] : m.row(r)) out.add(c, r, v);
  return out;
}

// Transposes one tensor factor of an operator on two equal legs.
template <class T>
SparseMatrix<T> partial_transpose(const SparseMatrix<T>& m, int leg) {
  std::size_t n = 0;
  while (n * n < m.dim()) ++n;
  if (n * n != m.dim()) throw InputError("partial_transpose: dimension is not a perfect square");
  if (leg != 0 && leg != 1) throw InputError("partial_transpose: leg must be 0 or 1");
  SparseMatrix<T> out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r) {
    const std::size_t a = r / n, b = r % n;
    for (const auto& [col, v] : m.row(r)) {
      const std::size_t c = col / n, d = col % n;
      if (leg == 0)
        out.add(c * n + b, a * n + d, v);
      else
        out.add(a * n + d, c * n + b, v);
    }
  }
  return out;
}

template <class T>
SparseMatrix<T> commutator(const SparseMatrix<T>& a, const SparseMatrix<T>& b) {
  return a * b - b * a;
}

template <class T>
SparseMatrix<T> matrix_pow(const SparseMatrix<T>& m, unsigned e) {
  SparseMatrix<T> out = SparseMatrix<T>::identity(m.dim());
  SparseMatrix<T> base = m;
  while (e != 0) {
    if (e & 1u) out = out * base;
    e >>= 1u;
    if (e != 0) base = base * base;
  }
  return out;
}

// One nonzero entry in every row and every column.
template <class T>
bool is_monomial_matrix(const SparseMatrix<T>& m) {
  std::vector<bool> seen(m.dim(), false);
  for (std::size_t r = 0; r < m.dim(); ++r) {
    if (m.row(r).size() != 1) return false;
    const std::size_t c = m.row(r).front().first;
    if (seen[c]) return false;
    seen[c] = true;
  }
  return true;
}

RationalMat eval_at(const SparseMat& m, const Assignment& at);
SparseMat substitute(const SparseMat& m, Var v, const Scalar& value);
SparseMat to_scalar(const RationalMat& m);
std::set<Var> variables(const SparseMat& m);
bool is_rational_matrix(const SparseMat& m);
RationalMat to_rational(const SparseMat& m);  // throws if any entry is non-constant

}  // namespace ybe
