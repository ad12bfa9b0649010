#include "ybe/set_solution.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace ybe {

namespace {

void check_table(const Table& t, std::size_t n, const char* what) {
  if (t.size() != n)
    throw InputError(std::string(what) + " must have " + std::to_string(n) + " rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (t[i].size() != n)
      throw InputError(std::string(what) + " row " + std::to_string(i) + " must have " +
                       std::to_string(n) + " entries");
    for (auto v : t[i])
      if (v >= n)
        throw InputError(std::string(what) + " entry " + std::to_string(v) +
                         " out of range for n=" + std::to_string(n));
  }
}

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::string text(const std::array<std::size_t, 3>& v) { return triple(v[0], v[1], v[2]); }
std::string text(std::size_t v) { return std::to_string(v); }

// Compares lhs(a,b,c) with rhs(a,b,c) over X^3, stopping at the first mismatch.
CheckReport triple_report(std::string name, const SetSolution& s, auto&& lhs, auto&& rhs,
                          const char* labels) {
  Stopwatch clock;
  CheckReport rep;
  rep.name = std::move(name);
  rep.status = Status::pass;
  for (std::size_t a = 0; a < s.n && rep.status == Status::pass; ++a)
    for (std::size_t b = 0; b < s.n && rep.status == Status::pass; ++b)
      for (std::size_t c = 0; c < s.n; ++c) {
        const auto l = lhs(a, b, c);
        const auto r = rhs(a, b, c);
        if (l != r) {
          rep.status = Status::fail;
          rep.witness =
              Witness{{a, b, c}, std::string(labels) + "=" + triple(a, b, c), text(l), text(r)};
          break;
        }
      }
  rep.millis = clock.millis();
  return rep;
}

}  // namespace

bool is_permutation(const std::vector<std::size_t>& row, std::size_t n) {
  if (row.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto v : row) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::vector<std::size_t> invert_permutation(const std::vector<std::size_t>& p) {
  std::vector<std::size_t> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv.at(p[i]) = i;
  return inv;
}

SetSolution make_solution(Table sigma, Table tau, std::string name) {
  const std::size_t n = sigma.size();
  if (n == 0) throw InputError("solution must have n >= 1");
  check_table(sigma, n, "sigma");
  check_table(tau, n, "tau");
  return SetSolution{n, std::move(sigma), std::move(tau), std::move(name)};
}

Table derive_tau_from_sigma(const Table& sigma) {
  const std::size_t n = sigma.size();
  check_table(sigma, n, "sigma");
  Table inv(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (!is_permutation(sigma[x], n))
      throw InputError("sigma row " + std::to_string(x) + " is not a permutation");
    inv[x] = invert_permutation(sigma[x]);
  }
  Table tau(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) tau[y][x] = inv[sigma[x][y]][x];
  return tau;
}

SetSolution from_sigma(Table sigma, std::string name) {
  Table tau = derive_tau_from_sigma(sigma);
  return make_solution(std::move(sigma), std::move(tau), std::move(name));
}

SetSolution permutation_solution(std::size_t n) {
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), 0);
  return make_solution(Table(n, id), Table(n, id), "permutation" + std::to_string(n));
}

SetSolution lyubashenko(std::vector<std::size_t> sigma, std::vector<std::size_t> tau,
                        std::string name) {
  const std::size_t n = sigma.size();
  return make_solution(Table(n, sigma), Table(n, tau), std::move(name));
}

SetSolution cyclic_lyubashenko(std::size_t n) {
  std::vector<std::size_t> up(n), down(n);
  for (std::size_t x = 0; x < n; ++x) {
    up[x] = (x + 1) % n;
    down[x] = (x + n - 1) % n;
  }
  return lyubashenko(up, down, "lyubashenko" + std::to_string(n));
}

bool is_lyubashenko_type(const SetSolution& s) {
  for (std::size_t x = 1; x < s.n; ++x)
    if (s.sigma[x] != s.sigma[0] || s.tau[x] != s.tau[0]) return false;
  return true;
}

CheckReport validate(const SetSolution& s) {
  Stopwatch clock;
  check_table(s.sigma, s.n, "sigma");
  check_table(s.tau, s.n, "tau");
  CheckReport rep{"nondegenerate", Status::pass, std::nullopt, 0, {}};
  for (std::size_t x = 0; x < s.n && rep.status == Status::pass; ++x) {
    for (const auto* which : {&s.sigma, &s.tau}) {
      if (!is_permutation((*which)[x], s.n)) {
        std::string row;
        for (auto v : (*which)[x]) row += (row.empty() ? "" : ",") + std::to_string(v);
        const char* label = which == &s.sigma ? "sigma" : "tau";
        rep.status = Status::fail;
        rep.witness = Witness{{x}, std::string(label) + " row " + std::to_string(x),
                              "[" + row + "]", "a permutation of 0.." + std::to_string(s.n - 1)};
        break;
      }
    }
  }
  rep.millis = clock.millis();
  return rep;
}

SparseMat permutation_operator(std::size_t n) {
  SparseMat p(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) p.add(x * n + y, y * n + x, Scalar(1));
  return p;
}

SparseMat linearize_braid(const SetSolution& s) {
  const std::size_t n = s.n;
  SparseMat m(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) m.add(x * n + y, s.s(x, y) * n + s.t(y, x), Scalar(1));
  return m;
}

SparseMat linearize_r(const SetSolution& s) {
  const std::size_t n = s.n;
  SparseMat m(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) m.add(y * n + x, s.s(x, y) * n + s.t(y, x), Scalar(1));
  return m;
}

Identity braid_identity(const SparseMat& rcheck, std::size_t n) {
  const SparseMat a = embed(rcheck, {0, 1}, n, 3);
  const SparseMat b = embed(rcheck, {1, 2}, n, 3);
  return equation("braid", n, {a, b, a}, {b, a, b});
}

Identity involutive_identity(const SetSolution& s) {
  const SparseMat r = linearize_braid(s);
  return equation("involutive", s.n, {r, r}, {SparseMat::identity(r.dim())});
}

CheckReport check_braid_matrix(const SetSolution& s) {
  if (validate(s).status != Status::pass) throw InputError("braid check needs a non-degenerate solution");
  return check(braid_identity(linearize_braid(s), s.n));
}

CheckReport check_braid_pointwise(const SetSolution& s) {
  using T3 = std::array<std::size_t, 3>;
  auto r12 = [&](T3 v) { return T3{s.s(v[0], v[1]), s.t(v[1], v[0]), v[2]}; };
  auto r23 = [&](T3 v) { return T3{v[0], s.s(v[1], v[2]), s.t(v[2], v[1])}; };
  return triple_report(
      "braid", s, [&](auto a, auto b, auto c) { return r12(r23(r12(T3{a, b, c}))); },
      [&](auto a, auto b, auto c) { return r23(r12(r23(T3{a, b, c}))); }, "(x,y,z)");
}

CheckReport check_braid(const SetSolution& s) {
  CheckReport matrix = check_braid_matrix(s);
  CheckReport pointwise = check_braid_pointwise(s);
  if (matrix.status != pointwise.status)
    throw InvariantError("matrix and pointwise braid checks disagree");
  if (matrix.status == Status::fail) {
    matrix.note = "matrix witness " + matrix.witness->location + "; set-map witness " +
                  pointwise.witness->location + " maps to " + pointwise.witness->lhs + " vs " +
                  pointwise.witness->rhs;
    matrix.witness = pointwise.witness;
  }
  matrix.millis += pointwise.millis;
  return matrix;
}

CheckReport check_involutive(const SetSolution& s) {
  if (validate(s).status != Status::pass)
    throw InputError("involutivity check needs a non-degenerate solution");
  return check(involutive_identity(s));
}

CheckReport check_c1(const SetSolution& s) {
  if (validate(s).status != Status::pass) throw InputError("C1 check needs a non-degenerate solution");
  return triple_report(
      "C1", s,
      [&](std::size_t eta, std::size_t x, std::size_t y) {
        return s.s(s.s(eta, x), s.s(s.t(x, eta), y));
      },
      [&](std::size_t eta, std::size_t x, std::size_t y) { return s.s(eta, s.s(x, y)); },
      "(eta,x,y)");
}

bool is_solution(const SetSolution& s) {
  return validate(s).status == Status::pass && check_involutive(s).status == Status::pass &&
         check_braid(s).status == Status::pass;
}

void require_involutive_solution(const SetSolution& s) {
  const auto v = validate(s);
  if (v.status != Status::pass) throw InputError("solution is degenerate: " + v.witness->location);
  const auto inv = check_involutive(s);
  if (inv.status != Status::pass) throw InputError("solution is not involutive");
  const auto br = check_braid(s);
  if (br.status != Status::pass)
    throw InputError("solution fails the braid relation at " + br.witness->location);
}

SetSolution relabel(const SetSolution& s, const std::vector<std::size_t>& pi) {
  if (!is_permutation(pi, s.n)) throw InputError("relabel: not a permutation of X");
  Table sigma(s.n, std::vector<std::size_t>(s.n));
  Table tau(s.n, std::vector<std::size_t>(s.n));
  for (std::size_t x = 0; x < s.n; ++x)
    for (std::size_t y = 0; y < s.n; ++y) {
      sigma[pi[x]][pi[y]] = pi[s.sigma[x][y]];
      tau[pi[x]][pi[y]] = pi[s.tau[x][y]];
    }
  return SetSolution{s.n, std::move(sigma), std::move(tau), s.name};
}

}  // namespace ybe
