#include "ybe/qdeform.hpp"

#include "ybe/linalg.hpp"

namespace ybe {

namespace {

int sgn(long v) { return (v > 0) - (v < 0); }

Scalar q_minus_qinv() { return qpow(1) - qpow(-1); }

SparseMat flip(const SparseMat& x, std::size_t n) {
  const SparseMat p = permutation_operator(n);
  return p * x * p;
}

// Σ_{x,y} q^{−sgn(x − f(x,y))} e_xx⊗e_yy
template <class F>
SparseMat q_diagonal(std::size_t n, F&& f) {
  SparseMat out(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      out.add(x * n + y, x * n + y, qpow(-sgn(static_cast<long>(x) - f(x, y))));
  return out;
}

// q^{±h_j/2} on a chain of length dim; positions outside 0..dim−1 are dropped.
SparseMat chain_half_h(std::size_t dim, long j, int sign) {
  SparseMat d(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    int e = 0;
    if (static_cast<long>(x) == j) e += sign;
    if (static_cast<long>(x) == j + 1) e -= sign;
    d.add(x, x, sq(e));
  }
  return d;
}

SparseMat chain_unit(std::size_t dim, long r, long c) {
  SparseMat out(dim);
  if (r >= 0 && c >= 0 && r < static_cast<long>(dim) && c < static_cast<long>(dim))
    out.add(static_cast<std::size_t>(r), static_cast<std::size_t>(c), Scalar(1));
  return out;
}

std::string gen_tag(QGen gen, std::size_t j) {
  const char* g = gen == QGen::e ? "e" : (gen == QGen::f ? "f" : "q^eps");
  return std::string(g) + "_" + std::to_string(j);
}

}  // namespace

HeckeElement hecke_g(std::size_t n) {
  if (n == 0) throw InputError("hecke_g needs n >= 1");
  SparseMat g = qpow(1) * SparseMat::identity(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      g.add(x * n + y, y * n + x, Scalar(1));
      g.add(x * n + y, x * n + y, -qpow(-sgn(static_cast<long>(x) - static_cast<long>(y))));
    }
  return HeckeElement{n, std::move(g)};
}

SparseMat hecke_inverse(const SparseMat& G) {
  return G - q_minus_qinv() * SparseMat::identity(G.dim());
}

std::vector<Identity> hecke_identities(const SparseMat& G, std::size_t n,
                                       const std::optional<std::vector<std::size_t>>& cols2,
                                       const std::optional<std::vector<std::size_t>>& cols3) {
  const SparseMat I = SparseMat::identity(n * n);
  const SparseMat a = embed(G, {0, 1}, n, 3);
  const SparseMat b = embed(G, {1, 2}, n, 3);
  std::vector<Identity> out = {
      equation("braid", n, {a, b, a}, {b, a, b}),
      equation("(G - q)(G + q^-1) = 0", n, Side{Term{1, {G - qpow(1) * I, G + qpow(-1) * I}}},
               Side{Term{0, {I}}}),
      equation("G (G - (q - q^-1)) = I", n, {G, hecke_inverse(G)}, {I}),
  };
  out[0].columns = cols3;
  out[1].columns = cols2;
  out[2].columns = cols2;
  return out;
}

CheckReport check_hecke(const SparseMat& G, std::size_t n) {
  return check_all("braid and Hecke", hecke_identities(G, n));
}

CheckReport order_preserving_check(const SetSolution& s) {
  Stopwatch clock;
  CheckReport rep{"order preserving", Status::pass, std::nullopt, 0, {}};
  for (std::size_t eta = 0; eta < s.n && rep.status == Status::pass; ++eta)
    for (std::size_t x = 1; x < s.n && rep.status == Status::pass; ++x)
      for (std::size_t y = 0; y < x; ++y) {
        const long image = static_cast<long>(s.s(eta, x)) - static_cast<long>(s.s(eta, y));
        if (sgn(image) != 1) {
          rep.status = Status::fail;
          rep.witness = Witness{{eta, x, y},
                                "(eta,x,y)=(" + std::to_string(eta) + "," + std::to_string(x) +
                                    "," + std::to_string(y) + ")",
                                "sgn(x-y)=1", "sgn(sigma(x)-sigma(y))=" + std::to_string(sgn(image))};
          break;
        }
      }
  rep.millis = clock.millis();
  return rep;
}

SparseMat twist_g_explicit(const SetSolution& s) {
  const std::size_t n = s.n;
  return linearize_braid(s) -
         q_diagonal(n, [&](std::size_t x, std::size_t y) { return static_cast<long>(s.s(x, y)); }) +
         qpow(1) * SparseMat::identity(n * n);
}

SparseMat twist_g(const SetSolution& s, const TwistData& t) {
  const auto c1 = check_c1(s);
  if (c1.status != Status::pass)
    throw InputError("twisted Hecke element needs C1 = 0; violated at " + c1.witness->location);
  const auto order = order_preserving_check(s);
  if (order.status != Status::pass)
    throw InputError("twisted Hecke element needs the order constraint C = 0; violated at " +
                     order.witness->location);
  const SparseMat conj = conjugate_by_twist(t, hecke_g(s.n).g);
  if (conj != twist_g_explicit(s))
    throw InvariantError("F^-1 g F disagrees with the explicit twisted Hecke element");
  return conj;
}

std::vector<Identity> twist_g_identities(const SetSolution& s, const TwistData& t) {
  const std::size_t n = s.n;
  const SparseMat G = twist_g(s, t);
  const SparseMat G12 = embed(G, {0, 1}, n, 3);
  const SparseMat G23 = embed(G, {1, 2}, n, 3);
  const SparseMat Fs = build_Fstar_12_3(s);
  const SparseMat F1 = build_F_1_23(s);
  std::vector<Identity> out = {
      equation("G explicit = F^-1 g F", n, {twist_g_explicit(s)},
               {inverse(t.F), hecke_g(n).g, t.F}),
      equation("[G12, F*12,3] = 0", n, {G12, Fs}, {Fs, G12}),
      equation("[G23, F1,23] = 0", n, {G23, F1}, {F1, G23}),
  };
  for (auto& id : hecke_identities(G, n)) out.push_back(std::move(id));
  return out;
}

SparseMat QBaxter::at(const Scalar& z) const { return z * G - z.inverse() * Ginv; }

SparseMat QBaxter::R_at(const Scalar& z) const { return permutation_operator(n) * at(z); }

QBaxter q_baxterize(const SparseMat& G, std::size_t n) {
  return QBaxter{n, G, hecke_inverse(G)};
}

std::vector<Identity> q_baxter_identities(const QBaxter& b,
                                          const std::optional<std::vector<std::size_t>>& cols3,
                                          bool include_r_form) {
  const std::size_t n = b.n;
  const Scalar z1 = Scalar::var(Var::z1), z2 = Scalar::var(Var::z2), z3 = Scalar::var(Var::z3);
  auto r12 = [&](const Scalar& z) { return embed(b.at(z), {0, 1}, n, 3); };
  auto r23 = [&](const Scalar& z) { return embed(b.at(z), {1, 2}, n, 3); };
  const Scalar ratio = z1 * z2.inverse();
  std::vector<Identity> out = {
      equation("multiplicative YBE", n, {r12(ratio), r23(z1), r12(z2)},
               {r23(z2), r12(z1), r23(ratio)}),
      equation("Rcheck(1) = G - G^-1", n, {b.at(Scalar(1))}, {b.G - b.Ginv}),
  };
  out[0].columns = cols3;
  if (include_r_form) {
    auto R = [&](const Scalar& z, std::vector<std::size_t> legs) {
      return embed(b.R_at(z), legs, n, 3);
    };
    const Scalar a = z1 * z2.inverse(), c = z1 * z3.inverse(), d = z2 * z3.inverse();
    out.push_back(equation("YBE for R = P Rcheck", n, {R(a, {0, 1}), R(c, {0, 2}), R(d, {1, 2})},
                           {R(d, {1, 2}), R(c, {0, 2}), R(a, {0, 1})}));
    out.back().columns = cols3;
  }
  return out;
}

CheckReport check_q_baxter(const QBaxter& b) {
  return check_all("multiplicative Baxterization", q_baxter_identities(b));
}

std::vector<Identity> q_one_identities(std::size_t n) {
  const QBaxter b = q_baxterize(hecke_g(n).g, n);
  const Scalar z = Scalar::var(Var::z1);
  const SparseMat at_one = substitute(b.at(z), Var::s, Scalar(1));
  return {
      equation("g at q=1 is P", n, {substitute(hecke_g(n).g, Var::s, Scalar(1))},
               {permutation_operator(n)}),
      equation("Rcheck(z) at q=1 = (z - z^-1) rcheck", n, Side{Term{1, {at_one}}},
               Side{Term{z - z.inverse(), {permutation_operator(n)}}}),
  };
}

SparseMat q_half_h(std::size_t n, std::size_t j, int sign) {
  SparseMat d(n);
  for (std::size_t x = 0; x < n; ++x) {
    int e = 0;
    if (x == j % n) e += sign;
    if (x == (j + 1) % n) e -= sign;
    d.add(x, x, sq(e));
  }
  return d;
}

SparseMat q_eps(std::size_t n, std::size_t j) {
  SparseMat d = SparseMat::identity(n);
  d.add(j, j, qpow(1) - Scalar(1));
  return d;
}

SparseMat uq_coproduct(QGen gen, std::size_t j, std::size_t n, const Scalar& a, const Scalar& b) {
  if (j >= n) throw InputError("generator index out of range for n=" + std::to_string(n));
  if (gen == QGen::k) return kron(q_eps(n, j), q_eps(n, j));
  const SparseMat lo = q_half_h(n, j, -1), hi = q_half_h(n, j, +1);
  const std::size_t nxt = (j + 1) % n;
  const SparseMat xi = gen == QGen::e ? SparseMat::unit(n, j, nxt) : SparseMat::unit(n, nxt, j);
  if (j + 1 < n) return kron(lo, xi) + kron(xi, hi);
  // Affine node, homogeneous gradation.
  const int p = gen == QGen::e ? -2 : 2;
  return b.pow(p) * kron(lo, xi) + a.pow(p) * kron(xi, hi);
}

SparseMat uq_coproduct_twisted(QGen gen, std::size_t j, const TwistData& t) {
  return conjugate_by_twist(t, uq_coproduct(gen, j, t.solution.n));
}

std::vector<Identity> q_invariance_identities(const QBaxter& b) {
  const std::size_t n = b.n;
  if (n < 2) throw InputError("q invariance needs n >= 2");
  const Scalar z1 = Scalar::var(Var::z1), z2 = Scalar::var(Var::z2);
  const SparseMat rc = b.at(z1);
  std::vector<Identity> out;
  for (std::size_t j = 0; j < n; ++j)
    for (auto gen : {QGen::e, QGen::f, QGen::k}) {
      if (gen != QGen::k && j + 1 == n) continue;
      const SparseMat d = uq_coproduct(gen, j, n);
      out.push_back(equation("[Rcheck, Delta(" + gen_tag(gen, j) + ")] = 0", n, {rc, d}, {d, rc}));
    }
  const SparseMat R = b.R_at(z1 * z2.inverse());
  for (auto gen : {QGen::e, QGen::f}) {
    const SparseMat d = uq_coproduct(gen, n - 1, n, z1, z2);
    const SparseMat d_op = flip(uq_coproduct(gen, n - 1, n, z2, z1), n);
    out.push_back(equation("affine intertwining " + gen_tag(gen, n - 1), n, {R, d}, {d_op, R}));
  }
  return out;
}

CheckReport check_q_invariance(const QBaxter& b) {
  return check_all("Uq invariance", q_invariance_identities(b));
}

std::vector<std::size_t> WindowSolution::interior_columns(std::size_t legs) const {
  std::vector<bool> inside(dim, false);
  for (auto x : interior) inside[x] = true;
  std::vector<std::size_t> out;
  const std::size_t total = ipow(dim, legs);
  for (std::size_t c = 0; c < total; ++c) {
    const auto d = basis_digits(c, dim, legs);
    bool ok = true;
    for (auto x : d) ok = ok && inside[x];
    if (ok) out.push_back(c);
  }
  return out;
}

WindowSolution q_lyubashenko(std::size_t m) {
  if (m < 2) throw InputError("q-Lyubashenko window needs m >= 2");
  WindowSolution w;
  w.m = m;
  w.dim = 2 * m + 1;
  const std::size_t D = w.dim;
  for (std::size_t x = kWindowMargin; x + kWindowMargin < D; ++x) w.interior.push_back(x);
  w.V = SparseMat(D);
  for (std::size_t x = 1; x < D; ++x) w.V.add(x, x - 1, Scalar(1));
  // σ(y) = y+1, τ(x) = x−1; terms leaving the window are dropped.
  w.rcheck = SparseMat(D * D);
  for (std::size_t x = 1; x < D; ++x)
    for (std::size_t y = 0; y + 1 < D; ++y) w.rcheck.add(x * D + y, (y + 1) * D + (x - 1), Scalar(1));
  w.G = w.rcheck -
        q_diagonal(D, [](std::size_t, std::size_t y) { return static_cast<long>(y) + 1; }) +
        qpow(1) * SparseMat::identity(D * D);
  return w;
}

CheckReport order_preserving_window(const WindowSolution& w) {
  Stopwatch clock;
  CheckReport rep{"order preserving (window interior)", Status::pass, std::nullopt, 0, {}};
  for (auto x : w.interior)
    for (auto y : w.interior) {
      const long sx = static_cast<long>(x) + 1, sy = static_cast<long>(y) + 1;
      if (sgn(static_cast<long>(x) - static_cast<long>(y)) != sgn(sx - sy) && !rep.witness) {
        rep.status = Status::fail;
        rep.witness = Witness{{x, y}, "(x,y)=(" + std::to_string(x) + "," + std::to_string(y) + ")",
                              "", ""};
      }
    }
  rep.millis = clock.millis();
  return rep;
}

std::vector<Identity> window_identities(const WindowSolution& w) {
  const std::size_t D = w.dim;
  const auto c2 = w.interior_columns(2);
  const auto c3 = w.interior_columns(3);
  const SparseMat I = SparseMat::identity(D);
  const SparseMat Vt = transpose(w.V);
  const SparseMat& G = w.G;

  std::vector<Identity> out;
  auto add = [&](Identity id, const std::vector<std::size_t>& cols) {
    id.columns = cols;
    out.push_back(std::move(id));
  };
  add(equation("G = (I x V^T) g (I x V)", D, {G}, {kron(I, Vt), hecke_g(D).g, kron(I, w.V)}), c2);
  for (auto& id : hecke_identities(G, D, c2, c3)) out.push_back(std::move(id));

  const SparseMat Fs = kron({I, I, w.V * w.V});
  const SparseMat F1 = kron({I, w.V, w.V});
  const SparseMat G12 = embed(G, {0, 1}, D, 3), G23 = embed(G, {1, 2}, D, 3);
  add(equation("[G12, F*12,3] = 0", D, {G12, Fs}, {Fs, G12}), c3);
  add(equation("[G23, F1,23] = 0", D, {G23, F1}, {F1, G23}), c3);

  // Shift-twisted coproducts:
  // Δ(ξ_j) = q^{−h_j/2} ⊗ ξ_{j−1} + ξ_j ⊗ q^{h_{j−1}/2},  Δ(q^{e_jj}) = q^{e_jj} ⊗ q^{e_{j−1,j−1}}.
  for (std::size_t j = 0; j + 1 < D; ++j) {
    const long jl = static_cast<long>(j);
    for (auto gen : {QGen::e, QGen::f}) {
      auto xi = [&](long k) {
        return gen == QGen::e ? chain_unit(D, k, k + 1) : chain_unit(D, k + 1, k);
      };
      const SparseMat d =
          kron(chain_half_h(D, jl, -1), xi(jl - 1)) + kron(xi(jl), chain_half_h(D, jl - 1, +1));
      add(equation("[G, Delta(" + gen_tag(gen, j) + ")] = 0", D, {G, d}, {d, G}), c2);
    }
  }
  for (std::size_t j = 0; j < D; ++j) {
    SparseMat right = I;
    if (j > 0) right = q_eps(D, j - 1);
    const SparseMat d = kron(q_eps(D, j), right);
    add(equation("[G, Delta(" + gen_tag(QGen::k, j) + ")] = 0", D, {G, d}, {d, G}), c2);
  }

  out.push_back(q_baxter_identities(q_baxterize(G, D), c3, false).front());
  add(equation("G at q=1 = shift solution", D, {substitute(G, Var::s, Scalar(1))}, {w.rcheck}), c2);
  return out;
}

std::vector<CheckReport> check_window(const WindowSolution& w) {
  std::vector<CheckReport> out = {order_preserving_window(w)};
  for (const auto& id : window_identities(w)) out.push_back(check(id));
  return out;
}

}  // namespace ybe
