#include "ybe/yangian.hpp"

#include "ybe/linalg.hpp"

namespace ybe {

namespace {

SparseMat flip(const SparseMat& x, std::size_t n) {
  const SparseMat p = permutation_operator(n);
  return p * x * p;
}

std::string pair_tag(const char* what, std::size_t i, std::size_t j) {
  return std::string(what) + "_" + std::to_string(i) + std::to_string(j);
}

void check_index(std::size_t i, std::size_t j, std::size_t n) {
  if (i >= n || j >= n) throw InputError("generator index out of range for n=" + std::to_string(n));
}

}  // namespace

BaxterSolution baxterize_unchecked(const SetSolution& s) {
  const std::size_t n = s.n;
  BaxterSolution b;
  b.n = n;
  b.source = s;
  b.Rcheck = lam() * linearize_braid(s) + SparseMat::identity(n * n);
  b.R = lam() * linearize_r(s) + permutation_operator(n);
  return b;
}

BaxterSolution baxterize(const SetSolution& s) {
  require_involutive_solution(s);
  return baxterize_unchecked(s);
}

BaxterSolution yangian_R(std::size_t n) { return baxterize(permutation_solution(n)); }

SparseMat at(const SparseMat& m, const Scalar& arg) { return substitute(m, Var::lambda, arg); }

std::vector<Identity> param_ybe_identities(const BaxterSolution& b) {
  const std::size_t n = b.n;
  auto r12 = [&](const Scalar& x) { return embed(at(b.Rcheck, x), {0, 1}, n, 3); };
  auto r23 = [&](const Scalar& x) { return embed(at(b.Rcheck, x), {1, 2}, n, 3); };
  const Scalar d = lam1() - lam2();
  return {equation("parameter YBE", n, {r12(d), r23(lam1()), r12(lam2())},
                   {r23(lam2()), r12(lam1()), r23(d)})};
}

std::vector<Identity> unitarity_identities(const BaxterSolution& b) {
  const std::size_t n = b.n;
  const SparseMat r21 = flip(at(b.R, -lam()), n);
  return {equation("unitarity", n, Side{Term{1, {b.R, r21}}},
                   Side{Term{Scalar(1) - lam() * lam(), {SparseMat::identity(n * n)}}})};
}

std::vector<Identity> crossing_identities(const BaxterSolution& b) {
  const std::size_t n = b.n;
  const Scalar nn(static_cast<long>(n));
  const Scalar shifted = -lam() - nn;
  return {
      equation("crossing unitarity", n,
               Side{Term{1, {partial_transpose(b.R, 0), partial_transpose(at(b.R, shifted), 1)}}},
               Side{Term{lam() * shifted, {SparseMat::identity(n * n)}}}),
      equation("transpose symmetry", n, {partial_transpose(partial_transpose(b.R, 0), 1)},
               {flip(b.R, n)}),
  };
}

std::vector<Identity> hecke_span_identities(const BaxterSolution& b) {
  const std::size_t n = b.n;
  const SparseMat rc = linearize_braid(b.source);
  const SparseMat I = SparseMat::identity(n * n);
  return {equation("Rcheck(l1) Rcheck(l2) in span{I, rcheck}", n,
                   Side{Term{1, {at(b.Rcheck, lam1()), at(b.Rcheck, lam2())}}},
                   Side{Term{lam1() * lam2() + Scalar(1), {I}}, Term{lam1() + lam2(), {rc}}})};
}

std::vector<Identity> rtt_identities(const BaxterSolution& b) {
  const std::size_t n = b.n;
  // Evaluation image of L on the auxiliary third leg.
  auto L1 = [&](const Scalar& x) { return embed(at(b.R, x - lam3()), {0, 2}, n, 3); };
  auto L2 = [&](const Scalar& x) { return embed(at(b.R, x - lam3()), {1, 2}, n, 3); };
  const SparseMat rc = embed(at(b.Rcheck, lam1() - lam2()), {0, 1}, n, 3);
  return {equation("RTT", n, {rc, L1(lam1()), L2(lam2())}, {L1(lam2()), L2(lam1()), rc})};
}

std::vector<Identity> t_twist_identities(const BaxterSolution& b, const TwistData& t) {
  const std::size_t n = b.n;
  const SparseMat RY = yangian_R(n).R;
  const SparseMat F123 = check_cocycle(t.solution).F123;
  const SparseMat F231 = embed(F123, {1, 2, 0}, n, 3);
  const Scalar d13 = lam1() - lam3();
  const Scalar d12 = lam1() - lam2();
  return {equation("T-twist", n,
                   {embed(at(RY, d13), {0, 2}, n, 3), embed(at(RY, d12), {0, 1}, n, 3)},
                   {F231, embed(at(b.R, d13), {0, 2}, n, 3), embed(at(b.R, d12), {0, 1}, n, 3),
                    inverse(F123)})};
}

CheckReport check_param_ybe(const BaxterSolution& b) {
  return check_all("parameter YBE", param_ybe_identities(b));
}
CheckReport check_unitarity(const BaxterSolution& b) {
  return check_all("unitarity", unitarity_identities(b));
}
CheckReport check_crossing(const BaxterSolution& b) {
  return check_all("crossing unitarity and transpose symmetry", crossing_identities(b));
}
CheckReport check_hecke_span(const BaxterSolution& b) {
  return check_all("Hecke span", hecke_span_identities(b));
}
CheckReport check_rtt(const BaxterSolution& b) { return check_all("RTT", rtt_identities(b)); }
CheckReport check_T_twist(const BaxterSolution& b, const TwistData& t) {
  return check_all("T-twist", t_twist_identities(b, t));
}

SparseMat coproduct_Y(GenKind kind, std::size_t i, std::size_t j, std::size_t n, const Scalar& a,
                      const Scalar& b) {
  check_index(i, j, n);
  const SparseMat e = SparseMat::unit(n, i, j);
  const SparseMat I = SparseMat::identity(n);
  if (kind == GenKind::e) return kron(e, I) + kron(I, e);
  SparseMat out = a * kron(e, I) + b * kron(I, e);
  const Scalar half(Rational(1, 2));
  for (std::size_t k = 0; k < n; ++k) {
    const SparseMat eik = SparseMat::unit(n, i, k), ekj = SparseMat::unit(n, k, j);
    out += half * (kron(eik, ekj) - kron(ekj, eik));
  }
  return out;
}

SparseMat coproduct_explicit(GenKind kind, std::size_t z, std::size_t w, const SetSolution& s,
                             const Scalar& a, const Scalar& b) {
  const std::size_t n = s.n;
  check_index(z, w, n);
  const Scalar wa = kind == GenKind::e ? Scalar(1) : a;
  const Scalar wb = kind == GenKind::e ? Scalar(1) : b;
  SparseMat out(n * n);
  for (std::size_t xi = 0; xi < n; ++xi)
    for (std::size_t zeta = 0; zeta < n; ++zeta) {
      if (s.s(z, xi) != s.s(w, zeta)) continue;
      out.add(z * n + xi, w * n + zeta, wa);
      out.add(s.s(z, xi) * n + s.t(xi, z), s.s(w, zeta) * n + s.t(zeta, w), wb);
    }
  if (kind == GenKind::f) {
    const Scalar half(Rational(1, 2));
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t yh = 0; yh < n; ++yh) {
        if (w == s.s(s.s(z, y), yh)) out.add(z * n + y, s.s(z, y) * n + yh, half);
        if (z == s.s(s.s(w, y), yh)) out.add(s.s(w, y) * n + yh, w * n + y, -half);
      }
  }
  return out;
}

EvalCoproduct coproduct(GenKind kind, std::size_t i, std::size_t j, std::size_t n) {
  return EvalCoproduct{kind, i, j, coproduct_Y(kind, i, j, n), false};
}

EvalCoproduct coproduct(GenKind kind, std::size_t i, std::size_t j, const TwistData& t) {
  const SparseMat conj = conjugate_by_twist(t, coproduct_Y(kind, i, j, t.solution.n));
  if (conj != coproduct_explicit(kind, i, j, t.solution))
    throw InvariantError("twisted coproduct of " + pair_tag(kind == GenKind::e ? "e" : "f", i, j) +
                         ": explicit summation disagrees with conjugation");
  return EvalCoproduct{kind, i, j, conj, true};
}

std::vector<Identity> coproduct_two_path_identities(const TwistData& t) {
  const std::size_t n = t.solution.n;
  const SparseMat Fi = inverse(t.F);
  std::vector<Identity> out;
  for (auto kind : {GenKind::e, GenKind::f})
    for (std::size_t z = 0; z < n; ++z)
      for (std::size_t w = 0; w < n; ++w)
        out.push_back(equation(
            "twisted Delta(" + pair_tag(kind == GenKind::e ? "e" : "f", z, w) +
                ") explicit = F^-1 Delta_Y F",
            n, {coproduct_explicit(kind, z, w, t.solution)},
            {Fi, coproduct_Y(kind, z, w, n), t.F}));
  return out;
}

std::vector<Identity> intertwining_identities(const BaxterSolution& b, const TwistData* t) {
  const std::size_t n = b.n;
  auto delta = [&](GenKind kind, std::size_t z, std::size_t w, const Scalar& a, const Scalar& c) {
    SparseMat y = coproduct_Y(kind, z, w, n, a, c);
    return t != nullptr ? conjugate_by_twist(*t, y) : y;
  };
  const SparseMat Rd = at(b.R, lam1() - lam2());
  std::vector<Identity> out;
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t w = 0; w < n; ++w) {
      const SparseMat de = delta(GenKind::e, z, w, lam1(), lam2());
      out.push_back(equation("Delta^op(" + pair_tag("e", z, w) + ") R = R Delta", n,
                             {flip(de, n), Rd}, {Rd, de}));
      const SparseMat df = delta(GenKind::f, z, w, lam1(), lam2());
      const SparseMat df_op = flip(delta(GenKind::f, z, w, lam2(), lam1()), n);
      out.push_back(equation("Delta^op(" + pair_tag("f", z, w) + ") R = R Delta", n,
                             {df_op, Rd}, {Rd, df}));
      out.push_back(equation("[Rcheck, Delta(" + pair_tag("e", z, w) + ")] = 0", n,
                             {b.Rcheck, de}, {de, b.Rcheck}));
    }
  return out;
}

CheckReport check_intertwining(const BaxterSolution& b, const TwistData* t) {
  return check_all("intertwining and gl_n invariance", intertwining_identities(b, t));
}

std::vector<Identity> gl_relation_identities(const TwistData& t) {
  const std::size_t n = t.solution.n;
  std::vector<SparseMat> d(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) d[a * n + c] = coproduct(GenKind::e, a, c, t).matrix;
  std::vector<Identity> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t e = 0; e < n; ++e) {
          Side rhs;
          if (c == b) rhs.push_back(Term{1, {d[a * n + e]}});
          if (a == e) rhs.push_back(Term{-1, {d[c * n + b]}});
          if (rhs.empty()) rhs.push_back(Term{0, {SparseMat::identity(n * n)}});
          const SparseMat& x = d[a * n + b];
          const SparseMat& y = d[c * n + e];
          out.push_back(equation("[Delta(" + pair_tag("e", a, b) + "), Delta(" +
                                     pair_tag("e", c, e) + ")]",
                                 n, Side{Term{1, {x, y}}, Term{-1, {y, x}}}, rhs));
        }
  return out;
}

CheckReport check_gl_relations(const TwistData& t) {
  return check_all("gl_n relations of twisted coproducts", gl_relation_identities(t));
}

}  // namespace ybe
