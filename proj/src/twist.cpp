#include "ybe/twist.hpp"

#include "ybe/linalg.hpp"

namespace ybe {

namespace {

SparseMat diag_unit(std::size_t n, std::size_t a) { return SparseMat::unit(n, a, a); }

void require_c1(const SetSolution& s, const char* what) {
  const auto c1 = check_c1(s);
  if (c1.status != Status::pass)
    throw InputError(std::string(what) + " needs C1 = 0; violated at " + c1.witness->location);
}

// R(λ) = λ r + P, built locally so the twist layer stays independent of the
// Baxterization code.
SparseMat local_R(const SetSolution& s) {
  return lam() * linearize_r(s) + permutation_operator(s.n);
}

SparseMat flip(const SparseMat& x, std::size_t n) {
  const SparseMat p = permutation_operator(n);
  return p * x * p;
}

}  // namespace

TwistData build_twist(const SetSolution& s) {
  require_involutive_solution(s);
  const std::size_t n = s.n;
  TwistData t;
  t.solution = s;
  t.F = SparseMat(n * n);
  t.G_alt = SparseMat(n * n);
  for (std::size_t eta = 0; eta < n; ++eta) {
    SparseMat v(n);
    for (std::size_t y = 0; y < n; ++y) v.add(s.s(eta, y), y, Scalar(1));
    t.F += kron(diag_unit(n, eta), v);
    t.V.push_back(std::move(v));
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t.G_alt.add(s.t(y, x) * n + y, x * n + y, Scalar(1));
  return t;
}

SparseMat conjugate_by_twist(const TwistData& t, const SparseMat& x) {
  return inverse(t.F) * x * t.F;
}

std::vector<Identity> twist_identities(const TwistData& t) {
  const std::size_t n = t.solution.n;
  const SparseMat rc = linearize_braid(t.solution);
  const SparseMat r = linearize_r(t.solution);
  const SparseMat P = permutation_operator(n);
  const SparseMat Fi = inverse(t.F);
  const SparseMat Gi = inverse(t.G_alt);
  return {
      equation("rcheck = F^-1 P F", n, {rc}, {Fi, P, t.F}),
      equation("r = (F^op)^-1 F", n, {r}, {inverse(flip(t.F, n)), t.F}),
      equation("rcheck = G^-1 P G", n, {rc}, {Gi, P, t.G_alt}),
      equation("r = (G^op)^-1 G", n, {r}, {inverse(flip(t.G_alt, n)), t.G_alt}),
  };
}

CheckReport check_twist_identity(const TwistData& t) {
  return check_all("twist identities", twist_identities(t));
}

SparseMat delta_grouplike_explicit(const SetSolution& s, std::size_t eta) {
  const std::size_t n = s.n;
  SparseMat out(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    SparseMat right(n);
    for (std::size_t y = 0; y < n; ++y) right.add(s.s(s.t(x, eta), y), y, Scalar(1));
    out += kron(SparseMat::unit(n, s.s(eta, x), x), right);
  }
  return out;
}

SparseMat delta_grouplike(const TwistData& t, std::size_t eta) {
  if (eta >= t.solution.n) throw InputError("delta_grouplike: index out of range");
  require_c1(t.solution, "delta_grouplike");
  const SparseMat explicit_form = delta_grouplike_explicit(t.solution, eta);
  const SparseMat conj = conjugate_by_twist(t, kron(t.V[eta], t.V[eta]));
  if (explicit_form != conj)
    throw InvariantError("Delta(V_" + std::to_string(eta) +
                         ") explicit formula disagrees with conjugation");
  return explicit_form;
}

std::vector<Identity> delta_grouplike_identities(const TwistData& t, std::size_t eta) {
  const std::size_t n = t.solution.n;
  const SparseMat d = delta_grouplike_explicit(t.solution, eta);
  const SparseMat R = local_R(t.solution);
  const std::string tag = "[eta=" + std::to_string(eta) + "]";
  return {
      equation("Delta(V) explicit = F^-1 (V x V) F " + tag, n, {d},
               {inverse(t.F), kron(t.V[eta], t.V[eta]), t.F}),
      equation("Delta^op(V) R(lambda) = R(lambda) Delta(V) " + tag, n, {flip(d, n), R}, {R, d}),
  };
}

CheckReport check_delta_grouplike(const TwistData& t) {
  std::vector<Identity> ids;
  for (std::size_t eta = 0; eta < t.solution.n; ++eta)
    for (auto& id : delta_grouplike_identities(t, eta)) ids.push_back(std::move(id));
  return check_all("Delta of group-likes", ids);
}

SparseMat build_F_1_23(const SetSolution& s) {
  require_c1(s, "F_1,23");
  const std::size_t n = s.n;
  SparseMat out(n * n * n);
  for (std::size_t eta = 0; eta < n; ++eta)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t a = s.s(eta, x);
        out.add(basis_index({a, eta, s.s(x, y)}, n), basis_index({a, s.t(x, eta), y}, n),
                Scalar(1));
      }
  // (id⊗Δ)F computed through the group-like coproducts.
  const TwistData t = build_twist(s);
  SparseMat via_delta(n * n * n);
  for (std::size_t eta = 0; eta < n; ++eta)
    via_delta += kron(diag_unit(n, eta), delta_grouplike(t, eta));
  if (via_delta != out) throw InvariantError("F_1,23 formula disagrees with (id x Delta)F");
  return out;
}

SparseMat build_Fstar_12_3(const SetSolution& s) {
  require_c1(s, "F*_12,3");
  const std::size_t n = s.n;
  SparseMat out(n * n * n);
  for (std::size_t eta = 0; eta < n; ++eta)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t a = s.s(eta, x), b = s.t(x, eta);
        out.add(basis_index({a, b, s.s(eta, s.s(x, y))}, n), basis_index({a, b, y}, n),
                Scalar(1));
      }
  return out;
}

std::vector<Identity> cocycle_identities(const SetSolution& s) {
  const std::size_t n = s.n;
  const TwistData t = build_twist(s);
  const SparseMat F1 = build_F_1_23(s);
  const SparseMat Fs = build_Fstar_12_3(s);
  const SparseMat F12 = embed(t.F, {0, 1}, n, 3);
  const SparseMat F23 = embed(t.F, {1, 2}, n, 3);
  const SparseMat rc = linearize_braid(s);
  const SparseMat rc12 = embed(rc, {0, 1}, n, 3);
  const SparseMat rc23 = embed(rc, {1, 2}, n, 3);
  return {
      equation("F12 F*12,3 = F23 F1,23", n, {F12, Fs}, {F23, F1}),
      equation("rcheck12 F*12,3 = F*12,3 rcheck12", n, {rc12, Fs}, {Fs, rc12}),
      equation("rcheck23 F1,23 = F1,23 rcheck23", n, {rc23, F1}, {F1, rc23}),
  };
}

CocycleResult check_cocycle(const SetSolution& s) {
  const auto ids = cocycle_identities(s);
  CocycleResult out{check_all("cocycle", ids), evaluate(ids[0].lhs)};
  return out;
}

namespace {

void check_nfold_range(const SetSolution& s, std::size_t legs) {
  if (legs < 2 || legs > kMaxTwistLegs)
    throw InputError("N-fold twist needs 2 <= N <= " + std::to_string(kMaxTwistLegs));
  if (ipow(s.n, legs) > kMaxTwistDim)
    throw InputError("N-fold twist dimension n^N exceeds " + std::to_string(kMaxTwistDim));
  require_c1(s, "N-fold twist");
}

SparseMat tensor_power(const SparseMat& m, std::size_t k) {
  SparseMat out = m;
  for (std::size_t i = 1; i < k; ++i) out = kron(out, m);
  return out;
}

}  // namespace

SparseMat nfold_twist_left(const SetSolution& s, std::size_t legs) {
  check_nfold_range(s, legs);
  const TwistData t = build_twist(s);
  const std::size_t n = s.n;
  // F_{2..N} on N-1 legs, starting from the one-leg identity.
  SparseMat prev = SparseMat::identity(n);
  for (std::size_t k = 2; k <= legs; ++k) {
    const SparseMat prev_inv = inverse(prev);
    SparseMat head(ipow(n, k));
    for (std::size_t eta = 0; eta < n; ++eta)
      head += kron(diag_unit(n, eta), prev_inv * tensor_power(t.V[eta], k - 1) * prev);
    prev = kron(SparseMat::identity(n), prev) * head;
  }
  return prev;
}

SparseMat nfold_twist_right(const SetSolution& s, std::size_t legs) {
  check_nfold_range(s, legs);
  const TwistData t = build_twist(s);
  const std::size_t n = s.n;
  SparseMat prev = SparseMat::identity(n);
  for (std::size_t k = 2; k <= legs; ++k) {
    // F*_{1..k-1,k} = Σ e_{a1a1} ⊗ ... ⊗ e_{a(k-1)a(k-1)} ⊗ V_{a1} ... V_{a(k-1)}
    SparseMat star(ipow(n, k));
    const std::size_t combos = ipow(n, k - 1);
    for (std::size_t c = 0; c < combos; ++c) {
      const auto a = basis_digits(c, n, k - 1);
      SparseMat prod = SparseMat::identity(n);
      for (auto ai : a) prod = prod * t.V[ai];
      star += kron(SparseMat::unit(combos, c, c), prod);
    }
    prev = kron(prev, SparseMat::identity(n)) * star;
  }
  return prev;
}

SparseMat build_nfold_twist(const SetSolution& s, std::size_t legs) {
  SparseMat left = nfold_twist_left(s, legs);
  if (left != nfold_twist_right(s, legs))
    throw InvariantError("left and right N-fold twist recursions disagree for N=" +
                         std::to_string(legs));
  return left;
}

SparseMat twisted_diag_coproduct(const TwistData& t, std::size_t eta, CoproductChoice c) {
  const std::size_t n = t.solution.n;
  const SparseMat e = diag_unit(n, eta);
  const SparseMat I = SparseMat::identity(n);
  SparseMat un = kron(e, I);
  if (c == CoproductChoice::primitive) un += kron(I, e);
  return conjugate_by_twist(t, un);
}

SparseMat delta_id_F(const TwistData& t, CoproductChoice c) {
  const std::size_t n = t.solution.n;
  SparseMat out(n * n * n);
  for (std::size_t eta = 0; eta < n; ++eta)
    out += kron(twisted_diag_coproduct(t, eta, c), t.V[eta]);
  return out;
}

ConjectureReport conjecture_probe(const SetSolution& s, CoproductChoice c) {
  Stopwatch clock;
  require_c1(s, "conjecture probe");
  const std::size_t n = s.n;
  const TwistData t = build_twist(s);
  SparseMat dF_inv(n * n * n);
  for (std::size_t eta = 0; eta < n; ++eta)
    dF_inv += kron(twisted_diag_coproduct(t, eta, c), inverse(t.V[eta]));

  ConjectureReport out;
  out.phi_inverse = dF_inv * build_Fstar_12_3(s);
  const SparseMat& pinv = out.phi_inverse;
  const SparseMat r12 = embed(linearize_r(s), {0, 1}, n, 3);
  const SparseMat rc12 = embed(linearize_braid(s), {0, 1}, n, 3);
  // Stated on Φ⁻¹, which is equivalent whenever Φ exists:
  // Φ₂₁₃ r₁₂ = r₁₂ Φ  <=>  r₁₂ Φ⁻¹ = Φ⁻¹₂₁₃ r₁₂, and [Φ, ř₁₂] = 0 <=> [Φ⁻¹, ř₁₂] = 0.
  out.commutes_r = r12 * pinv == embed(pinv, {1, 0, 2}, n, 3) * r12;
  out.commutes_rcheck = commutator(pinv, rc12).is_zero_matrix();
  auto phi = try_inverse(pinv);
  out.invertible = phi.has_value();

  CheckReport& rep = out.report;
  rep.name = std::string("conjecture probe (") +
             (c == CoproductChoice::unital ? "unital" : "primitive") + " coproduct)";
  rep.status = Status::reported;
  rep.note = std::string("invertible=") + (out.invertible ? "true" : "false") +
             " commutes_r=" + (out.commutes_r ? "true" : "false") +
             " commutes_rcheck=" + (out.commutes_rcheck ? "true" : "false");
  if (out.invertible && out.commutes_r && out.commutes_rcheck) out.phi = std::move(*phi);
  rep.millis = clock.millis();
  return out;
}

}  // namespace ybe
