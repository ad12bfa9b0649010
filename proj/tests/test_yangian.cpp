#include <doctest.h>

#include "ybe/enumeration.hpp"
#include "ybe/yangian.hpp"

using namespace ybe;

namespace {

SparseMat I(std::size_t n) { return SparseMat::identity(n); }

SparseMat shift(std::size_t n) {
  SparseMat v(n);
  for (std::size_t x = 0; x < n; ++x) v.add(x, (x + n - 1) % n, Scalar(1));
  return v;
}

std::vector<SetSolution> members_up_to_3() {
  std::vector<SetSolution> out;
  for (std::size_t n = 1; n <= 3; ++n)
    for (auto& s : enumerate_involutive(n).solutions) out.push_back(s);
  return out;
}

const SetSolution kNonBraid = from_sigma({{0, 2, 1}, {0, 2, 1}, {1, 2, 0}});

}  // namespace

TEST_CASE("baxterize examples") {
  const auto y = yangian_R(3);
  CHECK(y.R == lam() * I(9) + permutation_operator(3));
  CHECK(at(y.R, Scalar(0)) == permutation_operator(3));
  const auto b = baxterize(cyclic_lyubashenko(3));
  CHECK(b.R == lam() * kron(transpose(shift(3)), shift(3)) + permutation_operator(3));
  for (const auto& s : members_up_to_3()) {
    const auto bs = baxterize(s);
    CHECK(bs.R == permutation_operator(s.n) * bs.Rcheck);
    CHECK(at(bs.Rcheck, Scalar(0)) == I(s.n * s.n));
  }
  CHECK_THROWS_AS(baxterize(from_sigma({{0, 2, 1}, {0, 2, 1}, {1, 2, 0}})), InputError);
}

TEST_CASE("parameter YBE") {
  CHECK(check_param_ybe(yangian_R(2)).status == Status::pass);
  for (const auto& s : members_up_to_3()) CHECK(check_param_ybe(baxterize(s)).status == Status::pass);
  const auto rep = check_param_ybe(baxterize_unchecked(kNonBraid));
  CHECK(rep.status == Status::fail);
  CHECK(rep.witness.has_value());
}

TEST_CASE("unitarity") {
  const auto y = yangian_R(2);
  const SparseMat P = permutation_operator(2);
  CHECK((lam() * I(4) + P) * (-lam() * I(4) + P) == (Scalar(1) - lam() * lam()) * I(4));
  CHECK(check_unitarity(y).status == Status::pass);
  for (const auto& s : members_up_to_3()) CHECK(check_unitarity(baxterize(s)).status == Status::pass);
  // At λ = 1 the product vanishes.
  const auto b = baxterize(cyclic_lyubashenko(3));
  const SparseMat r21 = permutation_operator(3) * at(b.R, Scalar(-1)) * permutation_operator(3);
  CHECK((at(b.R, Scalar(1)) * r21).is_zero_matrix());
}

TEST_CASE("crossing unitarity and transpose symmetry") {
  // Hand form: P^{t1} = P^{t2} = Q with Q|a,a> = Σ_b |b,b>.
  const std::size_t n = 2;
  SparseMat Q(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) Q.add(b * n + b, a * n + a, Scalar(1));
  const SparseMat P = permutation_operator(n);
  CHECK(partial_transpose(P, 0) == Q);
  CHECK(partial_transpose(P, 1) == Q);
  const Scalar shifted = -lam() - Scalar(2);
  CHECK((lam() * I(4) + Q) * (shifted * I(4) + Q) == lam() * shifted * I(4));
  CHECK(check_crossing(yangian_R(2)).status == Status::pass);
  for (const auto& s : members_up_to_3()) CHECK(check_crossing(baxterize(s)).status == Status::pass);
}

TEST_CASE("Hecke span") {
  for (const auto& s : members_up_to_3()) CHECK(check_hecke_span(baxterize(s)).status == Status::pass);
}

TEST_CASE("RTT") {
  CHECK(check_rtt(yangian_R(2)).status == Status::pass);
  for (const auto& s : members_up_to_3()) CHECK(check_rtt(baxterize(s)).status == Status::pass);
  CHECK(check_rtt(baxterize_unchecked(kNonBraid)).status == Status::fail);
}

TEST_CASE("Yangian coproducts") {
  const SparseMat e01 = SparseMat::unit(2, 0, 1);
  CHECK(coproduct(GenKind::e, 0, 1, 2).matrix == kron(e01, I(2)) + kron(I(2), e01));
  const auto id_twist = build_twist(permutation_solution(3));
  for (auto kind : {GenKind::e, GenKind::f})
    for (std::size_t z = 0; z < 3; ++z)
      for (std::size_t w = 0; w < 3; ++w)
        CHECK(coproduct(kind, z, w, id_twist).matrix == coproduct(kind, z, w, 3).matrix);

  // Lyubashenko: Δ(e_zw) = e_zw⊗I + I⊗e_{τ(z),τ(w)} with τ(x) = x − 1.
  const auto cyc = cyclic_lyubashenko(3);
  const auto tc = build_twist(cyc);
  for (std::size_t z = 0; z < 3; ++z)
    for (std::size_t w = 0; w < 3; ++w) {
      const SparseMat expected =
          kron(SparseMat::unit(3, z, w), I(3)) + kron(I(3), SparseMat::unit(3, (z + 2) % 3, (w + 2) % 3));
      CHECK(coproduct(GenKind::e, z, w, tc).matrix == expected);
    }
  CHECK(variables(coproduct(GenKind::e, 0, 1, 3).matrix).empty());
  CHECK_THROWS_AS(coproduct_Y(GenKind::e, 3, 0, 3), InputError);
  for (const auto& s : members_up_to_3()) {
    const auto t = build_twist(s);
    CHECK(check_all("two paths", coproduct_two_path_identities(t)).status == Status::pass);
  }
}

TEST_CASE("intertwining and gl_n invariance") {
  for (std::size_t n = 2; n <= 3; ++n) CHECK(check_intertwining(yangian_R(n), nullptr).status == Status::pass);
  for (const auto& s : members_up_to_3()) {
    const auto t = build_twist(s);
    CHECK(check_intertwining(baxterize(s), &t).status == Status::pass);
    CHECK(check_gl_relations(t).status == Status::pass);
  }
}

TEST_CASE("literal unsummed f-coproduct breaks intertwining") {
  const std::size_t n = 2;
  const auto y = yangian_R(n);
  const SparseMat Rd = at(y.R, lam1() - lam2());
  const SparseMat P = permutation_operator(n);
  const Scalar half(Rational(1, 2));
  auto literal = [&](const Scalar& a, const Scalar& b) {
    // f_01 with the single index k = 0 and the second term e_kj ⊗ e_ij.
    const SparseMat e = SparseMat::unit(n, 0, 1);
    return a * kron(e, I(n)) + b * kron(I(n), e) +
           half * (kron(SparseMat::unit(n, 0, 0), SparseMat::unit(n, 0, 1)) -
                   kron(SparseMat::unit(n, 0, 1), SparseMat::unit(n, 0, 1)));
  };
  const SparseMat lhs = P * literal(lam2(), lam1()) * P * Rd;
  const SparseMat rhs = Rd * literal(lam1(), lam2());
  CHECK(lhs != rhs);
  // The summed form passes the same test.
  const SparseMat d = coproduct_Y(GenKind::f, 0, 1, n);
  CHECK(P * coproduct_Y(GenKind::f, 0, 1, n, lam2(), lam1()) * P * Rd == Rd * d);
}

TEST_CASE("T-twist") {
  const auto tp = build_twist(permutation_solution(3));
  CHECK(check_T_twist(yangian_R(3), tp).status == Status::pass);
  const auto l2 = lyubashenko({1, 0}, {1, 0});
  const auto t2 = build_twist(l2);
  CHECK(check_T_twist(baxterize(l2), t2).status == Status::pass);
  for (const auto& s : enumerate_involutive(3).solutions) {
    const auto t = build_twist(s);
    CHECK(check_T_twist(baxterize(s), t).status == Status::pass);
  }
}

TEST_CASE("sample-point verdicts agree with exact ones") {
  const auto b = baxterize(cyclic_lyubashenko(3));
  const auto t = build_twist(cyclic_lyubashenko(3));
  std::vector<Identity> ids = param_ybe_identities(b);
  for (auto& id : crossing_identities(b)) ids.push_back(id);
  for (auto& id : rtt_identities(b)) ids.push_back(id);
  for (auto& id : t_twist_identities(b, t)) ids.push_back(id);
  for (auto& id : param_ybe_identities(baxterize_unchecked(kNonBraid))) ids.push_back(id);
  for (const auto& id : ids) {
    const auto exact = check(id);
    CHECK_NOTHROW(require_sound(id, exact, 7));
    CHECK(check_fast(id, 7).status == exact.status);
  }
}
