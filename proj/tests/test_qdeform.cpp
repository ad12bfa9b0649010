#include <doctest.h>

#include "ybe/enumeration.hpp"
#include "ybe/qdeform.hpp"

using namespace ybe;

namespace {

SparseMat I(std::size_t n) { return SparseMat::identity(n); }
const Scalar q = qpow(1);
const Scalar qi = qpow(-1);

// Column c of m as a map from row to value.
std::vector<std::pair<std::size_t, Scalar>> column(const SparseMat& m, std::size_t c) {
  std::vector<std::pair<std::size_t, Scalar>> out;
  for (std::size_t r = 0; r < m.dim(); ++r)
    if (!m.at(r, c).is_zero()) out.emplace_back(r, m.at(r, c));
  return out;
}

int sgn(long v) { return (v > 0) - (v < 0); }

// g with the opposite sign convention, i.e. P g P.
SparseMat wrong_sign_g(std::size_t n) {
  SparseMat g(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) {
        g.add(x * n + x, x * n + x, q);
        continue;
      }
      g.add(x * n + y, y * n + x, Scalar(1));
      g.add(x * n + y, x * n + y, q - qpow(sgn(long(x) - long(y))));
    }
  return g;
}

}  // namespace

TEST_CASE("hecke_g on two sites") {
  const SparseMat g = hecke_g(2).g;
  using Col = std::vector<std::pair<std::size_t, Scalar>>;
  CHECK(column(g, 0 * 2 + 1) == Col{{1 * 2 + 0, Scalar(1)}});
  CHECK(column(g, 1 * 2 + 0) == Col{{0 * 2 + 1, Scalar(1)}, {1 * 2 + 0, q - qi}});
  CHECK(column(g, 0) == Col{{0, q}});
  CHECK(column(g, 3) == Col{{3, q}});
}

TEST_CASE("hecke_g braid and Hecke relation") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const SparseMat g = hecke_g(n).g;
    CHECK(check_hecke(g, n).status == Status::pass);
    CHECK(((g - q * I(n * n)) * (g + qi * I(n * n))).is_zero_matrix());
    CHECK(g * hecke_inverse(g) == I(n * n));
  }
}

TEST_CASE("q = 1 specialization is the flip") {
  for (std::size_t n = 2; n <= 3; ++n) {
    const SparseMat g1 = substitute(hecke_g(n).g, Var::s, Scalar(1));
    CHECK(g1 == permutation_operator(n));
    CHECK(g1 * g1 == I(n * n));
    CHECK(check_all("q=1", q_one_identities(n)).status == Status::pass);
  }
}

TEST_CASE("order preserving check") {
  CHECK(order_preserving_check(permutation_solution(3)).status == Status::pass);
  const auto rep = order_preserving_check(cyclic_lyubashenko(3));
  CHECK(rep.status == Status::fail);
  REQUIRE(rep.witness);
  CHECK(rep.witness->location == "(eta,x,y)=(0,2,0)");
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& s : enumerate_involutive(n).solutions) {
      bool all_id = true;
      for (const auto& row : s.sigma)
        for (std::size_t y = 0; y < n; ++y) all_id = all_id && row[y] == y;
      CHECK((order_preserving_check(s).status == Status::pass) == all_id);
    }
}

TEST_CASE("twisted G") {
  const auto p = permutation_solution(3);
  const auto tp = build_twist(p);
  CHECK(twist_g(p, tp) == hecke_g(3).g);
  CHECK(twist_g_explicit(p) == hecke_g(3).g);
  CHECK(check_all("twist g", twist_g_identities(p, tp)).status == Status::pass);
  const auto cyc = cyclic_lyubashenko(3);
  CHECK_THROWS_AS(twist_g(cyc, build_twist(cyc)), InputError);
}

TEST_CASE("multiplicative Baxterization") {
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto b = q_baxterize(hecke_g(n).g, n);
    CHECK(check_q_baxter(b).status == Status::pass);
    CHECK(b.at(Scalar(1)) == b.G - b.Ginv);
    CHECK(b.R_at(Scalar(1)) == permutation_operator(n) * (b.G - b.Ginv));
  }
  // q = 1: Ř(z) = (z − z⁻¹) P, a rescaling of λP + I at the pole-free point.
  const auto b = q_baxterize(hecke_g(2).g, 2);
  const Scalar z = Scalar::var(Var::z1);
  CHECK(substitute(b.at(z), Var::s, Scalar(1)) == (z - z.inverse()) * permutation_operator(2));
}

TEST_CASE("U_q coproducts") {
  const SparseMat k0 = q_eps(2, 0);
  CHECK(uq_coproduct(QGen::k, 0, 2) == kron(k0, k0));
  CHECK(k0.at(0, 0) == q);
  CHECK(k0.at(1, 1) == Scalar(1));
  SparseMat half(2), half_inv(2);
  half.add(0, 0, sq(1));
  half.add(1, 1, sq(-1));
  half_inv.add(0, 0, sq(-1));
  half_inv.add(1, 1, sq(1));
  const SparseMat e01 = SparseMat::unit(2, 0, 1);
  CHECK(uq_coproduct(QGen::e, 0, 2) == kron(half_inv, e01) + kron(e01, half));
  const auto tp = build_twist(permutation_solution(3));
  for (std::size_t j = 0; j + 1 < 3; ++j)
    for (auto gen : {QGen::e, QGen::f, QGen::k})
      CHECK(uq_coproduct_twisted(gen, j, tp) == uq_coproduct(gen, j, 3));
}

TEST_CASE("U_q invariance") {
  for (std::size_t n = 2; n <= 3; ++n)
    CHECK(check_q_invariance(q_baxterize(hecke_g(n).g, n)).status == Status::pass);
  const SparseMat bad = wrong_sign_g(3);
  CHECK(bad == permutation_operator(3) * hecke_g(3).g * permutation_operator(3));
  const auto rep = check_q_invariance(q_baxterize(bad, 3));
  CHECK(rep.status == Status::fail);
  CHECK(rep.witness.has_value());
}

TEST_CASE("q-Lyubashenko window") {
  CHECK_THROWS_AS(q_lyubashenko(1), InputError);
  const auto w2 = q_lyubashenko(2);
  CHECK(w2.dim == 5);
  CHECK(w2.interior == std::vector<std::size_t>{2});
  CHECK(order_preserving_window(w2).status == Status::pass);
  for (const auto& r : check_window(w2)) CHECK_MESSAGE(r.status == Status::pass, r.name);

  const auto w3 = q_lyubashenko(3);
  const std::size_t D = w3.dim;
  // Literal formula with σ(y) = y+1, τ(x) = x−1; out-of-window terms dropped.
  SparseMat diag(D * D);
  for (std::size_t x = 0; x < D; ++x)
    for (std::size_t y = 0; y < D; ++y)
      diag.add(x * D + y, x * D + y, qpow(-sgn(long(x) - long(y) - 1)));
  // e_{x,σ(y)} ⊗ e_{y,τ(x)} sends |σ(y), τ(x)> to |x, y>.
  SparseMat lit_r(D * D);
  for (std::size_t x = 1; x < D; ++x)
    for (std::size_t y = 0; y + 1 < D; ++y) lit_r.add(x * D + y, (y + 1) * D + (x - 1), Scalar(1));
  const SparseMat G_lit = lit_r - diag + q * I(D * D);
  for (auto c : w3.interior_columns(2))
    for (std::size_t r = 0; r < D * D; ++r) CHECK(w3.G.at(r, c) == G_lit.at(r, c));
  CHECK(w3.rcheck == lit_r);

  // q = 1 on interior columns reproduces the shift solution.
  const SparseMat G1 = substitute(w3.G, Var::s, Scalar(1));
  for (auto c : w3.interior_columns(2)) {
    const auto [y1, xm1] = std::pair{c / D, c % D};
    CHECK(column(G1, c) == std::vector<std::pair<std::size_t, Scalar>>{{(xm1 + 1) * D + (y1 - 1), Scalar(1)}});
  }
}

TEST_CASE("window m=4 passes on the interior and reports boundary columns") {
  const auto w = q_lyubashenko(4);
  const auto reports = check_window(w);
  for (const auto& r : reports) CHECK_MESSAGE(r.status == Status::pass, r.name);
  bool boundary_noted = false;
  for (const auto& r : reports) boundary_noted = boundary_noted || r.note.find("excluded") != std::string::npos;
  CHECK(boundary_noted);
}
