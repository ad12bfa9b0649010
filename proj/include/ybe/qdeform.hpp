#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ybe/identity.hpp"
#include "ybe/set_solution.hpp"
#include "ybe/twist.hpp"

namespace ybe {

// All q-sector matrices are Laurent in s with q = s².
struct HeckeElement {
  std::size_t n = 0;
  SparseMat g;
};

// g = Σ_{x≠y} (e_xy⊗e_yx − q^{−sgn(x−y)} e_xx⊗e_yy) + qI
HeckeElement hecke_g(std::size_t n);
// G⁻¹ = G − (q − q⁻¹)I, valid for any Hecke-type G.
SparseMat hecke_inverse(const SparseMat& G);

// Braid, (G − q)(G + q⁻¹) = 0 and G·G⁻¹ = I. Optional column masks on the
// two-leg and three-leg spaces restrict comparisons.
std::vector<Identity> hecke_identities(const SparseMat& G, std::size_t n,
                                       const std::optional<std::vector<std::size_t>>& cols2 = {},
                                       const std::optional<std::vector<std::size_t>>& cols3 = {});
CheckReport check_hecke(const SparseMat& G, std::size_t n);

// sgn(x−y) = sgn(σ_η(x) − σ_η(y)) for all η and x > y.
CheckReport order_preserving_check(const SetSolution& s);

// G = F⁻¹gF, checked against ř − Σ q^{−sgn(x−σ_x(y))} e_xx⊗e_yy + qI.
// Refuses unless C1 = 0 and the order constraint hold.
SparseMat twist_g(const SetSolution& s, const TwistData& t);
SparseMat twist_g_explicit(const SetSolution& s);
std::vector<Identity> twist_g_identities(const SetSolution& s, const TwistData& t);

// Ř(z) = zG − z⁻¹G⁻¹.
struct QBaxter {
  std::size_t n = 0;
  SparseMat G;
  SparseMat Ginv;
  SparseMat at(const Scalar& z) const;
  SparseMat R_at(const Scalar& z) const;  // P·Ř(z)
};
QBaxter q_baxterize(const SparseMat& G, std::size_t n);
std::vector<Identity> q_baxter_identities(const QBaxter& b,
                                          const std::optional<std::vector<std::size_t>>& cols3 = {},
                                          bool include_r_form = true);
CheckReport check_q_baxter(const QBaxter& b);
// At q = 1 the permutation-solution Baxterization degenerates to (z − z⁻¹)ř.
std::vector<Identity> q_one_identities(std::size_t n);

// Evaluation images on C^n, j cyclic mod n.
SparseMat q_half_h(std::size_t n, std::size_t j, int sign);  // q^{±h_j/2}
SparseMat q_eps(std::size_t n, std::size_t j);                // q^{e_jj}
enum class QGen { e, f, k };  // e_j = e_{j,j+1}, f_j = e_{j+1,j}, k_j = q^{e_jj}
// Δ_q(ξ_j) = q^{−h_j/2} ⊗ ξ_j + ξ_j ⊗ q^{h_j/2}; Δ_q(q^{e_jj}) = q^{e_jj} ⊗ q^{e_jj}.
// For the affine node j = n−1 the spectral factors are a^{∓2} and b^{∓2}.
SparseMat uq_coproduct(QGen gen, std::size_t j, std::size_t n, const Scalar& a = Scalar::var(Var::z1),
                       const Scalar& b = Scalar::var(Var::z2));
SparseMat uq_coproduct_twisted(QGen gen, std::size_t j, const TwistData& t);
// Finite invariance [Ř(z), Δ(ζ)] = 0 and affine intertwining
// R(z1/z2) Δ(ζ_n; z1, z2) = P Δ(ζ_n; z2, z1) P R(z1/z2).
std::vector<Identity> q_invariance_identities(const QBaxter& b);
CheckReport check_q_invariance(const QBaxter& b);

// q-Lyubashenko on the window {−m..m}, indexed 0..2m.
inline constexpr std::size_t kWindowMargin = 2;
struct WindowSolution {
  std::size_t m = 0;
  std::size_t dim = 0;                // 2m + 1
  std::vector<std::size_t> interior;  // points at distance >= margin from the ends
  SparseMat G;                        // shift-twisted Hecke element, truncated
  SparseMat V;                        // Σ e_{x,x−1}, truncated
  SparseMat rcheck;                   // set-theoretic shift solution, truncated
  std::vector<std::size_t> interior_columns(std::size_t legs) const;
};
WindowSolution q_lyubashenko(std::size_t m);
CheckReport order_preserving_window(const WindowSolution& w);
// Everything asserted on interior columns; the note counts differing boundary columns.
std::vector<Identity> window_identities(const WindowSolution& w);
std::vector<CheckReport> check_window(const WindowSolution& w);

}  // namespace ybe
