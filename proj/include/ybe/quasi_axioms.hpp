#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ybe/identity.hpp"
#include "ybe/set_solution.hpp"

namespace ybe {

// R-matrix with a spectral argument living in one variable. Additive
// matrices take λ_i − λ_j, multiplicative ones z_i / z_j; constant matrices
// ignore the argument.
struct SpectralR {
  SparseMat m;
  Var var = Var::lambda;
  bool multiplicative = false;

  // Argument for the pair of spaces (i, j), 1-based as in R_ij.
  SparseMat between(int i, int j) const;
};

// F = I⊗u, Φ = I⊗I⊗u⁻¹, R = (u⁻¹⊗I) R_A (I⊗u) with R_A either I or a
// quasi-triangular R for the untwisted coproduct (e.g. the Yangian R).
struct GroupLikeCase {
  std::size_t n = 0;
  SparseMat u;
  SparseMat u_inv;
  SparseMat F;
  SparseMat Phi;
  SpectralR R_A;
  SpectralR R;
};

GroupLikeCase make_grouplike_case(const SparseMat& u, const SpectralR& R_A);
// Lyubashenko-type solution: u = 𝕍 = Σ_y e_{σ(y),y} and R_A = λI + P.
GroupLikeCase grouplike_from_lyubashenko(const SetSolution& s);

std::vector<Identity> grouplike_identities(const GroupLikeCase& c);
// The result's note names the failing axiom; the precondition Δ(u) = u⊗u is
// checked first and reported as the failure when it breaks.
std::vector<CheckReport> check_grouplike_axioms(const GroupLikeCase& c);

// R12 Φ312 R13 Φ⁻¹132 R23 Φ123 = Φ321 R23 Φ⁻¹231 R13 Φ213 R12, plus the plain YBE
// when Φ213 R12 = R12 Φ123 holds.
std::vector<Identity> modified_ybe_identities(const SpectralR& R, const SparseMat& Phi,
                                              std::size_t n,
                                              const std::optional<std::vector<std::size_t>>& cols = {});
std::vector<CheckReport> check_modified_ybe(const SpectralR& R, const SparseMat& Phi, std::size_t n,
                                            const std::optional<std::vector<std::size_t>>& cols = {});

// Indices of generators that do not commute with u. The default generator set
// is the matrix-unit basis e_ab, listed as index a·n + b.
std::vector<std::size_t> antipode_obstruction(const SparseMat& u,
                                              const std::vector<SparseMat>& generators);
std::vector<std::size_t> antipode_obstruction(const SparseMat& u);
bool is_scalar_matrix(const SparseMat& u);

}  // namespace ybe
