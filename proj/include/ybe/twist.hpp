#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ybe/identity.hpp"
#include "ybe/set_solution.hpp"

namespace ybe {

struct TwistData {
  SparseMat F;               // Σ_η e_ηη ⊗ V_η
  std::vector<SparseMat> V;  // V_η = Σ_y e_{σ_η(y), y}
  SparseMat G_alt;           // Σ e_{τ_y(x), x} ⊗ e_yy
  SetSolution solution;
};

TwistData build_twist(const SetSolution& s);

// F⁻¹ X F for X on two legs.
SparseMat conjugate_by_twist(const TwistData& t, const SparseMat& x);

std::vector<Identity> twist_identities(const TwistData& t);
CheckReport check_twist_identity(const TwistData& t);

// Both refuse with InputError when C1 fails.
SparseMat build_F_1_23(const SetSolution& s);
SparseMat build_Fstar_12_3(const SetSolution& s);

// Δ(V_η), explicit formula checked against F⁻¹(V_η⊗V_η)F.
SparseMat delta_grouplike(const TwistData& t, std::size_t eta);
SparseMat delta_grouplike_explicit(const SetSolution& s, std::size_t eta);
// Two-path equality and Δ^op(V_η) R(λ) = R(λ) Δ(V_η) for one η.
std::vector<Identity> delta_grouplike_identities(const TwistData& t, std::size_t eta);
CheckReport check_delta_grouplike(const TwistData& t);

struct CocycleResult {
  CheckReport report;
  SparseMat F123;  // F12 F*12,3
};
std::vector<Identity> cocycle_identities(const SetSolution& s);
CocycleResult check_cocycle(const SetSolution& s);

inline constexpr std::size_t kMaxTwistLegs = 5;
inline constexpr std::size_t kMaxTwistDim = 1024;
SparseMat nfold_twist_left(const SetSolution& s, std::size_t legs);
SparseMat nfold_twist_right(const SetSolution& s, std::size_t legs);
// Left recursion, asserted equal to the right one.
SparseMat build_nfold_twist(const SetSolution& s, std::size_t legs);

// How Δ(e_ηη) is represented inside the probe.
//  unital:    F⁻¹(e_ηη ⊗ I)F
//  primitive: F⁻¹(e_ηη ⊗ I + I ⊗ e_ηη)F
enum class CoproductChoice { unital, primitive };
SparseMat twisted_diag_coproduct(const TwistData& t, std::size_t eta, CoproductChoice c);
// (Δ⊗id)F = Σ_η Δ(e_ηη) ⊗ V_η.
SparseMat delta_id_F(const TwistData& t, CoproductChoice c);

struct ConjectureReport {
  CheckReport report;  // status is always reported
  bool invertible = false;
  bool commutes_r = false;
  bool commutes_rcheck = false;
  SparseMat phi_inverse;
  std::optional<SparseMat> phi;  // present when all three predicates hold
};
ConjectureReport conjecture_probe(const SetSolution& s,
                                  CoproductChoice c = CoproductChoice::unital);

}  // namespace ybe
