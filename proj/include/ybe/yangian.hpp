#pragma once

#include <cstddef>
#include <vector>

#include "ybe/identity.hpp"
#include "ybe/set_solution.hpp"
#include "ybe/twist.hpp"

namespace ybe {

// Polynomial normalization: Ř(λ) = λř + I and R(λ) = λr + P. The form
// I + P/λ differs by the overall factor 1/λ and is not stored.
struct BaxterSolution {
  std::size_t n = 0;
  SparseMat Rcheck;
  SparseMat R;
  SetSolution source;
};

BaxterSolution baxterize(const SetSolution& s);
// No involutivity or braid gate; used for negative controls.
BaxterSolution baxterize_unchecked(const SetSolution& s);
BaxterSolution yangian_R(std::size_t n);

// M(λ) with λ replaced by arg.
SparseMat at(const SparseMat& m, const Scalar& arg);

std::vector<Identity> param_ybe_identities(const BaxterSolution& b);
std::vector<Identity> unitarity_identities(const BaxterSolution& b);
std::vector<Identity> crossing_identities(const BaxterSolution& b);  // includes t1t2 symmetry
std::vector<Identity> hecke_span_identities(const BaxterSolution& b);
std::vector<Identity> rtt_identities(const BaxterSolution& b);
std::vector<Identity> t_twist_identities(const BaxterSolution& b, const TwistData& t);

CheckReport check_param_ybe(const BaxterSolution& b);
CheckReport check_unitarity(const BaxterSolution& b);
CheckReport check_crossing(const BaxterSolution& b);
CheckReport check_hecke_span(const BaxterSolution& b);
CheckReport check_rtt(const BaxterSolution& b);
CheckReport check_T_twist(const BaxterSolution& b, const TwistData& t);

enum class GenKind { e, f };

struct EvalCoproduct {
  GenKind kind = GenKind::e;
  std::size_t i = 0;
  std::size_t j = 0;
  SparseMat matrix;  // over λ1, λ2 for kind f
  bool twisted = false;
};

// Untwisted: Δ_Y(e_ij) = e⊗I + I⊗e,
// Δ_Y(f_ij; a, b) = a e⊗I + b I⊗e + ½ Σ_k (e_ik⊗e_kj − e_kj⊗e_ik).
SparseMat coproduct_Y(GenKind kind, std::size_t i, std::size_t j, std::size_t n,
                      const Scalar& a = lam1(), const Scalar& b = lam2());
// Twisted by explicit summation over the solution tables.
SparseMat coproduct_explicit(GenKind kind, std::size_t z, std::size_t w, const SetSolution& s,
                             const Scalar& a = lam1(), const Scalar& b = lam2());
EvalCoproduct coproduct(GenKind kind, std::size_t i, std::size_t j, std::size_t n);
// Conjugation F⁻¹Δ_Y F, asserted equal to the explicit summation.
EvalCoproduct coproduct(GenKind kind, std::size_t i, std::size_t j, const TwistData& t);

std::vector<Identity> coproduct_two_path_identities(const TwistData& t);
// Intertwining for e and f, and [Ř(λ), Δ(e_xy)] = 0, for all index pairs.
// Without a twist the Yangian coproduct Δ_Y is used.
std::vector<Identity> intertwining_identities(const BaxterSolution& b, const TwistData* t);
CheckReport check_intertwining(const BaxterSolution& b, const TwistData* t);
// [Δ(e_ab), Δ(e_cd)] = δ_cb Δ(e_ad) − δ_ad Δ(e_cb).
std::vector<Identity> gl_relation_identities(const TwistData& t);
CheckReport check_gl_relations(const TwistData& t);

}  // namespace ybe
