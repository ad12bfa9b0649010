#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ybe/identity.hpp"
#include "ybe/sparse_matrix.hpp"

namespace ybe {

using Table = std::vector<std::vector<std::size_t>>;

// ř(x, y) = (σ_x(y), τ_y(x)) on X = {0, ..., n-1}.
struct SetSolution {
  std::size_t n = 0;
  Table sigma;  // sigma[x][y] = σ_x(y)
  Table tau;    // tau[y][x] = τ_y(x)
  std::string name;

  std::size_t s(std::size_t x, std::size_t y) const { return sigma[x][y]; }
  std::size_t t(std::size_t y, std::size_t x) const { return tau[y][x]; }
  friend bool operator==(const SetSolution& a, const SetSolution& b) {
    return a.n == b.n && a.sigma == b.sigma && a.tau == b.tau;
  }
};

// Checks table shape and entry range; throws InputError otherwise.
SetSolution make_solution(Table sigma, Table tau, std::string name = {});
// τ_y(x) = σ⁻¹_{σ_x(y)}(x).
Table derive_tau_from_sigma(const Table& sigma);
SetSolution from_sigma(Table sigma, std::string name = {});

SetSolution permutation_solution(std::size_t n);
// σ_x = sigma, τ_y = tau for all x, y.
SetSolution lyubashenko(std::vector<std::size_t> sigma, std::vector<std::size_t> tau,
                        std::string name = {});
// σ(y) = y+1, τ(x) = x-1 mod n.
SetSolution cyclic_lyubashenko(std::size_t n);
bool is_lyubashenko_type(const SetSolution& s);

bool is_permutation(const std::vector<std::size_t>& row, std::size_t n);
std::vector<std::size_t> invert_permutation(const std::vector<std::size_t>& p);

CheckReport validate(const SetSolution& s);

SparseMat permutation_operator(std::size_t n);
SparseMat linearize_braid(const SetSolution& s);
SparseMat linearize_r(const SetSolution& s);

Identity braid_identity(const SparseMat& rcheck, std::size_t n);
Identity involutive_identity(const SetSolution& s);

CheckReport check_braid(const SetSolution& s);
CheckReport check_braid_matrix(const SetSolution& s);
CheckReport check_braid_pointwise(const SetSolution& s);
CheckReport check_involutive(const SetSolution& s);
CheckReport check_c1(const SetSolution& s);
bool is_solution(const SetSolution& s);  // valid, involutive and braid

// Conjugates the tables by π: σ'_{π(x)}(π(y)) = π(σ_x(y)).
SetSolution relabel(const SetSolution& s, const std::vector<std::size_t>& pi);

// Throws InputError unless validate, check_involutive and check_braid pass.
void require_involutive_solution(const SetSolution& s);

}  // namespace ybe
