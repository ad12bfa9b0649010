#pragma once

#include <cstddef>
#include <vector>

#include "ybe/set_solution.hpp"

namespace ybe {

inline constexpr std::size_t kMaxEnumerationN = 4;
inline constexpr std::size_t kMaxNaiveN = 3;

struct SolutionCatalogue {
  std::size_t n = 0;
  std::vector<SetSolution> solutions;
  bool canonical = false;
};

// All involutive non-degenerate braid solutions, τ derived from σ. Members are
// listed in lexicographic order of their σ tables.
SolutionCatalogue enumerate_involutive(std::size_t n);
// Same catalogue from a search over independent σ and τ tables.
SolutionCatalogue enumerate_naive(std::size_t n);
// One representative per relabeling orbit, kept in catalogue order.
SolutionCatalogue reduce_mod_relabeling(const SolutionCatalogue& cat);

// Lexicographically least relabeled copy.
SetSolution canonical_form(const SetSolution& s);
bool same_members(const SolutionCatalogue& a, const SolutionCatalogue& b);

// All permutations of 0..n-1 in lexicographic order.
std::vector<std::vector<std::size_t>> all_permutations(std::size_t n);

}  // namespace ybe
