#pragma once

#include <optional>

#include "ybe/sparse_matrix.hpp"

namespace ybe {

// Inverse of a monomial matrix whose nonzero entries are units.
std::optional<SparseMat> monomial_inverse(const SparseMat& m);

// Gauss-Jordan over Q; nullopt when singular.
std::optional<RationalMat> rational_inverse(const RationalMat& m);

// nullopt when singular. Matrices that are neither monomial nor constant are
// not supported and raise InputError.
std::optional<SparseMat> try_inverse(const SparseMat& m);

// Throws InputError when singular.
SparseMat inverse(const SparseMat& m);

}  // namespace ybe
