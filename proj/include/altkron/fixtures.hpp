#pragma once

#include "altkron/algebra.hpp"
#include "altkron/random.hpp"

namespace altkron {

/// M2(F) on e11, e12, e21, e22.
AlgebraTable matrix_algebra2(const Field& f);
/// The canonical matrix units of matrix_algebra2.
MatrixUnits standard_units(const Field& f);
/// F itself, one basis element "1".
AlgebraTable ground_algebra(const Field& f);
/// F[t]/(t^k) on 1, t, ..., t^(k-1).
AlgebraTable truncated_poly(const Field& f, std::size_t k);
/// Exterior algebra on two generators: 1, e1, e2, e1e2.
AlgebraTable grassmann2(const Field& f);
/// Upper triangular 2x2 matrices on e11, e12, e22.
AlgebraTable upper_triangular2(const Field& f);
/// A x B with componentwise product; names are prefixed "l." and "r.".
AlgebraTable direct_product(const AlgebraTable& a, const AlgebraTable& b);
/// A (x) B on the basis a_i (x) b_j, index i*dim B + j. Both factors must be associative
/// for the result to be meaningful; no check is made.
AlgebraTable tensor_product(const AlgebraTable& a, const AlgebraTable& b);
/// Structure constants drawn independently at random. Generically neither
/// unital nor alternative.
AlgebraTable random_table(const Field& f, std::size_t dim, Rng& rng);

}  // namespace altkron
