#pragma once

// Plucker relations for families u_ij = -u_ji in a commutative ring.
//
// The relation that 2x2 minors of a 2 x n matrix satisfy is
//     u_ij u_kl - u_ik u_jl + u_il u_jk = 0      (i < j < k < l),
// which is also what <u,v><w,t> + <v,w><u,t> + <w,u><v,t> = 0 gives after
// renaming and using antisymmetry. A commonly quoted variant with middle
// term u_ik u_lk is not satisfied by the minors (already for n = 4); it is
// kept as PluckerConvention::printed so the mismatch can be reproduced.

#include "altkron/kernels.hpp"
#include "altkron/poly.hpp"
#include "altkron/report.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace altkron {

enum class PluckerConvention { determinant, printed };

/// Only u_ij with i < j are stored (indices are 1-based throughout).
template <class T>
struct PluckerFamily {
    std::size_t n = 0;
    T zero;
    std::vector<T> upper;  ///< u_12, u_13, ..., u_1n, u_23, ..., u_(n-1)n

    static std::size_t slot(std::size_t n, std::size_t i, std::size_t j) {
        // Pairs before row i: sum_{r < i} (n - r).
        return (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
    }
    T& stored(std::size_t i, std::size_t j) { return upper[slot(n, i, j)]; }
    const T& stored(std::size_t i, std::size_t j) const { return upper[slot(n, i, j)]; }

    /// u_ij for any 1 <= i, j <= n, with u_ji = -u_ij and u_ii = 0.
    T at(std::size_t i, std::size_t j) const {
        if (i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("Plucker index out of range");
        if (i == j) return zero;
        if (i < j) return stored(i, j);
        return -stored(j, i);
    }
};

template <class T>
PluckerFamily<T> make_family(std::size_t n, T zero) {
    PluckerFamily<T> fam{n, zero, {}};
    fam.upper.assign(n * (n - 1) / 2, zero);
    return fam;
}

/// Checks the four-index relation on every i < j < k < l. `mul` multiplies two
/// ring elements and `is_zero` tests the result.
template <class T, class Mul, class IsZero>
Check check_plucker(const PluckerFamily<T>& fam, Mul mul, IsZero is_zero_fn,
                    PluckerConvention conv = PluckerConvention::determinant, Exec exec = default_exec()) {
    const std::size_t n = fam.n;
    std::vector<std::vector<std::size_t>> quads;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            for (std::size_t k = j + 1; k <= n; ++k)
                for (std::size_t l = k + 1; l <= n; ++l) quads.push_back({i, j, k, l});
    auto value = [&](const std::vector<std::size_t>& q) {
        const std::size_t i = q[0], j = q[1], k = q[2], l = q[3];
        T first = mul(fam.at(i, j), fam.at(k, l));
        T third = mul(fam.at(i, l), fam.at(j, k));
        if (conv == PluckerConvention::determinant) return first - mul(fam.at(i, k), fam.at(j, l)) + third;
        return first + mul(fam.at(i, k), fam.at(l, k)) + third;
    };
    Check c{conv == PluckerConvention::determinant ? "plucker" : "plucker_printed", true, {}, {}, std::nullopt};
    auto bad = first_failure(quads.size(), [&](std::size_t t) { return !is_zero_fn(value(quads[t])); }, exec);
    if (bad) {
        c.pass = false;
        c.witness = quads[*bad];
        c.detail = "relation fails on quadruple (" + std::to_string(c.witness[0]) + "," + std::to_string(c.witness[1]) +
                   "," + std::to_string(c.witness[2]) + "," + std::to_string(c.witness[3]) + ")";
    }
    return c;
}

using PolyFamily = PluckerFamily<MultiPoly>;

Check check_plucker(const PolyFamily& fam, PluckerConvention conv = PluckerConvention::determinant,
                    Exec exec = default_exec());

/// Variables x1..xn, y1..yn in that order.
std::vector<std::string> grassmann_variables(std::size_t n);

/// u_ij = x_i y_j - x_j y_i. Throws std::invalid_argument for n < 2.
PolyFamily grassmann_alphas(std::size_t n, const Field& f = Field::rational());

/// u_ij = a_i - a_j. All entries must share variables and field.
PolyFamily difference_family(const std::vector<MultiPoly>& a);
/// Scalar entries, as constant polynomials without variables.
PolyFamily difference_family(const Field& f, const std::vector<Scalar>& a);

/// u_12 u_ij + u_1i u_j2 + u_1j u_2i = 0 for all 2 < i < j <= n.
Check check_pivot_relation(const PolyFamily& fam, Exec exec = default_exec());

struct IndependenceReport {
    std::size_t n = 0;
    std::size_t expected_rank = 0;
    std::size_t max_rank = 0;
    bool certified = false;
    std::size_t trials = 0;
    std::size_t discarded = 0;  ///< samples with rank 0
    std::vector<Scalar> point;  ///< first full-rank point, values for x1..xn, y1..yn
    std::uint64_t seed = 0;
};

/// Jacobian of (u_12, ..., u_1n, u_23, ..., u_2n) with respect to the 2n
/// variables, evaluated at `trials` pseudorandom points with coordinates in
/// {-3, ..., 3}. Rank 2n - 3 at any point certifies algebraic independence.
/// Throws std::invalid_argument for n < 3 and std::domain_error over F_p.
IndependenceReport independence_check(std::size_t n, std::size_t trials, std::uint64_t seed,
                                      const Field& f = Field::rational());

/// Rank of that Jacobian at one point (values for x1..xn, y1..yn).
std::size_t jacobian_rank(std::size_t n, const std::vector<Scalar>& point, const Field& f = Field::rational());

}  // namespace altkron
