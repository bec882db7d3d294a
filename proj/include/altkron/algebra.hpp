#pragma once

#include "altkron/linalg.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace altkron {

struct SparseEntry {
    std::size_t index;
    Scalar value;

    friend bool operator==(const SparseEntry& a, const SparseEntry& b) {
        return a.index == b.index && a.value == b.value;
    }
};
using SparseVec = std::vector<SparseEntry>;

/// Dense coordinate vector of an algebra element.
using Element = Vec;

SparseVec to_sparse(const Vec& v);
Vec to_dense(const Field& f, std::size_t dim, const SparseVec& s);

/// A finite-dimensional algebra given by structure constants:
/// product(i, j) holds the coordinates of b_i b_j. Immutable after
/// construction; the constructor canonicalises sparse vectors (sorted,
/// duplicates merged, zeros dropped) and validates the unit axiom.
class AlgebraTable {
public:
    /// `table` is row-major with dim*dim entries. Throws InputError on a
    /// wrong table size, an index >= dim, or a unit that fails 1x = x1 = x.
    AlgebraTable(Field field, std::vector<std::string> basis_names, std::vector<SparseVec> table,
                 std::optional<Element> unit = std::nullopt);

    /// Builds the table from a callback computing b_i b_j as a dense vector.
    static AlgebraTable from_products(Field field, std::vector<std::string> basis_names,
                                      const std::function<Vec(std::size_t, std::size_t)>& product,
                                      std::optional<Element> unit = std::nullopt);

    const Field& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<std::string>& basis_names() const noexcept { return names_; }
    const SparseVec& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
    bool has_unit() const noexcept { return unit_.has_value(); }
    /// Throws std::logic_error when the algebra has no unit.
    const Element& unit() const;

    Element zero() const { return zero_vec(field_, dim_); }
    Element basis(std::size_t i) const { return unit_vec(field_, dim_, i); }
    /// Index of a basis name, if present.
    std::optional<std::size_t> find_basis(const std::string& name) const;

    friend bool operator==(const AlgebraTable& a, const AlgebraTable& b);

private:
    Field field_;
    std::size_t dim_;
    std::vector<std::string> names_;
    std::vector<SparseVec> table_;
    std::optional<Element> unit_;
};

/// Throws std::invalid_argument when an element does not live in A.
void check_element(const AlgebraTable& a, const Element& x);

Element mul(const AlgebraTable& a, const Element& x, const Element& y);
/// (x, y, z) = (xy)z - x(yz)
Element associator(const AlgebraTable& a, const Element& x, const Element& y, const Element& z);
/// (b_i, b_j, b_k) straight from the structure constants.
Element basis_associator(const AlgebraTable& a, std::size_t i, std::size_t j, std::size_t k);
/// [x, y] = xy - yx
Element commutator(const AlgebraTable& a, const Element& x, const Element& y);
/// x o y = xy + yx
Element jordan(const AlgebraTable& a, const Element& x, const Element& y);

/// Rewrites A in a new basis. Column i of `change` holds the old coordinates of
/// the i-th new basis vector. Throws std::invalid_argument if singular.
AlgebraTable change_basis(const AlgebraTable& a, const Matrix& change, std::vector<std::string> names = {});

/// Four elements E11, E12, E21, E22 meant to span a copy of M2(F).
struct MatrixUnits {
    std::array<std::array<Element, 2>, 2> e;

    const Element& operator()(int p, int q) const { return e[p][q]; }
    Element& operator()(int p, int q) { return e[p][q]; }
    std::vector<Element> as_list() const { return {e[0][0], e[0][1], e[1][0], e[1][1]}; }
};

/// True iff all sixteen relations E_pq E_rs = delta_qr E_ps hold and
/// E11 + E22 is the unit of A. Throws std::logic_error if A has no unit.
bool verify_matrix_units(const AlgebraTable& a, const MatrixUnits& units);

/// Symplectic involution on span{E_pq}: [[a,b],[c,d]] -> [[d,-b],[-c,a]],
/// applied to an element expressed through the given units' coordinates.
Element units_star(const MatrixUnits& units, const std::array<Scalar, 4>& coeffs);

// --- Subspace machinery -------------------------------------------------

/// {x in span(gens) : every constraint sends x to 0}. `apply(t, g)` evaluates
/// the t-th linear constraint on generator g; generators need not be independent.
Subspace constrained_span(const Field& f, std::size_t ambient, const std::vector<Vec>& gens, std::size_t constraints,
                          const std::function<Vec(std::size_t, const Vec&)>& apply);

/// {x in within : [x, s] = 0 for every basis vector s of S}.
Subspace centralizer(const AlgebraTable& a, const Subspace& s, const Subspace& within);
/// N(A): x with (x,A,A) = (A,x,A) = (A,A,x) = 0.
Subspace nucleus(const AlgebraTable& a);
/// K(A): x with [x, A] = 0.
Subspace comm_center(const AlgebraTable& a);
/// Z(A) = N(A) intersect K(A).
Subspace center(const AlgebraTable& a);
/// Span of (s1, s2, s3) over basis triples of the three subspaces.
Subspace associator_subspace(const AlgebraTable& a, const Subspace& s1, const Subspace& s2, const Subspace& s3);
/// Span of s1 s2 over basis pairs.
Subspace product_subspace(const AlgebraTable& a, const Subspace& s1, const Subspace& s2);
/// Span of [s1, s2] over basis pairs.
Subspace commutator_subspace(const AlgebraTable& a, const Subspace& s1, const Subspace& s2);
/// {x in within : (x, s2, s3) = 0 for all basis pairs of s2, s3}.
Subspace associator_annihilator(const AlgebraTable& a, const Subspace& within, const Subspace& s2,
                                const Subspace& s3);

/// Smallest two-sided ideal containing S: iterates S <- S + AS + SA.
Subspace ideal_closure(const AlgebraTable& a, const Subspace& s);
bool is_ideal(const AlgebraTable& a, const Subspace& s);

/// A/I on the canonical complement basis (standard basis vectors of A at
/// the non-pivot columns of I). `projection` is dim(A/I) x dim(A),
/// `section` is dim(A) x dim(A/I) and maps each quotient basis vector to
/// its complement representative.
struct Quotient {
    AlgebraTable algebra;
    Matrix projection;
    Matrix section;
};

/// Throws PreconditionError if I is not a two-sided ideal.
Quotient quotient_algebra(const AlgebraTable& a, const Subspace& ideal);

/// Solves x y = target for y (left division); nullopt if no solution.
std::optional<Element> left_divide(const AlgebraTable& a, const Element& x, const Element& target);
/// True iff x has a two-sided inverse.
bool is_invertible(const AlgebraTable& a, const Element& x);

}  // namespace altkron
