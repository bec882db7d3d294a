#pragma once

#include "altkron/algebra.hpp"
#include "altkron/kernels.hpp"
#include "altkron/report.hpp"

#include <array>
#include <vector>

namespace altkron {

/// A unital associative algebra used as coefficient ring. The center and the
/// ideal generated by commutators are computed once at construction.
class CoeffRing {
public:
    /// Throws PreconditionError when the table has no unit or is not associative.
    explicit CoeffRing(AlgebraTable table);

    const AlgebraTable& table() const noexcept { return table_; }
    const Field& field() const noexcept { return table_.field(); }
    std::size_t dim() const noexcept { return table_.dim(); }
    const Element& one() const { return table_.unit(); }
    Element zero() const { return table_.zero(); }
    Element mul(const Element& x, const Element& y) const { return altkron::mul(table_, x, y); }

    const Subspace& center() const noexcept { return center_; }
    /// [B,B]B
    const Subspace& commutator_ideal() const noexcept { return commutator_ideal_; }
    bool is_commutative() const noexcept { return commutator_ideal_.dim() == 0; }

private:
    AlgebraTable table_;
    Subspace center_;
    Subspace commutator_ideal_;
};

/// Left B-module given by one matrix per basis element of B (acting on
/// column vectors of length dim). The right action is taken equal to the left.
struct BimoduleV {
    std::size_t dim = 0;
    std::vector<Matrix> action;
};

/// Matrix of the action of an arbitrary element b.
Matrix action_matrix(const CoeffRing& b, const BimoduleV& v, const Element& elem);
Vec act(const CoeffRing& b, const BimoduleV& v, const Element& elem, const Vec& x);

/// B^rank with left multiplication; F-basis index g * dim B + i is b_i in slot g.
BimoduleV free_module(const CoeffRing& b, std::size_t rank);
/// Smallest B-submodule containing the given vectors.
Subspace submodule_closure(const CoeffRing& b, const BimoduleV& v, const Subspace& s);

struct QuotientModule {
    BimoduleV module;
    Matrix projection;  ///< dim(V/N) x dim V
    Matrix section;     ///< dim V x dim(V/N), complement representatives
};
/// V/N on the canonical complement basis. Throws PreconditionError if N is
/// not a submodule.
QuotientModule quotient_module(const CoeffRing& b, const BimoduleV& v, const Subspace& n);

/// Gram matrix of a form on the F-basis of V: at(i, j) = <v_i, v_j> in B.
struct SkewForm {
    std::size_t n = 0;
    std::vector<Element> entries;

    static SkewForm zero(const CoeffRing& b, std::size_t n);
    Element& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
    const Element& at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
    friend bool operator==(const SkewForm& a, const SkewForm& b) { return a.n == b.n && a.entries == b.entries; }
};

struct KronSpec {
    CoeffRing ring;
    BimoduleV module;
    SkewForm form;
};

/// [[a, b], [c, d]] over B, stored as {a, b, c, d}.
struct Mat2 {
    std::array<Element, 4> e;

    static Mat2 zero(const CoeffRing& b);
    static Mat2 identity(const CoeffRing& b);
    Element& operator()(int p, int q) { return e[static_cast<std::size_t>(2 * p + q)]; }
    const Element& operator()(int p, int q) const { return e[static_cast<std::size_t>(2 * p + q)]; }
    friend bool operator==(const Mat2& x, const Mat2& y) { return x.e == y.e; }
};

/// [[a,b],[c,d]] -> [[d,-b],[-c,a]]
Mat2 star(const Mat2& m);
Mat2 mat2_mul(const CoeffRing& b, const Mat2& x, const Mat2& y);
Mat2 operator+(const Mat2& x, const Mat2& y);

/// X_a + x(1) + y(2)
struct KronElement {
    Mat2 mat;
    Vec x;
    Vec y;

    static KronElement zero(const KronSpec& spec);
    friend bool operator==(const KronElement& a, const KronElement& b) {
        return a.mat == b.mat && a.x == b.x && a.y == b.y;
    }
};

/// Bilinear extension of the gram matrix.
Element form_value(const CoeffRing& b, const SkewForm& g, const Vec& x, const Vec& y);
Element form_value(const KronSpec& spec, const Vec& x, const Vec& y);

/// Module axioms, skew symmetry, centrality, B-bilinearity, the cyclic
/// identity <u,v>w + <v,w>u + <w,u>v = 0 on basis triples and the quadratic
/// relation <u,v><w,t> + <v,w><u,t> + <w,u><v,t> = 0 on basis quadruples.
CheckList validate_form(const KronSpec& spec, Exec exec = default_exec());

/// (X_a, x, y)(Y_a, z, t) =
///   X_a Y_a + [[-<x,t>, -<y,t>], [<x,z>, <y,z>]]  +  (z,t) X_a + (x,y) Y_a*
/// where (x,y) [[a,b],[c,d]] = (a x + c y, b x + d y).
KronElement kron_product(const KronSpec& spec, const KronElement& x, const KronElement& y);

/// The algebra M2(B) + V(1) + V(2) as a table. Basis order: E_pq b_i at
/// (2p+q) dim B + i, then v_j(1) at 4 dim B + j, then v_j(2) at 4 dim B + dim V + j.
struct BuiltAlgebra {
    AlgebraTable table;
    MatrixUnits units;
};

/// Throws PreconditionError when validate_form fails, unless `force`.
BuiltAlgebra build_algebra(const KronSpec& spec, bool force = false, Exec exec = default_exec());

Element to_table_element(const KronSpec& spec, const KronElement& x);
KronElement from_table_element(const KronSpec& spec, const Element& x);

/// Basis of the space of valid forms on V: skew, Z(B)-valued, B-bilinear and
/// satisfying the cyclic identity. All of these are linear conditions.
std::vector<SkewForm> form_space(const CoeffRing& b, const BimoduleV& v);

}  // namespace altkron
