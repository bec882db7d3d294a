#pragma once

// Recovers (B, V, <,>) from a unital alternative algebra A containing a copy
// of M2(F) given by matrix units E, rebuilds M2(B) + V^2 and certifies the
// isomorphism. Every structural fact used along the way is checked on basis
// tuples and recorded in the report.

#include "altkron/coordinatized.hpp"

#include <optional>
#include <string>

namespace altkron {

/// A = even + odd: even = {x : (x, H, H) = 0}, odd = (A, H, H), where H is
/// the span of the matrix units.
struct Grading {
    Subspace even;
    Subspace odd;
};

/// Throws StageError("decompose") when even + odd is not a direct sum equal to A.
Grading decompose(const AlgebraTable& a, const MatrixUnits& e, Exec exec = default_exec());
/// Same grading reached the other way round: odd = {x : a x = x a* for a in H},
/// even = {x : (H, H, x) = 0}. Used to cross-check decompose.
Grading decompose_alternate(const AlgebraTable& a, const MatrixUnits& e, Exec exec = default_exec());

/// Centralizer of H inside the even part, plus checks of its properties
/// (appended to `report`).
Subspace extract_za(const AlgebraTable& a, const Grading& g, const MatrixUnits& e, CheckList& report,
                    Exec exec = default_exec());

/// B = Z_a as a coefficient ring on its echelon basis z_0, z_1, ...
/// `even_basis` has columns z_i E_pq (A coordinates), ordered (2p+q) dim Z_a + i.
struct TensorPart {
    CoeffRing ring;
    Matrix even_basis;
};

/// Throws StageError("verify_tensor") when {z_i E_pq} is not a basis of the
/// even part or Z_a is not a unital associative subalgebra.
TensorPart verify_tensor(const AlgebraTable& a, const Grading& g, const Subspace& za, const MatrixUnits& e,
                         CheckList& report);

/// V(1) = {v in odd : E11 v = v}, V(2) = {v in odd : E22 v = v}. pi12 and pi21
/// are left multiplication by E12 and E21 in echelon coordinates.
struct CayleySplit {
    Subspace v1;
    Subspace v2;
    Matrix pi12;  ///< dim V2 x dim V1
    Matrix pi21;  ///< dim V1 x dim V2
};

/// Throws StageError("split_cayley_part") when the eigenspaces do not split the odd part.
CayleySplit split_cayley_part(const AlgebraTable& a, const Grading& g, const MatrixUnits& e, CheckList& report);

/// <u, v> = (E12 u) v - u (E12 v) on the echelon basis of V(1), expressed in
/// Z_a coordinates, together with the B-module structure of V(1).
struct ExtractedForm {
    BimoduleV module;
    SkewForm form;
};

/// Throws StageError("extract_form") when a value falls outside Z_a.
ExtractedForm extract_form(const AlgebraTable& a, const CayleySplit& split, const Subspace& za,
                           const TensorPart& tensor, const MatrixUnits& e, CheckList& report,
                           Exec exec = default_exec());

/// `l` maps A to bt: column i holds the bt coordinates of the image of the
/// i-th basis element of A. Passes iff l is invertible, sends 1 to 1 and is
/// multiplicative on all basis pairs (witness: the failing pair).
Check iso_check(const AlgebraTable& a, const AlgebraTable& bt, const Matrix& l, Exec exec = default_exec());

struct CoordinatizationResult {
    std::optional<Grading> grading;
    std::optional<Subspace> za;
    std::optional<CayleySplit> split;
    std::optional<KronSpec> spec;
    std::optional<AlgebraTable> rebuilt;
    /// Columns: A coordinates of the rebuilt basis (E_pq z_i -> z_i E_pq,
    /// v_j(1) -> v_j, v_j(2) -> E12 v_j).
    std::optional<Matrix> rebuilt_to_input;
    /// Inverse of rebuilt_to_input: the certified isomorphism A -> rebuilt.
    std::optional<Matrix> iso;
    CheckList report;
    /// Name of the stage that stopped the pipeline, empty on success.
    std::string failed_stage;
    std::string failure;

    bool pass() const { return failed_stage.empty() && report.pass(); }
};

/// Runs the whole pipeline. Stage failures do not throw: the partial result
/// is returned with failed_stage set.
CoordinatizationResult coordinatize(const AlgebraTable& a, const MatrixUnits& e, Exec exec = default_exec());

}  // namespace altkron
