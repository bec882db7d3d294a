#pragma once

#include "altkron/coordinatized.hpp"
#include "altkron/random.hpp"

#include <optional>
#include <string>
#include <utility>

namespace altkron {

/// Output of a doubling construction: the table with its matrix units and,
/// when one exists, an equivalent coordinate description together with the
/// linear map from build_algebra(spec) onto `table` (columns are images of the
/// built basis in `table` coordinates).
struct Construction {
    AlgebraTable table;
    MatrixUnits units;
    std::optional<KronSpec> spec;
    std::optional<Matrix> spec_map;
    CheckList report;
};

/// M2(A) + vM2(A) with  a.vb = v(a* b),  vb.a = v(ab),  va.vb = alpha (b a*).
/// Table basis: E_pq a_i at (2p+q) dim A + i, then vE_pq a_i at 4 dim A + (2p+q) dim A + i.
/// The spec has V = A^2 with F-basis (a_i, 0), (0, a_i) and form -alpha det.
/// Throws PreconditionError for a noncommutative base.
Construction cd(const CoeffRing& base, const Element& alpha, Exec exec = default_exec());

/// Split octonions over a commutative B: cd with alpha = v2 * 1.
Construction octonion(const CoeffRing& base, const Scalar& v2, Exec exec = default_exec());
Construction octonion(const CoeffRing& base, Exec exec = default_exec());

/// M2(A) + vM2(A/[A,A]A) with pre-images taken through the canonical section
/// of the quotient. Requires alpha * b_i central for every basis element
/// (PreconditionError otherwise). The report contains "section_independent",
/// obtained by rebuilding with a second section perturbed by a random map into
/// [A,A]A (seeded by `section_seed`) and comparing tables.
Construction ncd(const CoeffRing& base, const Element& alpha, std::uint64_t section_seed = 1,
                 Exec exec = default_exec());

/// Left and right actions of A on V, one matrix per basis element of A.
struct BimoduleActions {
    std::size_t dim = 0;
    std::vector<Matrix> left;
    std::vector<Matrix> right;
};

/// Two-dimensional Cayley bimodule over M2(F) (basis m1, m2):
/// e_ij m_k = delta_ik m_j, m a = a* m.
BimoduleActions cay_bimodule(const Field& f);
/// A acting on itself by left and right multiplication.
BimoduleActions regular_bimodule(const AlgebraTable& a);

struct NullExtension {
    AlgebraTable table;
    /// check_alternative of the extension, i.e. whether V is an alternative bimodule.
    Check alternative;
};

/// A + V with (a + v)(b + w) = ab + (a w + v b), so V^2 = 0. Unit of A is kept
/// when it acts as identity on both sides of V.
NullExtension split_null_extension(const AlgebraTable& a, const BimoduleActions& v, Exec exec = default_exec());

/// V = B^3 / B(a,b,c) with <e1,e2> = c, <e2,e3> = a, <e3,e1> = b. The
/// F-basis of V is the canonical complement of the submodule inside
/// B^3 (index g dim B + i for b_i e_(g+1)). Throws PreconditionError for a
/// noncommutative B.
KronSpec three_generator_module(const CoeffRing& b, const Element& a, const Element& bb, const Element& c);

struct OctonionVerdict {
    enum class Kind { yes, no, unknown };
    Kind kind = Kind::unknown;
    std::optional<std::pair<Vec, Vec>> witness;
    std::string reason;
};

/// Decides whether <x, y> = 1 for some x, y in V. A supplied witness is
/// verified exactly. Over F_p with p^dim V <= `search_limit` every x is tried
/// and <x, .> = 1 is solved as a linear system in y. Over Q only generator
/// pairs with an invertible value are tried; otherwise the verdict is unknown.
OctonionVerdict octonion_criterion(const KronSpec& spec,
                                   const std::optional<std::pair<Vec, Vec>>& witness = std::nullopt,
                                   std::uint64_t search_limit = 1u << 20, Exec exec = default_exec());

std::string verdict_name(OctonionVerdict::Kind k);

}  // namespace altkron
