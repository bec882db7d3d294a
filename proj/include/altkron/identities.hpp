#pragma once

#include "altkron/algebra.hpp"
#include "altkron/kernels.hpp"
#include "altkron/report.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace altkron {

/// Alternativity on basis tuples. Expanding (x,x,y) with x = sum l_i b_i gives
///   sum_i l_i^2 (b_i,b_i,y) + sum_{i<j} l_i l_j [(b_i,b_j,y) + (b_j,b_i,y)],
/// so the identity holds for all x iff the diagonal terms and the symmetrised
/// cross terms vanish on basis elements; likewise for (x,y,y). Checking
///   (b_i,b_i,b_k), (b_i,b_k,b_k), (b_i,b_j,b_k)+(b_j,b_i,b_k), (b_i,b_j,b_k)+(b_i,b_k,b_j)
/// is therefore exact over every field, characteristic 2 included.
/// The witness is (i, j, k) and `detail` names the failing criterion.
Check check_alternative(const AlgebraTable& a, Exec exec = default_exec());

enum class Identity {
    moufang_central,              ///< (xy)(zx) = x(yz)x
    commutator_derivation,        ///< [x,y]z + y[x,z] - 3(x,y,z) = [x,yz]
    product_associator,
    commutator_associator,
    commutator_times_associator,
    nested_associator,
    commutator_in_associator,     ///< ([x,y],y,z) = [y,(x,y,z)]
    acirc_left,
    acirc_right
};

/// Accepts the names above and the short labels e15..e19, e21.
/// Throws std::invalid_argument for an unknown name.
Identity parse_identity(const std::string& name);
std::string identity_name(Identity id);
std::vector<Identity> all_identities();

struct IdentityMode {
    enum class Kind { basis_multilinear, random };
    Kind kind = Kind::basis_multilinear;
    std::size_t samples = 0;
    std::uint64_t seed = 0;

    static IdentityMode basis() { return {}; }
    static IdentityMode random(std::size_t n, std::uint64_t seed) { return {Kind::random, n, seed}; }
};

/// An identity f(x_1..x_m) = 0 (possibly several components), homogeneous of
/// the given degree in each variable.
struct IdentitySpec {
    std::string name;
    std::vector<std::string> variables;
    std::vector<int> degrees;
    std::function<std::vector<Element>(const AlgebraTable&, const std::vector<Element>&)> evaluate;
};

const IdentitySpec& identity_spec(Identity id);

/// basis_multilinear: the full linearisation (each variable of degree d
/// replaced by d fresh variables, multilinear part extracted by
/// inclusion-exclusion over subsets) is checked on all basis tuples, using its
/// symmetry in fresh variables from the same original to visit only sorted
/// index groups. random: `samples` trials, each substituting fresh
/// pseudorandom elements into the unlinearised identity.
///
/// commutator_derivation, commutator_associator and commutator_times_associator carry coefficients 2 or 3 and are refused over F_2 and
/// F_3 (std::domain_error).
Check check_identity(const AlgebraTable& a, Identity id, const IdentityMode& mode, Exec exec = default_exec());
Check check_identity(const AlgebraTable& a, const IdentitySpec& spec, const IdentityMode& mode,
                     Exec exec = default_exec());

}  // namespace altkron
