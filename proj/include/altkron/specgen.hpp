#pragma once

// Random coordinate data for property tests, the acceptance suite and the
// benchmarks. Everything is driven by an explicit seed.

#include "altkron/coordinatized.hpp"
#include "altkron/random.hpp"

#include <string>

namespace altkron {

/// Small unital associative rings: F, F[t]/t^2, F x F, F[t]/t^3, F^3,
/// F x F[t]/t^2 and upper triangular 2x2 matrices, in that order.
std::vector<std::string> ring_catalogue();
/// Catalogue entry by name; dimension at most 3.
AlgebraTable catalogue_ring(const Field& f, const std::string& name);

struct SpecShape {
    std::size_t max_ring_dim = 3;
    std::size_t max_module_dim = 3;
    /// When set, the module dimension is forced to this value.
    std::optional<std::size_t> module_dim;
    /// Apply a random change of basis to the ring.
    bool scramble_basis = true;
};

/// B from the catalogue, V = (B/[B,B]B)^m modulo a random submodule, and a
/// random element of the space of valid forms on V.
KronSpec random_spec(const Field& f, Rng& rng, const SpecShape& shape = {});

/// Random valid form: a random combination of a basis of form_space(b, v).
SkewForm random_form(const CoeffRing& b, const BimoduleV& v, Rng& rng);

/// Adds c and -c at (i, j) and (j, i) for a random i < j and a random nonzero
/// central c. Used to break the cyclic identity; returns the pair touched.
std::pair<std::size_t, std::size_t> perturb_form(KronSpec& spec, Rng& rng);

}  // namespace altkron
