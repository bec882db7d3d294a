#pragma once

#include "altkron/algebra.hpp"

#include <cstdint>

namespace altkron {

/// SplitMix64. Small, seedable, and identical on every platform, so a seed
/// recorded in a report reproduces the same sample sequence.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
    /// Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Independent stream for sub-task `k` (used to keep parallel sampling deterministic).
    static Rng derive(std::uint64_t seed, std::uint64_t k) {
        Rng r(seed ^ (k * 0xd1b54a32d192ed03ULL + 0x8cb92ba72f3d8dd7ULL));
        r.next();
        return r;
    }

private:
    std::uint64_t state_;
};

/// Rationals: integer in {-3, ..., 3}. Prime fields: uniform residue.
Scalar random_scalar(const Field& f, Rng& rng);
Vec random_vec(const Field& f, std::size_t n, Rng& rng);
/// Random matrix with small entries, resampled until invertible.
Matrix random_invertible(const Field& f, std::size_t n, Rng& rng);

}  // namespace altkron
