#include "altkron/random.hpp"

namespace altkron {

Scalar random_scalar(const Field& f, Rng& rng) {
    if (f.is_rational()) return f.from_int(rng.between(-3, 3));
    return Scalar::residue(rng.below(f.modulus()), f.modulus());
}

Vec random_vec(const Field& f, std::size_t n, Rng& rng) {
    Vec v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(f, rng));
    return v;
}

Matrix random_invertible(const Field& f, std::size_t n, Rng& rng) {
    for (;;) {
        Matrix m(f, n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m.at(r, c) = random_scalar(f, rng);
        if (rank(m) == n) return m;
    }
}

}  // namespace altkron
