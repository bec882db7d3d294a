#include "altkron/specgen.hpp"

#include "altkron/errors.hpp"
#include "altkron/fixtures.hpp"

namespace altkron {

std::vector<std::string> ring_catalogue() {
    return {"F", "F[t]/t^2", "FxF", "F[t]/t^3", "F^3", "FxF[t]/t^2", "T2"};
}

AlgebraTable catalogue_ring(const Field& f, const std::string& name) {
    const AlgebraTable g = ground_algebra(f);
    if (name == "F") return g;
    if (name == "F[t]/t^2") return truncated_poly(f, 2);
    if (name == "FxF") return direct_product(g, g);
    if (name == "F[t]/t^3") return truncated_poly(f, 3);
    if (name == "F^3") return direct_product(g, direct_product(g, g));
    if (name == "FxF[t]/t^2") return direct_product(g, truncated_poly(f, 2));
    if (name == "T2") return upper_triangular2(f);
    throw std::invalid_argument("unknown catalogue ring '" + name + "'");
}

namespace {

/// (B/[B,B]B)^rank as a left B-module.
BimoduleV abelianised_free_module(const CoeffRing& b, std::size_t rank) {
    const Field& f = b.field();
    const std::size_t d = b.dim();
    const Subspace& ideal = b.commutator_ideal();
    if (ideal.dim() == 0) return free_module(b, rank);
    Quotient q = quotient_algebra(b.table(), ideal);
    const std::size_t db = q.algebra.dim();
    BimoduleV v{rank * db, {}};
    for (std::size_t i = 0; i < d; ++i) {
        const Vec pi = q.projection.column(i);
        Matrix m(f, v.dim, v.dim);
        for (std::size_t k = 0; k < db; ++k) {
            const Vec col = mul(q.algebra, pi, q.algebra.basis(k));
            for (std::size_t g = 0; g < rank; ++g)
                for (std::size_t r = 0; r < db; ++r) m.at(g * db + r, g * db + k) = col[r];
        }
        v.action.push_back(std::move(m));
    }
    return v;
}

Vec sparse_random(const Field& f, std::size_t n, Rng& rng) {
    Vec v = zero_vec(f, n);
    for (auto& x : v)
        if (rng.below(2) == 0) x = random_scalar(f, rng);
    return v;
}

std::optional<BimoduleV> random_module(const CoeffRing& b, Rng& rng, const SpecShape& shape) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        // Rank 0 only one time in four; a zero module says little.
        const std::size_t rank =
            (shape.max_module_dim == 0 || rng.below(4) == 0) ? 0 : 1 + rng.below(shape.max_module_dim);
        BimoduleV free = abelianised_free_module(b, rank);
        if (free.dim == 0) {
            if (shape.module_dim.value_or(0) == 0) return free;
            continue;
        }
        const std::size_t relations = rng.below(rank + 2);
        std::vector<Vec> gens;
        for (std::size_t k = 0; k < relations; ++k) gens.push_back(sparse_random(b.field(), free.dim, rng));
        Subspace sub = submodule_closure(b, free, Subspace::span(b.field(), free.dim, gens));
        const std::size_t dim = free.dim - sub.dim();
        if (dim > shape.max_module_dim || dim == 0) continue;
        if (shape.module_dim && dim != *shape.module_dim) continue;
        return quotient_module(b, free, sub).module;
    }
    return std::nullopt;
}

}  // namespace

SkewForm random_form(const CoeffRing& b, const BimoduleV& v, Rng& rng) {
    SkewForm g = SkewForm::zero(b, v.dim);
    for (const auto& basis : form_space(b, v)) {
        const Scalar c = random_scalar(b.field(), rng);
        for (std::size_t t = 0; t < g.entries.size(); ++t) axpy(g.entries[t], c, basis.entries[t]);
    }
    return g;
}

KronSpec random_spec(const Field& f, Rng& rng, const SpecShape& shape) {
    const auto names = ring_catalogue();
    for (int attempt = 0; attempt < 256; ++attempt) {
        AlgebraTable table = catalogue_ring(f, names[rng.below(names.size())]);
        if (table.dim() > shape.max_ring_dim) continue;
        if (shape.scramble_basis && table.dim() > 1) {
            std::vector<std::string> names_b;
            for (std::size_t i = 0; i < table.dim(); ++i) names_b.push_back("b" + std::to_string(i));
            table = change_basis(table, random_invertible(f, table.dim(), rng), names_b);
        }
        CoeffRing b(std::move(table));
        auto v = random_module(b, rng, shape);
        if (!v) continue;
        SkewForm g = random_form(b, *v, rng);
        return KronSpec{std::move(b), std::move(*v), std::move(g)};
    }
    throw std::runtime_error("random_spec: no module of the requested shape found");
}

std::pair<std::size_t, std::size_t> perturb_form(KronSpec& spec, Rng& rng) {
    const std::size_t n = spec.form.n;
    if (n < 2) throw std::invalid_argument("perturb_form needs dim V >= 2");
    const std::size_t i = rng.below(n - 1);
    const std::size_t j = i + 1 + rng.below(n - 1 - i);
    const Subspace& z = spec.ring.center();
    Element c = spec.ring.zero();
    while (is_zero(c)) {
        c = spec.ring.zero();
        for (const auto& basis : z.basis()) axpy(c, random_scalar(spec.ring.field(), rng), basis);
    }
    spec.form.at(i, j) = spec.form.at(i, j) + c;
    spec.form.at(j, i) = spec.form.at(j, i) - c;
    return {i, j};
}

}  // namespace altkron
