#include "altkron/fixtures.hpp"

namespace altkron {

namespace {

AlgebraTable build(const Field& f, std::vector<std::string> names,
                   const std::function<Vec(std::size_t, std::size_t)>& product, std::size_t unit_index = 0) {
    const std::size_t n = names.size();
    return AlgebraTable::from_products(f, std::move(names), product, unit_vec(f, n, unit_index));
}

}  // namespace

AlgebraTable matrix_algebra2(const Field& f) {
    // e_pq has index 2p + q.
    return AlgebraTable::from_products(
        f, {"e11", "e12", "e21", "e22"},
        [&](std::size_t i, std::size_t j) {
            const std::size_t p = i / 2, q = i % 2, r = j / 2, s = j % 2;
            return q == r ? unit_vec(f, 4, 2 * p + s) : zero_vec(f, 4);
        },
        Vec{f.one(), f.zero(), f.zero(), f.one()});
}

MatrixUnits standard_units(const Field& f) {
    MatrixUnits u;
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) u(p, q) = unit_vec(f, 4, static_cast<std::size_t>(2 * p + q));
    return u;
}

AlgebraTable ground_algebra(const Field& f) {
    return build(f, {"1"}, [&](std::size_t, std::size_t) { return unit_vec(f, 1, 0); });
}

AlgebraTable truncated_poly(const Field& f, std::size_t k) {
    if (k == 0) throw std::invalid_argument("truncated_poly needs k >= 1");
    std::vector<std::string> names{"1"};
    for (std::size_t i = 1; i < k; ++i) names.push_back(i == 1 ? "t" : "t^" + std::to_string(i));
    return build(f, names, [&](std::size_t i, std::size_t j) {
        return i + j < k ? unit_vec(f, k, i + j) : zero_vec(f, k);
    });
}

AlgebraTable grassmann2(const Field& f) {
    // Basis as subsets of {e1, e2} encoded by bitmask: 0 -> 1, 1 -> e1, 2 -> e2, 3 -> e1e2.
    return build(f, {"1", "e1", "e2", "e1e2"}, [&](std::size_t i, std::size_t j) {
        if (i & j) return zero_vec(f, 4);
        Vec v = unit_vec(f, 4, i | j);
        if (i == 2 && j == 1) v = scale(f.from_int(-1), v);
        return v;
    });
}

AlgebraTable upper_triangular2(const Field& f) {
    // 0 = e11, 1 = e12, 2 = e22.
    static const int rows[3] = {0, 0, 1}, cols[3] = {0, 1, 1};
    return AlgebraTable::from_products(
        f, {"e11", "e12", "e22"},
        [&](std::size_t i, std::size_t j) {
            if (cols[i] != rows[j]) return zero_vec(f, 3);
            const int r = rows[i], c = cols[j];
            return unit_vec(f, 3, r == 0 ? static_cast<std::size_t>(c) : 2);
        },
        Vec{f.one(), f.zero(), f.one()});
}

AlgebraTable direct_product(const AlgebraTable& a, const AlgebraTable& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("direct_product over different fields");
    const Field& f = a.field();
    const std::size_t n = a.dim(), m = b.dim();
    std::vector<std::string> names;
    for (const auto& s : a.basis_names()) names.push_back("l." + s);
    for (const auto& s : b.basis_names()) names.push_back("r." + s);
    std::optional<Element> unit;
    if (a.has_unit() && b.has_unit()) {
        Element u = a.unit();
        u.insert(u.end(), b.unit().begin(), b.unit().end());
        unit = u;
    }
    return AlgebraTable::from_products(
        f, names,
        [&](std::size_t i, std::size_t j) {
            Vec v = zero_vec(f, n + m);
            if (i < n && j < n) {
                for (const auto& e : a.product(i, j)) v[e.index] = e.value;
            } else if (i >= n && j >= n) {
                for (const auto& e : b.product(i - n, j - n)) v[n + e.index] = e.value;
            }
            return v;
        },
        unit);
}

AlgebraTable tensor_product(const AlgebraTable& a, const AlgebraTable& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("tensor_product over different fields");
    const Field& f = a.field();
    const std::size_t n = a.dim(), m = b.dim();
    std::vector<std::string> names;
    for (const auto& s : a.basis_names())
        for (const auto& t : b.basis_names()) names.push_back(s + "(x)" + t);
    std::optional<Element> unit;
    if (a.has_unit() && b.has_unit()) {
        Element u = zero_vec(f, n * m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) u[i * m + j] = a.unit()[i] * b.unit()[j];
        unit = u;
    }
    return AlgebraTable::from_products(
        f, names,
        [&](std::size_t x, std::size_t y) {
            Vec v = zero_vec(f, n * m);
            for (const auto& ea : a.product(x / m, y / m))
                for (const auto& eb : b.product(x % m, y % m)) v[ea.index * m + eb.index] += ea.value * eb.value;
            return v;
        },
        unit);
}

AlgebraTable random_table(const Field& f, std::size_t dim, Rng& rng) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < dim; ++i) names.push_back("b" + std::to_string(i));
    std::vector<Vec> products;
    for (std::size_t k = 0; k < dim * dim; ++k) products.push_back(random_vec(f, dim, rng));
    return AlgebraTable::from_products(f, names,
                                       [&](std::size_t i, std::size_t j) { return products[i * dim + j]; });
}

}  // namespace altkron
