#include "altkron/algebra.hpp"

#include "altkron/errors.hpp"
#include "altkron/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace altkron {

SparseVec to_sparse(const Vec& v) {
    SparseVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) s.push_back({i, v[i]});
    return s;
}

Vec to_dense(const Field& f, std::size_t dim, const SparseVec& s) {
    Vec v = zero_vec(f, dim);
    for (const auto& [i, c] : s) {
        if (i >= dim) throw InputError("sparse index " + std::to_string(i) + " out of range for dimension " + std::to_string(dim));
        v[i] += c;
    }
    return v;
}

namespace {

SparseVec canonical_sparse(const Field& f, std::size_t dim, const SparseVec& s) {
    return to_sparse(to_dense(f, dim, s));
}

}  // namespace

AlgebraTable::AlgebraTable(Field field, std::vector<std::string> basis_names, std::vector<SparseVec> table,
                           std::optional<Element> unit)
    : field_(field), dim_(basis_names.size()), names_(std::move(basis_names)) {
    if (dim_ == 0) throw InputError("algebra dimension must be positive");
    if (table.size() != dim_ * dim_)
        throw InputError("structure table has " + std::to_string(table.size()) + " entries, expected " +
                         std::to_string(dim_ * dim_));
    table_.reserve(table.size());
    for (const auto& s : table) {
        for (const auto& e : s)
            if (e.value.modulus() != field_.modulus()) throw InputError("structure constant from a different field");
        table_.push_back(canonical_sparse(field_, dim_, s));
    }
    if (unit) {
        if (unit->size() != dim_) throw InputError("unit vector has wrong length");
        unit_ = std::move(unit);
        for (std::size_t i = 0; i < dim_; ++i) {
            Element b = basis(i);
            if (mul(*this, *unit_, b) != b || mul(*this, b, *unit_) != b)
                throw InputError("unit axiom fails on basis element '" + names_[i] + "'");
        }
    }
}

AlgebraTable AlgebraTable::from_products(Field field, std::vector<std::string> basis_names,
                                         const std::function<Vec(std::size_t, std::size_t)>& product,
                                         std::optional<Element> unit) {
    const std::size_t n = basis_names.size();
    auto cells = map_indices(n * n, [&](std::size_t k) { return product(k / n, k % n); });
    std::vector<SparseVec> table;
    table.reserve(n * n);
    for (const auto& c : cells) table.push_back(to_sparse(c));
    return AlgebraTable(field, std::move(basis_names), std::move(table), std::move(unit));
}

const Element& AlgebraTable::unit() const {
    if (!unit_) throw std::logic_error("algebra has no unit");
    return *unit_;
}

std::optional<std::size_t> AlgebraTable::find_basis(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

bool operator==(const AlgebraTable& a, const AlgebraTable& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.table_ == b.table_ && a.unit_ == b.unit_;
}

void check_element(const AlgebraTable& a, const Element& x) {
    if (x.size() != a.dim())
        throw std::invalid_argument("element of length " + std::to_string(x.size()) + " in algebra of dimension " +
                                    std::to_string(a.dim()));
}

Element mul(const AlgebraTable& a, const Element& x, const Element& y) {
    check_element(a, x);
    check_element(a, y);
    const std::size_t n = a.dim();
    std::vector<std::size_t> xs, ys;
    for (std::size_t i = 0; i < n; ++i) {
        if (!x[i].is_zero()) xs.push_back(i);
        if (!y[i].is_zero()) ys.push_back(i);
    }
    Element out = a.zero();
    Scalar coeff;
    for (auto i : xs) {
        for (auto j : ys) {
            const auto& cell = a.product(i, j);
            if (cell.empty()) continue;
            coeff = x[i] * y[j];
            for (const auto& [k, c] : cell) out[k].add_product(coeff, c);
        }
    }
    return out;
}

Element associator(const AlgebraTable& a, const Element& x, const Element& y, const Element& z) {
    return mul(a, mul(a, x, y), z) - mul(a, x, mul(a, y, z));
}

Element basis_associator(const AlgebraTable& a, std::size_t i, std::size_t j, std::size_t k) {
    Element out = a.zero();
    Scalar coeff;
    for (const auto& [l, c] : a.product(i, j))
        for (const auto& [m, d] : a.product(l, k)) out[m].add_product(c, d);
    for (const auto& [l, c] : a.product(j, k))
        for (const auto& [m, d] : a.product(i, l)) {
            coeff = -c;
            out[m].add_product(coeff, d);
        }
    return out;
}

Element commutator(const AlgebraTable& a, const Element& x, const Element& y) {
    return mul(a, x, y) - mul(a, y, x);
}

Element jordan(const AlgebraTable& a, const Element& x, const Element& y) {
    return mul(a, x, y) + mul(a, y, x);
}

AlgebraTable change_basis(const AlgebraTable& a, const Matrix& change, std::vector<std::string> names) {
    auto inv = inverse(change);
    if (!inv) throw std::invalid_argument("basis change matrix is singular");
    const std::size_t n = a.dim();
    if (names.empty()) {
        for (std::size_t i = 0; i < n; ++i) names.push_back("f" + std::to_string(i));
    }
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(change.column(i));
    std::optional<Element> unit;
    if (a.has_unit()) unit = inv->apply(a.unit());
    return AlgebraTable::from_products(
        a.field(), std::move(names), [&](std::size_t i, std::size_t j) { return inv->apply(mul(a, cols[i], cols[j])); },
        std::move(unit));
}

bool verify_matrix_units(const AlgebraTable& a, const MatrixUnits& units) {
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) check_element(a, units(p, q));
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q)
            for (int r = 0; r < 2; ++r)
                for (int s = 0; s < 2; ++s) {
                    Element prod = mul(a, units(p, q), units(r, s));
                    Element expect = (q == r) ? units(p, s) : a.zero();
                    if (prod != expect) return false;
                }
    return units(0, 0) + units(1, 1) == a.unit();
}

Element units_star(const MatrixUnits& units, const std::array<Scalar, 4>& c) {
    // [[a,b],[c,d]]* = [[d,-b],[-c,a]]
    Element r = scale(c[3], units(0, 0));
    axpy(r, -c[1], units(0, 1));
    axpy(r, -c[2], units(1, 0));
    axpy(r, c[0], units(1, 1));
    return r;
}

Subspace constrained_span(const Field& f, std::size_t ambient, const std::vector<Vec>& gens, std::size_t constraints,
                          const std::function<Vec(std::size_t, const Vec&)>& apply) {
    const std::size_t k = gens.size();
    if (k == 0) return Subspace(f, ambient);
    // Each task yields the constraint matrix block for one t, flattened
    // column-major (k columns of equal length m).
    auto blocks = map_indices(constraints, [&](std::size_t t) {
        Vec flat;
        for (const auto& g : gens) {
            Vec col = apply(t, g);
            flat.insert(flat.end(), col.begin(), col.end());
        }
        return flat;
    });
    EchelonBuilder rows(f, k);
    for (const auto& flat : blocks) {
        if (rows.full()) break;
        const std::size_t m = flat.size() / k;
        for (std::size_t r = 0; r < m && !rows.full(); ++r) {
            Vec row(k);
            bool nonzero = false;
            for (std::size_t c = 0; c < k; ++c) {
                row[c] = flat[c * m + r];
                nonzero = nonzero || !row[c].is_zero();
            }
            if (nonzero) rows.add(std::move(row));
        }
    }
    Echelon e = rows.finish();
    std::vector<Vec> result;
    for (const auto& coeffs : nullspace(Matrix::from_rows(f, k, e.rows))) {
        Vec x = zero_vec(f, ambient);
        for (std::size_t c = 0; c < k; ++c) axpy(x, coeffs[c], gens[c]);
        result.push_back(std::move(x));
    }
    return Subspace::span(f, ambient, result);
}

namespace {

std::vector<Vec> standard_basis(const AlgebraTable& a) {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a.basis(i));
    return out;
}

void check_subspace(const AlgebraTable& a, const Subspace& s) {
    if (s.ambient() != a.dim()) throw std::invalid_argument("subspace ambient dimension does not match algebra");
}

}  // namespace

Subspace centralizer(const AlgebraTable& a, const Subspace& s, const Subspace& within) {
    check_subspace(a, s);
    check_subspace(a, within);
    const auto& sb = s.basis();
    return constrained_span(a.field(), a.dim(), within.basis(), sb.size(),
                            [&](std::size_t t, const Vec& x) { return commutator(a, x, sb[t]); });
}

Subspace nucleus(const AlgebraTable& a) {
    const std::size_t n = a.dim();
    return constrained_span(a.field(), n, standard_basis(a), 3 * n * n, [&](std::size_t t, const Vec& x) {
        const std::size_t slot = t / (n * n);
        const Element bi = a.basis((t / n) % n);
        const Element bj = a.basis(t % n);
        if (slot == 0) return associator(a, x, bi, bj);
        if (slot == 1) return associator(a, bi, x, bj);
        return associator(a, bi, bj, x);
    });
}

Subspace comm_center(const AlgebraTable& a) {
    return centralizer(a, Subspace::whole(a.field(), a.dim()), Subspace::whole(a.field(), a.dim()));
}

Subspace center(const AlgebraTable& a) {
    // Restrict the associator constraints to the commutative center.
    const Subspace k = comm_center(a);
    const std::size_t n = a.dim();
    return constrained_span(a.field(), n, k.basis(), 3 * n * n, [&](std::size_t t, const Vec& x) {
        const std::size_t slot = t / (n * n);
        const Element bi = a.basis((t / n) % n);
        const Element bj = a.basis(t % n);
        if (slot == 0) return associator(a, x, bi, bj);
        if (slot == 1) return associator(a, bi, x, bj);
        return associator(a, bi, bj, x);
    });
}

Subspace associator_subspace(const AlgebraTable& a, const Subspace& s1, const Subspace& s2, const Subspace& s3) {
    check_subspace(a, s1);
    check_subspace(a, s2);
    check_subspace(a, s3);
    const auto &b1 = s1.basis(), &b2 = s2.basis(), &b3 = s3.basis();
    const std::vector<std::size_t> radices{b1.size(), b2.size(), b3.size()};
    auto gens = map_indices(tuple_count(radices), [&](std::size_t idx) {
        auto t = decode_tuple(idx, radices);
        return associator(a, b1[t[0]], b2[t[1]], b3[t[2]]);
    });
    return Subspace::span(a.field(), a.dim(), gens);
}

Subspace product_subspace(const AlgebraTable& a, const Subspace& s1, const Subspace& s2) {
    check_subspace(a, s1);
    check_subspace(a, s2);
    const auto &b1 = s1.basis(), &b2 = s2.basis();
    auto gens = map_indices(b1.size() * b2.size(),
                            [&](std::size_t idx) { return mul(a, b1[idx / b2.size()], b2[idx % b2.size()]); });
    return Subspace::span(a.field(), a.dim(), gens);
}

Subspace commutator_subspace(const AlgebraTable& a, const Subspace& s1, const Subspace& s2) {
    check_subspace(a, s1);
    check_subspace(a, s2);
    const auto &b1 = s1.basis(), &b2 = s2.basis();
    auto gens = map_indices(b1.size() * b2.size(),
                            [&](std::size_t idx) { return commutator(a, b1[idx / b2.size()], b2[idx % b2.size()]); });
    return Subspace::span(a.field(), a.dim(), gens);
}

Subspace associator_annihilator(const AlgebraTable& a, const Subspace& within, const Subspace& s2,
                                const Subspace& s3) {
    check_subspace(a, within);
    const auto &b2 = s2.basis(), &b3 = s3.basis();
    return constrained_span(a.field(), a.dim(), within.basis(), b2.size() * b3.size(), [&](std::size_t t, const Vec& x) {
        return associator(a, x, b2[t / b3.size()], b3[t % b3.size()]);
    });
}

Subspace ideal_closure(const AlgebraTable& a, const Subspace& s) {
    check_subspace(a, s);
    const Subspace whole = Subspace::whole(a.field(), a.dim());
    Subspace cur = s;
    for (std::size_t round = 0; round <= a.dim(); ++round) {
        Subspace next = cur + product_subspace(a, whole, cur) + product_subspace(a, cur, whole);
        if (next.dim() == cur.dim()) return cur;
        cur = std::move(next);
    }
    throw std::logic_error("ideal_closure did not stabilise within dim(A) rounds");
}

bool is_ideal(const AlgebraTable& a, const Subspace& s) {
    const Subspace whole = Subspace::whole(a.field(), a.dim());
    return product_subspace(a, whole, s).is_subspace_of(s) && product_subspace(a, s, whole).is_subspace_of(s);
}

Quotient quotient_algebra(const AlgebraTable& a, const Subspace& ideal) {
    check_subspace(a, ideal);
    if (!is_ideal(a, ideal)) throw PreconditionError("subspace is not a two-sided ideal");
    const auto comp = ideal.complement_indices();
    const std::size_t m = comp.size();
    if (m == 0) throw PreconditionError("quotient by the whole algebra is the zero algebra");
    const Field& f = a.field();
    Matrix proj(f, m, a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j) {
        Vec r = ideal.reduce(a.basis(j));
        for (std::size_t t = 0; t < m; ++t) proj.at(t, j) = r[comp[t]];
    }
    Matrix section(f, a.dim(), m);
    std::vector<std::string> names;
    for (std::size_t t = 0; t < m; ++t) {
        section.at(comp[t], t) = f.one();
        names.push_back(a.basis_names()[comp[t]]);
    }
    std::optional<Element> unit;
    if (a.has_unit()) unit = proj.apply(a.unit());
    auto table = AlgebraTable::from_products(
        f, std::move(names),
        [&](std::size_t i, std::size_t j) { return proj.apply(mul(a, a.basis(comp[i]), a.basis(comp[j]))); },
        std::move(unit));
    return Quotient{std::move(table), std::move(proj), std::move(section)};
}

std::optional<Element> left_divide(const AlgebraTable& a, const Element& x, const Element& target) {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < a.dim(); ++j) cols.push_back(mul(a, x, a.basis(j)));
    return solve(Matrix::from_columns(a.field(), a.dim(), cols), target);
}

bool is_invertible(const AlgebraTable& a, const Element& x) {
    if (!left_divide(a, x, a.unit())) return false;
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < a.dim(); ++j) cols.push_back(mul(a, a.basis(j), x));
    return solve(Matrix::from_columns(a.field(), a.dim(), cols), a.unit()).has_value();
}

}  // namespace altkron
