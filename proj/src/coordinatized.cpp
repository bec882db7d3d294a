#include "altkron/coordinatized.hpp"

#include "altkron/errors.hpp"

#include <sstream>

namespace altkron {

namespace {

bool associative(const AlgebraTable& a) {
    const std::size_t n = a.dim();
    auto bad = serial::first_failure(n * n * n, [&](std::size_t t) {
        return !is_zero(associator(a, a.basis(t / (n * n)), a.basis((t / n) % n), a.basis(t % n)));
    });
    return !bad.has_value();
}

std::string tuple_text(const std::vector<std::size_t>& t) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << ")";
    return os.str();
}

/// Runs a sweep over the given radices and records the first failing tuple.
Check sweep(const std::string& name, const std::vector<std::size_t>& radices,
            const std::function<bool(const std::vector<std::size_t>&)>& fails, Exec exec) {
    Check c{name, true, {}, {}, std::nullopt};
    auto first = first_failure(tuple_count(radices), [&](std::size_t idx) { return fails(decode_tuple(idx, radices)); },
                               exec);
    if (first) {
        c.pass = false;
        c.witness = decode_tuple(*first, radices);
        c.detail = "fails at basis tuple " + tuple_text(c.witness);
    }
    return c;
}

Subspace commutator_ideal_of(const AlgebraTable& a) {
    Subspace all = Subspace::whole(a.field(), a.dim());
    return ideal_closure(a, commutator_subspace(a, all, all));
}

}  // namespace

CoeffRing::CoeffRing(AlgebraTable table)
    : table_(std::move(table)),
      center_(table_.field(), table_.dim()),
      commutator_ideal_(table_.field(), table_.dim()) {
    if (!table_.has_unit()) throw PreconditionError("coefficient ring must have a unit");
    if (!associative(table_)) throw PreconditionError("coefficient ring must be associative");
    center_ = altkron::center(table_);
    commutator_ideal_ = commutator_ideal_of(table_);
}

Matrix action_matrix(const CoeffRing& b, const BimoduleV& v, const Element& elem) {
    check_element(b.table(), elem);
    Matrix m(b.field(), v.dim, v.dim);
    for (std::size_t i = 0; i < b.dim(); ++i) {
        if (elem[i].is_zero()) continue;
        for (std::size_t r = 0; r < v.dim; ++r)
            for (std::size_t c = 0; c < v.dim; ++c) m.at(r, c).add_product(elem[i], v.action[i].at(r, c));
    }
    return m;
}

Vec act(const CoeffRing& b, const BimoduleV& v, const Element& elem, const Vec& x) {
    check_element(b.table(), elem);
    Vec out = zero_vec(b.field(), v.dim);
    for (std::size_t i = 0; i < b.dim(); ++i)
        if (!elem[i].is_zero()) axpy(out, elem[i], v.action[i].apply(x));
    return out;
}

BimoduleV free_module(const CoeffRing& b, std::size_t rank) {
    const std::size_t d = b.dim();
    BimoduleV v{rank * d, {}};
    for (std::size_t k = 0; k < d; ++k) {
        Matrix m(b.field(), v.dim, v.dim);
        for (std::size_t g = 0; g < rank; ++g)
            for (std::size_t i = 0; i < d; ++i)
                for (const auto& e : b.table().product(k, i)) m.at(g * d + e.index, g * d + i) = e.value;
        v.action.push_back(std::move(m));
    }
    return v;
}

Subspace submodule_closure(const CoeffRing& b, const BimoduleV& v, const Subspace& s) {
    EchelonBuilder span(b.field(), v.dim);
    std::vector<Vec> frontier = s.basis();
    for (const auto& x : frontier) span.add(x);
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const auto& x : frontier)
            for (const auto& m : v.action) {
                Vec y = m.apply(x);
                if (span.add(y)) next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    return Subspace::span(b.field(), v.dim, span.finish().rows);
}

QuotientModule quotient_module(const CoeffRing& b, const BimoduleV& v, const Subspace& n) {
    const Field& f = b.field();
    for (const auto& m : v.action)
        for (const auto& x : n.basis())
            if (!n.contains(m.apply(x))) throw PreconditionError("quotient by a subspace that is not a submodule");
    const auto comp = n.complement_indices();
    const std::size_t q = comp.size();
    Matrix section(f, v.dim, q);
    for (std::size_t j = 0; j < q; ++j) section.at(comp[j], j) = f.one();
    // The projection reads off the complement coordinates of the reduced vector.
    Matrix projection(f, q, v.dim);
    for (std::size_t c = 0; c < v.dim; ++c) {
        Vec r = n.reduce(unit_vec(f, v.dim, c));
        for (std::size_t j = 0; j < q; ++j) projection.at(j, c) = r[comp[j]];
    }
    BimoduleV out{q, {}};
    for (const auto& m : v.action) out.action.push_back(projection * m * section);
    return {std::move(out), std::move(projection), std::move(section)};
}

SkewForm SkewForm::zero(const CoeffRing& b, std::size_t n) { return SkewForm{n, std::vector<Element>(n * n, b.zero())}; }

Mat2 Mat2::zero(const CoeffRing& b) { return Mat2{{b.zero(), b.zero(), b.zero(), b.zero()}}; }

Mat2 Mat2::identity(const CoeffRing& b) { return Mat2{{b.one(), b.zero(), b.zero(), b.one()}}; }

Mat2 star(const Mat2& m) { return Mat2{{m.e[3], -m.e[1], -m.e[2], m.e[0]}}; }

Mat2 mat2_mul(const CoeffRing& b, const Mat2& x, const Mat2& y) {
    Mat2 r = Mat2::zero(b);
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) r(p, q) = b.mul(x(p, 0), y(0, q)) + b.mul(x(p, 1), y(1, q));
    return r;
}

Mat2 operator+(const Mat2& x, const Mat2& y) {
    return Mat2{{x.e[0] + y.e[0], x.e[1] + y.e[1], x.e[2] + y.e[2], x.e[3] + y.e[3]}};
}

KronElement KronElement::zero(const KronSpec& spec) {
    const Field& f = spec.ring.field();
    return {Mat2::zero(spec.ring), zero_vec(f, spec.module.dim), zero_vec(f, spec.module.dim)};
}

Element form_value(const CoeffRing& b, const SkewForm& g, const Vec& x, const Vec& y) {
    const std::size_t n = g.n;
    if (x.size() != n || y.size() != n) throw std::invalid_argument("form argument has wrong length");
    Element out = b.zero();
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (!y[j].is_zero()) axpy(out, x[i] * y[j], g.at(i, j));
    }
    return out;
}

Element form_value(const KronSpec& spec, const Vec& x, const Vec& y) { return form_value(spec.ring, spec.form, x, y); }

CheckList validate_form(const KronSpec& spec, Exec exec) {
    CheckList out;
    const CoeffRing& ring = spec.ring;
    const BimoduleV& v = spec.module;
    const SkewForm& g = spec.form;
    const Field& f = ring.field();
    const std::size_t d = ring.dim(), n = v.dim;

    bool shape = v.action.size() == d;
    for (const auto& m : v.action) shape = shape && m.rows() == n && m.cols() == n && m.field() == f;
    out.add("module_shape", shape, shape ? "" : "need one dim V x dim V matrix per basis element of B");
    bool form_shape = g.n == n && g.entries.size() == n * n;
    for (const auto& e : g.entries) form_shape = form_shape && e.size() == d;
    out.add("form_shape", form_shape, form_shape ? "" : "gram must be dim V x dim V with entries in B");
    if (!shape || !form_shape) return out;

    const Matrix ident = Matrix::identity(f, n);
    out.add("module_unital", action_matrix(ring, v, ring.one()) == ident);
    out.add(sweep("module_multiplicative", {d, d}, [&](const std::vector<std::size_t>& t) {
        Element prod = to_dense(f, d, ring.table().product(t[0], t[1]));
        return !(v.action[t[0]] * v.action[t[1]] == action_matrix(ring, v, prod));
    }, exec));
    out.add(sweep("commutators_annihilate", {d, d}, [&](const std::vector<std::size_t>& t) {
        Element c = commutator(ring.table(), ring.table().basis(t[0]), ring.table().basis(t[1]));
        return !(action_matrix(ring, v, c) == Matrix(f, n, n));
    }, exec));
    out.add(sweep("form_skew", {n, n}, [&](const std::vector<std::size_t>& t) {
        return !is_zero(g.at(t[0], t[1]) + g.at(t[1], t[0]));
    }, exec));
    out.add(sweep("form_central", {n, n}, [&](const std::vector<std::size_t>& t) {
        return !ring.center().contains(g.at(t[0], t[1]));
    }, exec));

    std::vector<Vec> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vec(f, n, i));
    out.add(sweep("form_bilinear", {d, n, n}, [&](const std::vector<std::size_t>& t) {
        const Element bk = ring.table().basis(t[0]);
        const Vec& u = basis[t[1]];
        const Vec& w = basis[t[2]];
        Element scaled = ring.mul(bk, g.at(t[1], t[2]));
        return !(form_value(spec, v.action[t[0]].apply(u), w) == scaled) ||
               !(form_value(spec, u, v.action[t[0]].apply(w)) == scaled);
    }, exec));
    out.add(sweep("form_cyclic", {n, n, n}, [&](const std::vector<std::size_t>& t) {
        const std::size_t i = t[0], j = t[1], k = t[2];
        Vec s = act(ring, v, g.at(i, j), basis[k]) + act(ring, v, g.at(j, k), basis[i]) +
                act(ring, v, g.at(k, i), basis[j]);
        return !is_zero(s);
    }, exec));
    out.add(sweep("form_quadratic", {n, n, n, n}, [&](const std::vector<std::size_t>& t) {
        const std::size_t i = t[0], j = t[1], k = t[2], l = t[3];
        Element s = ring.mul(g.at(i, j), g.at(k, l)) + ring.mul(g.at(j, k), g.at(i, l)) +
                    ring.mul(g.at(k, i), g.at(j, l));
        return !is_zero(s);
    }, exec));
    return out;
}

KronElement kron_product(const KronSpec& spec, const KronElement& x, const KronElement& y) {
    const CoeffRing& ring = spec.ring;
    const BimoduleV& v = spec.module;
    KronElement r = KronElement::zero(spec);
    r.mat = mat2_mul(ring, x.mat, y.mat);
    r.mat(0, 0) = r.mat(0, 0) - form_value(spec, x.x, y.y);
    r.mat(0, 1) = r.mat(0, 1) - form_value(spec, x.y, y.y);
    r.mat(1, 0) = r.mat(1, 0) + form_value(spec, x.x, y.x);
    r.mat(1, 1) = r.mat(1, 1) + form_value(spec, x.y, y.x);
    // (z,t) X_a
    r.x = act(ring, v, x.mat(0, 0), y.x) + act(ring, v, x.mat(1, 0), y.y);
    r.y = act(ring, v, x.mat(0, 1), y.x) + act(ring, v, x.mat(1, 1), y.y);
    // (x,y) Y_a*
    const Mat2 s = star(y.mat);
    r.x = r.x + act(ring, v, s(0, 0), x.x) + act(ring, v, s(1, 0), x.y);
    r.y = r.y + act(ring, v, s(0, 1), x.x) + act(ring, v, s(1, 1), x.y);
    return r;
}

Element to_table_element(const KronSpec& spec, const KronElement& x) {
    const std::size_t d = spec.ring.dim(), n = spec.module.dim;
    Element out;
    out.reserve(4 * d + 2 * n);
    for (const auto& e : x.mat.e) out.insert(out.end(), e.begin(), e.end());
    out.insert(out.end(), x.x.begin(), x.x.end());
    out.insert(out.end(), x.y.begin(), x.y.end());
    return out;
}

KronElement from_table_element(const KronSpec& spec, const Element& x) {
    const std::size_t d = spec.ring.dim(), n = spec.module.dim;
    if (x.size() != 4 * d + 2 * n) throw std::invalid_argument("element does not match the spec's dimensions");
    KronElement r;
    for (std::size_t k = 0; k < 4; ++k) r.mat.e[k] = Vec(x.begin() + static_cast<long>(k * d), x.begin() + static_cast<long>((k + 1) * d));
    r.x = Vec(x.begin() + static_cast<long>(4 * d), x.begin() + static_cast<long>(4 * d + n));
    r.y = Vec(x.begin() + static_cast<long>(4 * d + n), x.end());
    return r;
}

BuiltAlgebra build_algebra(const KronSpec& spec, bool force, Exec exec) {
    if (!force) {
        CheckList report = validate_form(spec, exec);
        for (const auto& c : report.checks())
            if (!c.pass) throw PreconditionError("invalid coordinate data: " + c.name + " " + c.detail);
    }
    const CoeffRing& ring = spec.ring;
    const Field& f = ring.field();
    const std::size_t d = ring.dim(), n = spec.module.dim, dim = 4 * d + 2 * n;
    static const char* pq[4] = {"E11", "E12", "E21", "E22"};
    std::vector<std::string> names;
    for (std::size_t k = 0; k < 4; ++k)
        for (const auto& b : ring.table().basis_names()) names.push_back(std::string(pq[k]) + "*" + b);
    for (std::size_t j = 0; j < n; ++j) names.push_back("v" + std::to_string(j) + "(1)");
    for (std::size_t j = 0; j < n; ++j) names.push_back("v" + std::to_string(j) + "(2)");

    std::vector<KronElement> basis;
    for (std::size_t i = 0; i < dim; ++i) basis.push_back(from_table_element(spec, unit_vec(f, dim, i)));

    MatrixUnits units;
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) {
            KronElement e = KronElement::zero(spec);
            e.mat(p, q) = ring.one();
            units(p, q) = to_table_element(spec, e);
        }
    AlgebraTable table = AlgebraTable::from_products(
        f, names,
        [&](std::size_t i, std::size_t j) { return to_table_element(spec, kron_product(spec, basis[i], basis[j])); },
        units(0, 0) + units(1, 1));
    return {std::move(table), std::move(units)};
}

std::vector<SkewForm> form_space(const CoeffRing& b, const BimoduleV& v) {
    const Field& f = b.field();
    const std::size_t n = v.dim, d = b.dim();
    const auto& zb = b.center().basis();
    const std::size_t dz = zb.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const std::size_t unknowns = pairs.size() * dz;

    auto form_of = [&](const Vec& coeffs) {
        SkewForm g = SkewForm::zero(b, n);
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            Element e = b.zero();
            for (std::size_t k = 0; k < dz; ++k) axpy(e, coeffs[p * dz + k], zb[k]);
            g.at(pairs[p].first, pairs[p].second) = e;
            g.at(pairs[p].second, pairs[p].first) = -e;
        }
        return g;
    };

    std::vector<Vec> gens;
    for (std::size_t u = 0; u < unknowns; ++u) gens.push_back(unit_vec(f, unknowns, u));
    const std::size_t bilinear = d * n * n, cyclic = n * n * n;
    Subspace sol = constrained_span(f, unknowns, gens, bilinear + cyclic, [&](std::size_t t, const Vec& coeffs) {
        const SkewForm g = form_of(coeffs);
        if (t < bilinear) {
            const std::size_t k = t / (n * n), i = (t / n) % n, j = t % n;
            const Element bk = b.table().basis(k);
            Element scaled = b.mul(bk, g.at(i, j));
            Vec left = form_value(b, g, v.action[k].apply(unit_vec(f, n, i)), unit_vec(f, n, j)) - scaled;
            Vec right = form_value(b, g, unit_vec(f, n, i), v.action[k].apply(unit_vec(f, n, j))) - scaled;
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
        t -= bilinear;
        const std::size_t i = t / (n * n), j = (t / n) % n, k = t % n;
        return act(b, v, g.at(i, j), unit_vec(f, n, k)) + act(b, v, g.at(j, k), unit_vec(f, n, i)) +
               act(b, v, g.at(k, i), unit_vec(f, n, j));
    });
    std::vector<SkewForm> out;
    for (const auto& c : sol.basis()) out.push_back(form_of(c));
    return out;
}

}  // namespace altkron
