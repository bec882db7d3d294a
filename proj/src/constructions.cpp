#include "altkron/constructions.hpp"

#include "altkron/coordinatizer.hpp"
#include "altkron/errors.hpp"
#include "altkron/identities.hpp"

namespace altkron {

namespace {

/// Everything the doubling product needs: A, its quotient Abar with
/// projection and section, and alpha.
struct Doubling {
    const CoeffRing& base;
    std::optional<CoeffRing> bar;  // empty when Abar = 0
    Matrix proj;                   // dim Abar x dim A
    Matrix sec;                    // dim A x dim Abar
    Element alpha;

    std::size_t d() const { return base.dim(); }
    std::size_t dbar() const { return proj.rows(); }
};

Mat2 project(const Doubling& s, const Mat2& m) {
    return Mat2{{s.proj.apply(m.e[0]), s.proj.apply(m.e[1]), s.proj.apply(m.e[2]), s.proj.apply(m.e[3])}};
}

Mat2 lift(const Doubling& s, const Mat2& m) {
    return Mat2{{s.sec.apply(m.e[0]), s.sec.apply(m.e[1]), s.sec.apply(m.e[2]), s.sec.apply(m.e[3])}};
}

Mat2 block_unit(const Field& f, std::size_t dim, std::size_t index) {
    // Basis element of a Mat2 part laid out as four consecutive blocks of `dim`.
    Mat2 m{{zero_vec(f, dim), zero_vec(f, dim), zero_vec(f, dim), zero_vec(f, dim)}};
    m.e[index / dim][index % dim] = f.one();
    return m;
}

Vec flatten(const Mat2& m) {
    Vec out;
    for (const auto& e : m.e) out.insert(out.end(), e.begin(), e.end());
    return out;
}

AlgebraTable doubling_table(const Doubling& s) {
    const Field& f = s.base.field();
    const std::size_t d = s.d(), db = s.dbar(), dim = 4 * d + 4 * db;
    static const char* pq[4] = {"E11", "E12", "E21", "E22"};
    std::vector<std::string> names;
    for (std::size_t k = 0; k < 4; ++k)
        for (const auto& b : s.base.table().basis_names()) names.push_back(std::string(pq[k]) + "*" + b);
    if (s.bar)
        for (std::size_t k = 0; k < 4; ++k)
            for (const auto& b : s.bar->table().basis_names()) names.push_back("v" + std::string(pq[k]) + "*" + b);

    auto embed = [&](const Mat2& even, const Mat2* odd) {
        Vec out = zero_vec(f, dim);
        Vec a = flatten(even);
        std::copy(a.begin(), a.end(), out.begin());
        if (odd) {
            Vec b = flatten(*odd);
            std::copy(b.begin(), b.end(), out.begin() + static_cast<long>(4 * d));
        }
        return out;
    };
    auto product = [&](std::size_t i, std::size_t j) -> Vec {
        const bool vi = i >= 4 * d, vj = j >= 4 * d;
        if (!vi && !vj) {
            return embed(mat2_mul(s.base, block_unit(f, d, i), block_unit(f, d, j)), nullptr);
        }
        const CoeffRing& bar = *s.bar;
        if (!vi) {
            // M . vN = v(M* N)
            Mat2 n = block_unit(f, db, j - 4 * d);
            Mat2 r = mat2_mul(bar, project(s, star(block_unit(f, d, i))), n);
            return embed(Mat2::zero(s.base), &r);
        }
        if (!vj) {
            // vN . M = v(M N)
            Mat2 n = block_unit(f, db, i - 4 * d);
            Mat2 r = mat2_mul(bar, project(s, block_unit(f, d, j)), n);
            return embed(Mat2::zero(s.base), &r);
        }
        // vN . vN' = alpha (N'_1 N_1*) through pre-images
        Mat2 n1 = lift(s, block_unit(f, db, i - 4 * d));
        Mat2 n2 = lift(s, block_unit(f, db, j - 4 * d));
        Mat2 r = mat2_mul(s.base, n2, star(n1));
        for (auto& e : r.e) e = s.base.mul(s.alpha, e);
        return embed(r, nullptr);
    };
    Vec unit = zero_vec(f, dim);
    for (std::size_t i = 0; i < d; ++i) {
        unit[i] = s.base.one()[i];
        unit[3 * d + i] = s.base.one()[i];
    }
    return AlgebraTable::from_products(f, names, product, unit);
}

MatrixUnits doubling_units(const Doubling& s) {
    const Field& f = s.base.field();
    const std::size_t d = s.d(), dim = 4 * d + 4 * s.dbar();
    MatrixUnits u;
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) {
            Vec x = zero_vec(f, dim);
            for (std::size_t i = 0; i < d; ++i) x[static_cast<std::size_t>(2 * p + q) * d + i] = s.base.one()[i];
            u(p, q) = x;
        }
    return u;
}

/// V = Abar^2 on (abar_k, 0), (0, abar_k) with A acting through the projection,
/// and <(a,b),(c,d)> = -alpha (ad - bc) evaluated on pre-images.
KronSpec doubling_spec(const Doubling& s) {
    const Field& f = s.base.field();
    const std::size_t d = s.d(), db = s.dbar(), n = 2 * db;
    BimoduleV v{n, {}};
    for (std::size_t i = 0; i < d; ++i) {
        Matrix m(f, n, n);
        if (s.bar) {
            const Vec pi = s.proj.column(i);
            for (std::size_t k = 0; k < db; ++k) {
                Vec col = s.bar->mul(pi, unit_vec(f, db, k));
                for (std::size_t r = 0; r < db; ++r) {
                    m.at(r, k) = col[r];
                    m.at(db + r, db + k) = col[r];
                }
            }
        }
        v.action.push_back(std::move(m));
    }
    SkewForm g = SkewForm::zero(s.base, n);
    for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) {
            Element prod = s.base.mul(s.alpha, s.base.mul(s.sec.column(k), s.sec.column(l)));
            g.at(k, db + l) = -prod;
            g.at(db + k, l) = prod;
        }
    return KronSpec{s.base, std::move(v), std::move(g)};
}

/// Columns: images of the basis of build_algebra(doubling_spec) in the
/// doubling table. The even parts coincide; on V^2
///   (a,0)(1) -> vE22 a, (0,a)(1) -> -vE21 a, (a,0)(2) -> -vE12 a, (0,a)(2) -> vE11 a.
Matrix doubling_spec_map(const Doubling& s) {
    const Field& f = s.base.field();
    const std::size_t d = s.d(), db = s.dbar(), dim = 4 * d + 4 * db;
    Matrix m(f, dim, dim);
    for (std::size_t i = 0; i < 4 * d; ++i) m.at(i, i) = f.one();
    const std::size_t v = 4 * d;
    const Scalar one = f.one(), minus = f.from_int(-1);
    for (std::size_t k = 0; k < db; ++k) {
        m.at(v + 3 * db + k, v + k) = one;                 // (a_k,0)(1)
        m.at(v + 2 * db + k, v + db + k) = minus;          // (0,a_k)(1)
        m.at(v + 1 * db + k, v + 2 * db + k) = minus;      // (a_k,0)(2)
        m.at(v + 0 * db + k, v + 3 * db + k) = one;        // (0,a_k)(2)
    }
    return m;
}

Construction assemble(const Doubling& s, Exec exec) {
    AlgebraTable table = doubling_table(s);
    MatrixUnits units = doubling_units(s);
    CheckList report;
    report.add("matrix_units", verify_matrix_units(table, units));
    KronSpec spec = doubling_spec(s);
    Matrix map = doubling_spec_map(s);
    CheckList valid = validate_form(spec, exec);
    report.add("spec_valid", valid.pass());
    if (valid.pass()) {
        BuiltAlgebra built = build_algebra(spec, false, exec);
        Check iso = iso_check(built.table, table, map, exec);
        iso.name = "spec_isomorphism";
        report.add(iso);
    }
    return Construction{std::move(table), std::move(units), std::move(spec), std::move(map), std::move(report)};
}

Matrix negated(const Matrix& m) {
    Matrix out = m;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = -m.at(r, c);
    return out;
}

Doubling identity_doubling(const CoeffRing& base, const Element& alpha) {
    const Field& f = base.field();
    return Doubling{base, base, Matrix::identity(f, base.dim()), Matrix::identity(f, base.dim()), alpha};
}

}  // namespace

Construction cd(const CoeffRing& base, const Element& alpha, Exec exec) {
    check_element(base.table(), alpha);
    if (!base.is_commutative()) throw PreconditionError("cd needs a commutative base ring");
    return assemble(identity_doubling(base, alpha), exec);
}

Construction octonion(const CoeffRing& base, const Scalar& v2, Exec exec) {
    if (v2.is_zero()) throw PreconditionError("v^2 must be a nonzero scalar");
    return cd(base, scale(v2, base.one()), exec);
}

Construction octonion(const CoeffRing& base, Exec exec) { return octonion(base, base.field().one(), exec); }

Construction ncd(const CoeffRing& base, const Element& alpha, std::uint64_t section_seed, Exec exec) {
    check_element(base.table(), alpha);
    const Field& f = base.field();
    const std::size_t d = base.dim();
    for (std::size_t i = 0; i < d; ++i)
        if (!base.center().contains(base.mul(alpha, base.table().basis(i))))
            throw PreconditionError("alpha*A not central");

    const Subspace& ideal = base.commutator_ideal();
    std::optional<Doubling> s;
    if (ideal.dim() == 0) {
        s.emplace(identity_doubling(base, alpha));
    } else if (ideal.dim() == d) {
        s.emplace(Doubling{base, std::nullopt, Matrix(f, 0, d), Matrix(f, d, 0), alpha});
    } else {
        Quotient q = quotient_algebra(base.table(), ideal);
        s.emplace(Doubling{base, CoeffRing(q.algebra), q.projection, q.section, alpha});
    }
    Construction out = assemble(*s, exec);

    // Rebuild with a second section, shifted by a random map into the ideal.
    bool independent = true;
    if (ideal.dim() > 0 && s->dbar() > 0) {
        Rng rng(section_seed);
        Doubling other = *s;
        for (std::size_t c = 0; c < other.sec.cols(); ++c) {
            Vec shift = zero_vec(f, d);
            for (const auto& b : ideal.basis()) axpy(shift, random_scalar(f, rng), b);
            for (std::size_t r = 0; r < d; ++r) other.sec.at(r, c) += shift[r];
        }
        independent = doubling_table(other) == out.table;
    }
    Check c{"section_independent", independent, {}, independent ? "" : "product depends on the chosen pre-images",
            section_seed};
    out.report.add(c);
    return out;
}

BimoduleActions cay_bimodule(const Field& f) {
    BimoduleActions v{2, {}, {}};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            Matrix m(f, 2, 2);
            m.at(j, i) = f.one();  // e_ij m_i = m_j
            v.left.push_back(std::move(m));
        }
    // m a = a* m with e11* = e22, e12* = -e12, e21* = -e21, e22* = e11.
    v.right = {v.left[3], negated(v.left[1]), negated(v.left[2]),
               v.left[0]};
    return v;
}

BimoduleActions regular_bimodule(const AlgebraTable& a) {
    const Field& f = a.field();
    const std::size_t n = a.dim();
    BimoduleActions v{n, {}, {}};
    for (std::size_t i = 0; i < n; ++i) {
        Matrix l(f, n, n), r(f, n, n);
        for (std::size_t j = 0; j < n; ++j) {
            for (const auto& e : a.product(i, j)) l.at(e.index, j) = e.value;
            for (const auto& e : a.product(j, i)) r.at(e.index, j) = e.value;
        }
        v.left.push_back(std::move(l));
        v.right.push_back(std::move(r));
    }
    return v;
}

NullExtension split_null_extension(const AlgebraTable& a, const BimoduleActions& v, Exec exec) {
    const Field& f = a.field();
    const std::size_t n = a.dim(), k = v.dim;
    if (v.left.size() != n || v.right.size() != n) throw InputError("need one left and one right matrix per basis element");
    for (const auto* side : {&v.left, &v.right})
        for (const auto& m : *side)
            if (m.rows() != k || m.cols() != k || !(m.field() == f))
                throw InputError("bimodule action matrices must be dim V x dim V over the algebra's field");

    std::vector<std::string> names = a.basis_names();
    for (std::size_t j = 0; j < k; ++j) names.push_back("m" + std::to_string(j + 1));
    auto product = [&](std::size_t i, std::size_t j) {
        Vec out = zero_vec(f, n + k);
        if (i < n && j < n) {
            for (const auto& e : a.product(i, j)) out[e.index] = e.value;
        } else if (i < n) {
            Vec w = v.left[i].column(j - n);
            std::copy(w.begin(), w.end(), out.begin() + static_cast<long>(n));
        } else if (j < n) {
            Vec w = v.right[j].column(i - n);
            std::copy(w.begin(), w.end(), out.begin() + static_cast<long>(n));
        }
        return out;
    };
    std::optional<Element> unit;
    if (a.has_unit()) {
        const Matrix ident = Matrix::identity(f, k);
        Matrix l(f, k, k), r(f, k, k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t x = 0; x < k; ++x)
                for (std::size_t y = 0; y < k; ++y) {
                    l.at(x, y).add_product(a.unit()[i], v.left[i].at(x, y));
                    r.at(x, y).add_product(a.unit()[i], v.right[i].at(x, y));
                }
        if (l == ident && r == ident) {
            Element u = a.unit();
            u.resize(n + k, f.zero());
            unit = u;
        }
    }
    AlgebraTable table = AlgebraTable::from_products(f, names, product, unit);
    Check alt = check_alternative(table, exec);
    return {std::move(table), std::move(alt)};
}

KronSpec three_generator_module(const CoeffRing& b, const Element& a, const Element& bb, const Element& c) {
    for (const auto* x : {&a, &bb, &c}) check_element(b.table(), *x);
    if (!b.is_commutative()) throw PreconditionError("three_generator_module needs a commutative ring");
    const Field& f = b.field();
    const std::size_t d = b.dim();
    BimoduleV free = free_module(b, 3);
    Vec gen;
    for (const auto* x : {&a, &bb, &c}) gen.insert(gen.end(), x->begin(), x->end());
    Subspace sub = submodule_closure(b, free, Subspace::span(f, 3 * d, {gen}));

    // <e1,e2> = c, <e2,e3> = a, <e3,e1> = b, extended B-bilinearly.
    std::array<std::array<Element, 3>, 3> base_form;
    for (auto& row : base_form) row.fill(b.zero());
    base_form[0][1] = c;
    base_form[1][0] = -c;
    base_form[1][2] = a;
    base_form[2][1] = -a;
    base_form[2][0] = bb;
    base_form[0][2] = -bb;
    SkewForm big = SkewForm::zero(b, 3 * d);
    for (std::size_t g = 0; g < 3; ++g)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t h = 0; h < 3; ++h)
                for (std::size_t j = 0; j < d; ++j)
                    big.at(g * d + i, h * d + j) =
                        b.mul(b.mul(b.table().basis(i), b.table().basis(j)), base_form[g][h]);

    for (const auto& x : sub.basis())
        for (std::size_t j = 0; j < 3 * d; ++j)
            if (!is_zero(form_value(b, big, x, unit_vec(f, 3 * d, j))))
                throw std::logic_error("form does not vanish on the relation submodule");

    QuotientModule q = quotient_module(b, free, sub);
    const std::size_t n = q.module.dim;
    SkewForm g = SkewForm::zero(b, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g.at(i, j) = form_value(b, big, q.section.column(i), q.section.column(j));
    return KronSpec{b, std::move(q.module), std::move(g)};
}

OctonionVerdict octonion_criterion(const KronSpec& spec, const std::optional<std::pair<Vec, Vec>>& witness,
                                   std::uint64_t search_limit, Exec exec) {
    const CoeffRing& ring = spec.ring;
    const Field& f = ring.field();
    const std::size_t n = spec.module.dim;
    OctonionVerdict out;
    std::string note;
    if (witness) {
        if (form_value(spec, witness->first, witness->second) == ring.one()) {
            out.kind = OctonionVerdict::Kind::yes;
            out.witness = witness;
            out.reason = "supplied witness gives <x,y> = 1";
            return out;
        }
        note = "supplied witness does not give <x,y> = 1; ";
    }
    bool all_zero = true;
    for (const auto& e : spec.form.entries) all_zero = all_zero && is_zero(e);
    if (all_zero) {
        out.kind = OctonionVerdict::Kind::no;
        out.reason = note + "form has no unit value";
        return out;
    }
    // Generator pairs with an invertible value, normalised.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Element& g = spec.form.at(i, j);
            if (is_zero(g)) continue;
            auto h = left_divide(ring.table(), g, ring.one());
            if (!h) continue;
            Vec x = unit_vec(f, n, i);
            Vec y = act(ring, spec.module, *h, unit_vec(f, n, j));
            if (form_value(spec, x, y) == ring.one()) {
                out.kind = OctonionVerdict::Kind::yes;
                out.witness = std::make_pair(x, y);
                out.reason = note + "normalised generator pair";
                return out;
            }
        }
    if (!f.is_rational()) {
        const std::uint64_t p = f.modulus();
        std::uint64_t count = 1;
        bool small = true;
        for (std::size_t k = 0; k < n && small; ++k) {
            if (count > search_limit / p) small = false;
            count *= p;
        }
        if (small && count <= search_limit) {
            auto decode = [&](std::size_t t) {
                Vec x;
                for (std::size_t k = 0; k < n; ++k) {
                    x.push_back(Scalar::residue(t % p, p));
                    t /= p;
                }
                return x;
            };
            // For fixed x the map y -> <x,y> is F-linear; solve <x,y> = 1.
            auto solve_for = [&](const Vec& x) {
                std::vector<Vec> cols;
                for (std::size_t j = 0; j < n; ++j) cols.push_back(form_value(spec, x, unit_vec(f, n, j)));
                return solve(Matrix::from_columns(f, ring.dim(), cols), ring.one());
            };
            auto hit = first_failure(count, [&](std::size_t t) { return solve_for(decode(t)).has_value(); }, exec);
            if (hit) {
                Vec x = decode(*hit);
                out.kind = OctonionVerdict::Kind::yes;
                out.witness = std::make_pair(x, *solve_for(x));
                out.reason = note + "found by exhaustive search";
            } else {
                out.kind = OctonionVerdict::Kind::no;
                out.reason = note + "exhaustive search over all x found no y with <x,y> = 1";
            }
            return out;
        }
    }
    out.kind = OctonionVerdict::Kind::unknown;
    out.reason = note + "no generator pair has an invertible value; search not available over this field";
    return out;
}

std::string verdict_name(OctonionVerdict::Kind k) {
    switch (k) {
        case OctonionVerdict::Kind::yes: return "true";
        case OctonionVerdict::Kind::no: return "false";
        case OctonionVerdict::Kind::unknown: return "unknown";
    }
    return "unknown";
}

}  // namespace altkron
