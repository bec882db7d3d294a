#include "altkron/coordinatizer.hpp"

#include "altkron/errors.hpp"
#include "altkron/identities.hpp"
#include "altkron/plucker.hpp"

#include <sstream>

namespace altkron {

namespace {

using Basis = std::vector<Vec>;
using Args = std::vector<const Vec*>;

std::string tuple_text(const std::vector<std::size_t>& t) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << ")";
    return os.str();
}

Basis standard_basis(const AlgebraTable& a) {
    Basis out;
    for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a.basis(i));
    return out;
}

/// One relation quantified over basis elements of the given spaces.
struct Relation {
    std::string text;
    std::vector<const Basis*> spaces;
    std::function<bool(const Args&)> fails;
};

/// Checks relations in order and reports the first failure, naming the
/// relation in `detail` and the basis indices in `witness`.
Check sweep_relations(const std::string& name, const std::vector<Relation>& rels, Exec exec) {
    Check c{name, true, {}, {}, std::nullopt};
    for (const auto& rel : rels) {
        std::vector<std::size_t> radices;
        for (const auto* s : rel.spaces) radices.push_back(s->size());
        auto bad = first_failure(tuple_count(radices), [&](std::size_t t) {
            auto idx = decode_tuple(t, radices);
            Args args;
            for (std::size_t k = 0; k < idx.size(); ++k) args.push_back(&(*rel.spaces[k])[idx[k]]);
            return rel.fails(args);
        }, exec);
        if (bad) {
            c.pass = false;
            c.witness = decode_tuple(*bad, radices);
            c.detail = rel.text + " fails at basis tuple " + tuple_text(c.witness);
            return c;
        }
    }
    return c;
}

struct Ops {
    const AlgebraTable& a;
    Element m(const Element& x, const Element& y) const { return mul(a, x, y); }
    Element as(const Element& x, const Element& y, const Element& z) const { return associator(a, x, y, z); }
    Element cm(const Element& x, const Element& y) const { return commutator(a, x, y); }
};

/// Basis of span(E) as the four units, with their images under the symplectic involution.
struct UnitBasis {
    Basis units;
    Basis starred;
};

UnitBasis unit_basis(const MatrixUnits& e) {
    UnitBasis u{e.as_list(), {}};
    u.starred = {e(1, 1), -e(0, 1), -e(1, 0), e(0, 0)};
    return u;
}

/// Starred image of a unit basis vector, found by position.
const Element& star_of(const UnitBasis& u, const Vec* x) {
    for (std::size_t k = 0; k < 4; ++k)
        if (&u.units[k] == x) return u.starred[k];
    throw std::logic_error("star_of called on a vector outside the unit basis");
}

Subspace units_span(const AlgebraTable& a, const MatrixUnits& e) {
    return Subspace::span(a.field(), a.dim(), e.as_list());
}

/// Columns of m expressed in the echelon coordinates of s; throws StageError if outside.
Vec coords_in(const Subspace& s, const Vec& v, const std::string& stage, const std::string& what) {
    auto c = s.coordinates(v);
    if (!c) throw StageError(stage, what);
    return *c;
}

}  // namespace

Grading decompose(const AlgebraTable& a, const MatrixUnits& e, Exec) {
    const Subspace h = units_span(a, e);
    const Subspace whole = Subspace::whole(a.field(), a.dim());
    Grading g{associator_annihilator(a, whole, h, h), associator_subspace(a, whole, h, h)};
    if (intersect(g.even, g.odd).dim() != 0 || g.even.dim() + g.odd.dim() != a.dim())
        throw StageError("decompose", "even part (dim " + std::to_string(g.even.dim()) + ") and odd part (dim " +
                                          std::to_string(g.odd.dim()) + ") do not form a direct sum equal to A");
    return g;
}

Grading decompose_alternate(const AlgebraTable& a, const MatrixUnits& e, Exec) {
    const Field& f = a.field();
    const std::size_t n = a.dim();
    const UnitBasis u = unit_basis(e);
    const Basis all = standard_basis(a);
    // odd: a x - x a* = 0 for the four units
    Subspace odd = constrained_span(f, n, all, 4, [&](std::size_t t, const Vec& x) {
        return mul(a, u.units[t], x) - mul(a, x, u.starred[t]);
    });
    // even: (h1, h2, x) = 0 for unit pairs
    Subspace even = constrained_span(f, n, all, 16, [&](std::size_t t, const Vec& x) {
        return associator(a, u.units[t / 4], u.units[t % 4], x);
    });
    return Grading{std::move(even), std::move(odd)};
}

Subspace extract_za(const AlgebraTable& a, const Grading& g, const MatrixUnits& e, CheckList& report, Exec exec) {
    const Subspace h = units_span(a, e);
    Subspace za = centralizer(a, h, g.even);
    const Basis& z = za.basis();
    const Basis all = standard_basis(a);
    const Basis hb = e.as_list();
    const Basis& odd = g.odd.basis();
    Ops o{a};

    report.add(sweep_relations("za_nucleus_with_units",
                               {{"(z,x,h) = 0", {&z, &all, &hb}, [&](const Args& v) {
                                     return !is_zero(o.as(*v[0], *v[1], *v[2]));
                                 }}},
                               exec));
    report.add(sweep_relations("za_commutes_with_odd",
                               {{"[z,m] = 0", {&z, &odd}, [&](const Args& v) { return !is_zero(o.cm(*v[0], *v[1])); }}},
                               exec));
    report.add(sweep_relations("za_in_nucleus",
                               {{"(z,x,y) = 0", {&z, &all, &all}, [&](const Args& v) {
                                     return !is_zero(o.as(*v[0], *v[1], *v[2]));
                                 }}},
                               exec));
    report.add(sweep_relations("za_closed",
                               {{"z z' in Z_a", {&z, &z}, [&](const Args& v) {
                                     return !za.contains(o.m(*v[0], *v[1]));
                                 }}},
                               exec));
    report.add(sweep_relations(
        "za_commutators_annihilate_odd",
        {{"[z,z']m = 0", {&z, &z, &odd}, [&](const Args& v) { return !is_zero(o.m(o.cm(*v[0], *v[1]), *v[2])); }},
         {"m[z,z'] = 0", {&z, &z, &odd}, [&](const Args& v) { return !is_zero(o.m(*v[2], o.cm(*v[0], *v[1]))); }}},
        exec));
    return za;
}

TensorPart verify_tensor(const AlgebraTable& a, const Grading& g, const Subspace& za, const MatrixUnits& e,
                         CheckList& report) {
    const Field& f = a.field();
    const std::size_t dz = za.dim();
    if (!za.contains(a.unit())) throw StageError("verify_tensor", "the unit of A is not in Z_a");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < dz; ++i) names.push_back("z" + std::to_string(i));
    std::vector<Vec> prods(dz * dz);
    for (std::size_t i = 0; i < dz; ++i)
        for (std::size_t j = 0; j < dz; ++j)
            prods[i * dz + j] =
                coords_in(za, mul(a, za.basis()[i], za.basis()[j]), "verify_tensor", "Z_a is not closed");
    AlgebraTable table = AlgebraTable::from_products(
        f, names, [&](std::size_t i, std::size_t j) { return prods[i * dz + j]; }, *za.coordinates(a.unit()));
    std::optional<CoeffRing> ring;
    try {
        ring.emplace(std::move(table));
    } catch (const PreconditionError& err) {
        throw StageError("verify_tensor", err.what());
    }

    std::vector<Vec> cols(4 * dz);
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q)
            for (std::size_t i = 0; i < dz; ++i)
                cols[static_cast<std::size_t>(2 * p + q) * dz + i] = mul(a, za.basis()[i], e(p, q));
    bool inside = true;
    for (const auto& c : cols) inside = inside && g.even.contains(c);
    const Subspace span = Subspace::span(f, a.dim(), cols);
    const bool ok = inside && span.dim() == 4 * dz && span == g.even;
    report.add("even_part_tensor", ok,
               ok ? "" : "z_i E_pq span a space of dim " + std::to_string(span.dim()) + " against even part dim " +
                             std::to_string(g.even.dim()));
    if (!ok) throw StageError("verify_tensor", "z_i E_pq is not a basis of the even part");
    return TensorPart{std::move(*ring), Matrix::from_columns(f, a.dim(), cols)};
}

CayleySplit split_cayley_part(const AlgebraTable& a, const Grading& g, const MatrixUnits& e, CheckList& report) {
    const Field& f = a.field();
    const std::size_t n = a.dim();
    auto eigen = [&](int p) {
        return constrained_span(f, n, g.odd.basis(), 1,
                                [&](std::size_t, const Vec& x) { return mul(a, e(p, p), x) - x; });
    };
    Subspace v1 = eigen(0), v2 = eigen(1);
    std::string problem;
    if (!(v1 + v2 == g.odd) || v1.dim() + v2.dim() != g.odd.dim())
        problem = "V(1) + V(2) is not a direct sum equal to the odd part";
    std::optional<Matrix> pi12, pi21;
    if (problem.empty()) {
        std::vector<Vec> c12, c21;
        for (const auto& v : v1.basis()) {
            auto c = v2.coordinates(mul(a, e(0, 1), v));
            if (!c) {
                problem = "E12 V(1) is not inside V(2)";
                break;
            }
            c12.push_back(*c);
        }
        for (const auto& v : v2.basis()) {
            if (!problem.empty()) break;
            auto c = v1.coordinates(mul(a, e(1, 0), v));
            if (!c) {
                problem = "E21 V(2) is not inside V(1)";
                break;
            }
            c21.push_back(*c);
        }
        if (problem.empty()) {
            pi12 = Matrix::from_columns(f, v2.dim(), c12);
            pi21 = Matrix::from_columns(f, v1.dim(), c21);
            if (v1.dim() != v2.dim() || !(*pi21 * *pi12 == Matrix::identity(f, v1.dim())) ||
                !(*pi12 * *pi21 == Matrix::identity(f, v2.dim())))
                problem = "left multiplication by E12 and E21 are not mutually inverse";
        }
    }
    report.add("cayley_split", problem.empty(), problem);
    if (!problem.empty()) throw StageError("split_cayley_part", problem);
    return CayleySplit{std::move(v1), std::move(v2), std::move(*pi12), std::move(*pi21)};
}

ExtractedForm extract_form(const AlgebraTable& a, const CayleySplit& split, const Subspace& za,
                           const TensorPart& tensor, const MatrixUnits& e, CheckList& report, Exec exec) {
    const Field& f = a.field();
    const Basis& v = split.v1.basis();
    const std::size_t m = v.size();
    Ops o{a};
    Basis v2;
    for (const auto& x : v) v2.push_back(o.m(e(0, 1), x));

    // Values in A, then in Z_a coordinates.
    std::vector<Element> val(m * m);
    auto vals = map_indices(m * m, [&](std::size_t t) {
        const std::size_t i = t / m, j = t % m;
        return o.m(v2[i], v[j]) - o.m(v[i], v2[j]);
    }, exec);
    for (std::size_t t = 0; t < m * m; ++t) val[t] = vals[t];

    Check in_za{"form_in_za", true, {}, {}, std::nullopt};
    for (std::size_t t = 0; t < m * m && in_za.pass; ++t)
        if (!za.contains(val[t])) {
            in_za.pass = false;
            in_za.witness = {t / m, t % m};
            in_za.detail = "<v" + std::to_string(t / m) + ",v" + std::to_string(t % m) + "> is not in Z_a";
        }
    report.add(in_za);
    if (!in_za.pass) throw StageError("extract_form", in_za.detail);

    Basis idx;
    for (std::size_t i = 0; i < m; ++i) idx.push_back(unit_vec(f, m, i));
    auto pos = [&](const Vec* x) {
        for (std::size_t i = 0; i < m; ++i)
            if (!x->at(i).is_zero()) return i;
        return std::size_t{0};
    };
    auto z = [&](const Args& w) -> const Element& { return val[pos(w[0]) * m + pos(w[1])]; };
    auto eq = [&](const Element& x, const Element& y) { return !(x == y); };
    report.add(sweep_relations(
        "form_matrix_products",
        {{"u(1)v(1) = z E21", {&idx, &idx}, [&](const Args& w) { return eq(o.m(v[pos(w[0])], v[pos(w[1])]), o.m(z(w), e(1, 0))); }},
         {"u(1)v(2) = -z E11", {&idx, &idx}, [&](const Args& w) { return eq(o.m(v[pos(w[0])], v2[pos(w[1])]), -o.m(z(w), e(0, 0))); }},
         {"u(2)v(1) = z E22", {&idx, &idx}, [&](const Args& w) { return eq(o.m(v2[pos(w[0])], v[pos(w[1])]), o.m(z(w), e(1, 1))); }},
         {"u(2)v(2) = -z E12", {&idx, &idx}, [&](const Args& w) { return eq(o.m(v2[pos(w[0])], v2[pos(w[1])]), -o.m(z(w), e(0, 1))); }}},
        exec));
    report.add(sweep_relations("form_skew",
                               {{"<u,v> + <v,u> = 0", {&idx, &idx}, [&](const Args& w) {
                                     return !is_zero(val[pos(w[0]) * m + pos(w[1])] + val[pos(w[1]) * m + pos(w[0])]);
                                 }}},
                               exec));
    const Subspace zc = center(a);
    report.add(sweep_relations("form_central",
                               {{"<u,v> in Z(A)", {&idx, &idx}, [&](const Args& w) { return !zc.contains(z(w)); }}},
                               exec));

    const CoeffRing& ring = tensor.ring;
    BimoduleV module{m, {}};
    for (std::size_t k = 0; k < ring.dim(); ++k) {
        std::vector<Vec> cols;
        for (std::size_t j = 0; j < m; ++j)
            cols.push_back(coords_in(split.v1, o.m(za.basis()[k], v[j]), "extract_form", "Z_a V(1) is not inside V(1)"));
        module.action.push_back(Matrix::from_columns(f, m, cols));
    }
    SkewForm form = SkewForm::zero(ring, m);
    for (std::size_t t = 0; t < m * m; ++t) form.entries[t] = *za.coordinates(val[t]);
    return ExtractedForm{std::move(module), std::move(form)};
}

Check iso_check(const AlgebraTable& a, const AlgebraTable& bt, const Matrix& l, Exec exec) {
    Check c{"isomorphism", true, {}, {}, std::nullopt};
    const std::size_t n = a.dim();
    if (l.rows() != bt.dim() || l.cols() != n || n != bt.dim() || !inverse(l)) {
        c.pass = false;
        c.detail = "map is not invertible";
        return c;
    }
    if (a.has_unit() != bt.has_unit() || (a.has_unit() && !(l.apply(a.unit()) == bt.unit()))) {
        c.pass = false;
        c.detail = "unit is not sent to unit";
        return c;
    }
    std::vector<Vec> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(l.column(i));
    auto bad = first_failure(n * n, [&](std::size_t t) {
        const std::size_t i = t / n, j = t % n;
        return !(l.apply(to_dense(a.field(), n, a.product(i, j))) == mul(bt, images[i], images[j]));
    }, exec);
    if (bad) {
        c.pass = false;
        c.witness = {*bad / n, *bad % n};
        c.detail = "not multiplicative on basis pair " + tuple_text(c.witness);
    }
    return c;
}

namespace {

void grading_relations(const AlgebraTable& a, const Grading& g, const MatrixUnits& e, CheckList& report,
                       Exec exec) {
    Ops o{a};
    const UnitBasis u = unit_basis(e);
    const Basis& h = u.units;
    const Basis& even = g.even.basis();
    const Basis& odd = g.odd.basis();
    const Basis all = standard_basis(a);
    auto st = [&](const Vec* x) -> const Element& { return star_of(u, x); };
    auto ne = [](const Element& x, const Element& y) { return !(x == y); };

    report.add(sweep_relations(
        "grading_products",
        {{"even even in even", {&even, &even}, [&](const Args& v) { return !g.even.contains(o.m(*v[0], *v[1])); }},
         {"even odd in odd", {&even, &odd}, [&](const Args& v) { return !g.odd.contains(o.m(*v[0], *v[1])); }},
         {"odd even in odd", {&odd, &even}, [&](const Args& v) { return !g.odd.contains(o.m(*v[0], *v[1])); }},
         {"odd odd in even", {&odd, &odd}, [&](const Args& v) { return !g.even.contains(o.m(*v[0], *v[1])); }}},
        exec));
    report.add(sweep_relations("even_part_associative",
                               {{"(x,y,z) = 0 on the even part", {&even, &even, &even},
                                 [&](const Args& v) { return !is_zero(o.as(*v[0], *v[1], *v[2])); }}},
                               exec));
    report.add(sweep_relations(
        "cayley_relations",
        {{"m a = a* m", {&h, &odd}, [&](const Args& v) { return ne(o.m(*v[1], *v[0]), o.m(st(v[0]), *v[1])); }},
         {"(ab)v = b(av)", {&h, &h, &odd},
          [&](const Args& v) { return ne(o.m(o.m(*v[0], *v[1]), *v[2]), o.m(*v[1], o.m(*v[0], *v[2]))); }},
         {"v(ab) = (vb)a", {&h, &h, &odd},
          [&](const Args& v) { return ne(o.m(*v[2], o.m(*v[0], *v[1])), o.m(o.m(*v[2], *v[1]), *v[0])); }},
         {"a(ur) = u(a*r)", {&h, &odd, &all},
          [&](const Args& v) { return ne(o.m(*v[0], o.m(*v[1], *v[2])), o.m(*v[1], o.m(st(v[0]), *v[2]))); }},
         {"a(uv) = u(va)", {&h, &odd, &odd},
          [&](const Args& v) { return ne(o.m(*v[0], o.m(*v[1], *v[2])), o.m(*v[1], o.m(*v[2], *v[0]))); }},
         {"(uv)a = (au)v", {&h, &odd, &odd},
          [&](const Args& v) { return ne(o.m(o.m(*v[1], *v[2]), *v[0]), o.m(o.m(*v[0], *v[1]), *v[2])); }},
         {"(u,v,a) = [uv,a]", {&h, &odd, &odd},
          [&](const Args& v) { return ne(o.as(*v[1], *v[2], *v[0]), o.cm(o.m(*v[1], *v[2]), *v[0])); }}},
        exec));
    report.add(sweep_relations(
        "odd_part_identities",
        {{"(mn)a = (am)n", {&h, &odd, &odd},
          [&](const Args& v) { return ne(o.m(o.m(*v[1], *v[2]), *v[0]), o.m(o.m(*v[0], *v[1]), *v[2])); }},
         {"a(mn) = m(na)", {&h, &odd, &odd},
          [&](const Args& v) { return ne(o.m(*v[0], o.m(*v[1], *v[2])), o.m(*v[1], o.m(*v[2], *v[0]))); }},
         {"(um)a = (ua*)m", {&h, &even, &odd},
          [&](const Args& v) { return ne(o.m(o.m(*v[1], *v[2]), *v[0]), o.m(o.m(*v[1], st(v[0])), *v[2])); }},
         {"a(mu) = m(a*u)", {&h, &even, &odd},
          [&](const Args& v) { return ne(o.m(*v[0], o.m(*v[2], *v[1])), o.m(*v[2], o.m(st(v[0]), *v[1]))); }},
         {"((um)a)b = (um)(ba)", {&h, &h, &even, &odd},
          [&](const Args& v) {
              Element um = o.m(*v[2], *v[3]);
              return ne(o.m(o.m(um, *v[0]), *v[1]), o.m(um, o.m(*v[1], *v[0])));
          }},
         {"b(a(mu)) = (ab)(mu)", {&h, &h, &even, &odd},
          [&](const Args& v) {
              Element mu = o.m(*v[3], *v[2]);
              return ne(o.m(*v[1], o.m(*v[0], mu)), o.m(o.m(*v[0], *v[1]), mu));
          }},
         {"(um,a,b) = (um)[b,a]", {&h, &h, &even, &odd},
          [&](const Args& v) {
              Element um = o.m(*v[2], *v[3]);
              return ne(o.as(um, *v[0], *v[1]), o.m(um, o.cm(*v[1], *v[0])));
          }},
         {"(b,a,mu) = [b,a](mu)", {&h, &h, &even, &odd},
          [&](const Args& v) {
              Element mu = o.m(*v[3], *v[2]);
              return ne(o.as(*v[1], *v[0], mu), o.m(o.cm(*v[1], *v[0]), mu));
          }}},
        exec));
}

Check form_plucker(const CoeffRing& ring, const SkewForm& form) {
    PluckerFamily<Element> fam = make_family(form.n, ring.zero());
    for (std::size_t i = 1; i <= form.n; ++i)
        for (std::size_t j = i + 1; j <= form.n; ++j) fam.stored(i, j) = form.at(i - 1, j - 1);
    return check_plucker(
        fam, [&](const Element& x, const Element& y) { return ring.mul(x, y); },
        [](const Element& x) { return is_zero(x); });
}

}  // namespace

CoordinatizationResult coordinatize(const AlgebraTable& a, const MatrixUnits& e, Exec exec) {
    CoordinatizationResult r;
    auto stop = [&](const std::string& stage, const std::string& what) {
        r.failed_stage = stage;
        r.failure = what;
        r.report.add(stage, false, what);
        return r;
    };

    Check alt = check_alternative(a, exec);
    alt.name = "alternative";
    r.report.add(alt);
    if (!a.has_unit()) {
        r.report.add("matrix_units", false, "algebra has no unit");
        return stop("input", "algebra has no unit");
    }
    const bool units_ok = verify_matrix_units(a, e);
    r.report.add("matrix_units", units_ok, units_ok ? "" : "E_pq E_rs = delta_qr E_ps or E11 + E22 = 1 fails");
    if (!alt.pass) return stop("input", "algebra is not alternative: " + alt.detail);
    if (!units_ok) return stop("verify_matrix_units", "the given elements are not matrix units with sum 1");

    try {
        Grading g = decompose(a, e, exec);
        r.report.add("grading_direct_sum", true);
        const Grading alt_g = decompose_alternate(a, e, exec);
        const bool same = alt_g.even == g.even && alt_g.odd == g.odd;
        r.report.add("grading_stage_order", same,
                     same ? "" : "the grading obtained from the Cayley law differs from the associator grading");
        r.grading = g;
        grading_relations(a, g, e, r.report, exec);

        Subspace za = extract_za(a, g, e, r.report, exec);
        r.za = za;
        TensorPart tensor = verify_tensor(a, g, za, e, r.report);
        CayleySplit split = split_cayley_part(a, g, e, r.report);
        r.split = split;
        ExtractedForm ext = extract_form(a, split, za, tensor, e, r.report, exec);
        KronSpec spec{tensor.ring, ext.module, ext.form};
        r.report.add(form_plucker(spec.ring, spec.form));

        CheckList valid = validate_form(spec, exec);
        for (Check c : valid.checks()) {
            c.name = "spec_" + c.name;
            r.report.add(c);
        }
        r.report.add("rebuild_valid", valid.pass(), valid.pass() ? "" : "extracted data does not pass validate_form");

        BuiltAlgebra built = build_algebra(spec, true, exec);
        const Field& f = a.field();
        const std::size_t dz = za.dim(), m = split.v1.dim();
        std::vector<Vec> cols;
        for (std::size_t k = 0; k < 4 * dz; ++k) cols.push_back(tensor.even_basis.column(k));
        for (std::size_t j = 0; j < m; ++j) cols.push_back(split.v1.basis()[j]);
        for (std::size_t j = 0; j < m; ++j) cols.push_back(mul(a, e(0, 1), split.v1.basis()[j]));
        Matrix to_input = Matrix::from_columns(f, a.dim(), cols);
        auto inv = inverse(to_input);
        r.spec = std::move(spec);
        r.rebuilt = built.table;
        r.rebuilt_to_input = to_input;
        if (!inv) return stop("isomorphism", "rebuilt basis does not map onto a basis of A");
        r.iso = *inv;
        r.report.add(iso_check(a, built.table, *inv, exec));
    } catch (const StageError& err) {
        return stop(err.stage(), err.what());
    }
    return r;
}

}  // namespace altkron
