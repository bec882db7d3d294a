#include "doctest.h"

#include "altkron/constructions.hpp"
#include "altkron/coordinatizer.hpp"
#include "altkron/errors.hpp"
#include "altkron/fixtures.hpp"
#include "altkron/identities.hpp"

using namespace altkron;

namespace {

const Field Q = Field::rational();

Vec ints(const Field& f, std::initializer_list<std::int64_t> xs) {
    Vec v;
    for (auto x : xs) v.push_back(f.from_int(x));
    return v;
}

bool all_pass(const CheckList& r) {
    for (const auto& c : r.checks())
        if (!c.pass) {
            MESSAGE(c.name << ": " << c.detail);
            return false;
        }
    return true;
}

}  // namespace

TEST_CASE("split octonions over Q") {
    auto o = octonion(CoeffRing(ground_algebra(Q)));
    CHECK(o.table.dim() == 8);
    CHECK(check_alternative(o.table).pass);
    const Subspace all = Subspace::whole(Q, 8);
    CHECK(associator_subspace(o.table, all, all, all).dim() > 0);
    CHECK(verify_matrix_units(o.table, o.units));
    CHECK(all_pass(o.report));
    REQUIRE(o.spec);
    // <(1,0),(0,1)> = -det I
    CHECK(form_value(*o.spec, ints(Q, {1, 0}), ints(Q, {0, 1})) == ints(Q, {-1}));
}

TEST_CASE("octonion associator subspace is the v-part") {
    auto o = octonion(CoeffRing(ground_algebra(Q)));
    const Subspace h = Subspace::span(Q, 8, o.units.as_list());
    const Subspace ac = associator_subspace(o.table, Subspace::whole(Q, 8), h, h);
    std::vector<Vec> v;
    for (std::size_t i = 4; i < 8; ++i) v.push_back(unit_vec(Q, 8, i));
    CHECK(ac == Subspace::span(Q, 8, v));
}

TEST_CASE("octonions over dual numbers are alternative of dim 16") {
    auto o = octonion(CoeffRing(truncated_poly(Q, 2)));
    CHECK(o.table.dim() == 16);
    CHECK(check_alternative(o.table).pass);
    CHECK(all_pass(o.report));
}

TEST_CASE("cd over dual numbers with parameter t") {
    CoeffRing base(truncated_poly(Q, 2));
    const Vec t = ints(Q, {0, 1});
    auto c = cd(base, t);
    CHECK(c.table.dim() == 16);
    CHECK(check_alternative(c.table).pass);
    CHECK(all_pass(c.report));
    CHECK(form_value(*c.spec, ints(Q, {1, 0, 0, 0}), ints(Q, {0, 0, 1, 0})) == ints(Q, {0, -1}));
    // t x = 1 has no solution
    CHECK_FALSE(left_divide(base.table(), t, base.one()).has_value());
    auto v = octonion_criterion(*c.spec);
    CHECK(v.kind == OctonionVerdict::Kind::unknown);
}

TEST_CASE("cd with zero parameter is a null extension") {
    auto c = cd(CoeffRing(ground_algebra(Q)), ints(Q, {0}));
    CHECK(check_alternative(c.table).pass);
    for (const auto& e : c.spec->form.entries) CHECK(is_zero(e));
    auto v = octonion_criterion(*c.spec);
    CHECK(v.kind == OctonionVerdict::Kind::no);
    CHECK(v.reason == "form has no unit value");
}

TEST_CASE("cd over dual numbers reduced mod 5 is not octonion by exhaustive search") {
    const Field f5 = Field::prime(5);
    auto c = cd(CoeffRing(truncated_poly(f5, 2)), ints(f5, {0, 1}));
    auto v = octonion_criterion(*c.spec);
    CHECK(v.kind == OctonionVerdict::Kind::no);
    // Oracle: every value <x,y> has zero constant term since alpha = t.
    for (const auto& e : c.spec->form.entries) CHECK(e[0].is_zero());
}

TEST_CASE("cd rejects a noncommutative base") {
    CHECK_THROWS_AS(cd(CoeffRing(matrix_algebra2(Q)), matrix_algebra2(Q).unit()), PreconditionError);
}

TEST_CASE("ncd over the Grassmann algebra") {
    CoeffRing g(grassmann2(Q));
    const Vec e12 = ints(Q, {0, 0, 0, 1});
    CHECK(g.commutator_ideal() == Subspace::span(Q, 4, {e12}));
    auto n = ncd(g, e12);
    CHECK(n.table.dim() == 28);
    CHECK(check_alternative(n.table).pass);
    CHECK(verify_matrix_units(n.table, n.units));
    CHECK(all_pass(n.report));
    REQUIRE(n.report.find("section_independent"));
    CHECK(n.report.find("section_independent")->pass);
}

TEST_CASE("ncd modulo M2 of the commutator ideal is cd over the quotient") {
    CoeffRing g(grassmann2(Q));
    const Vec e12 = ints(Q, {0, 0, 0, 1});
    auto n = ncd(g, e12);
    std::vector<Vec> gens;
    for (std::size_t k = 0; k < 4; ++k) gens.push_back(unit_vec(Q, 28, 4 * k + 3));
    Quotient q = quotient_algebra(n.table, Subspace::span(Q, 28, gens));
    Quotient bar = quotient_algebra(g.table(), g.commutator_ideal());
    auto c = cd(CoeffRing(bar.algebra), bar.projection.apply(e12));
    REQUIRE(q.algebra.dim() == c.table.dim());
    for (std::size_t i = 0; i < c.table.dim(); ++i)
        for (std::size_t j = 0; j < c.table.dim(); ++j) CHECK(q.algebra.product(i, j) == c.table.product(i, j));
    CHECK(q.algebra.unit() == c.table.unit());
}

TEST_CASE("ncd over a commutative base coincides with cd") {
    CoeffRing b(truncated_poly(Q, 2));
    const Vec t = ints(Q, {0, 1});
    CHECK(ncd(b, t).table == cd(b, t).table);
}

TEST_CASE("ncd rejects alpha with noncentral multiples") {
    CoeffRing g(grassmann2(Q));
    try {
        ncd(g, ints(Q, {0, 1, 0, 0}));
        FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()) == "alpha*A not central");
    }
}

TEST_CASE("split null extensions") {
    const auto m2 = matrix_algebra2(Q);
    auto cay = split_null_extension(m2, cay_bimodule(Q));
    CHECK(cay.table.dim() == 6);
    CHECK(cay.alternative.pass);
    CHECK(cay.table.has_unit());

    auto reg = split_null_extension(m2, regular_bimodule(m2));
    CHECK(reg.table.dim() == 8);
    CHECK(associator_subspace(reg.table, Subspace::whole(Q, 8), Subspace::whole(Q, 8), Subspace::whole(Q, 8)).dim() ==
          0);

    auto broken = cay_bimodule(Q);
    for (auto& m : broken.right) m = Matrix(Q, 2, 2);
    auto bad = split_null_extension(m2, broken);
    CHECK_FALSE(bad.alternative.pass);
    CHECK(bad.alternative.witness.size() == 3);
    CHECK_FALSE(bad.table.has_unit());

    BimoduleActions wrong = cay_bimodule(Q);
    wrong.left.pop_back();
    CHECK_THROWS_AS(split_null_extension(m2, wrong), InputError);
}

TEST_CASE("three generator module over Q[t]/t^3") {
    CoeffRing b(truncated_poly(Q, 3));
    auto spec = three_generator_module(b, ints(Q, {0, 1, 0}), ints(Q, {0, 0, 1}), ints(Q, {0, 0, 0}));
    CHECK(spec.module.dim == 7);
    CHECK(validate_form(spec).pass());
}

TEST_CASE("three generator module with zero generators is the free module with zero form") {
    CoeffRing b(truncated_poly(Q, 2));
    auto spec = three_generator_module(b, b.zero(), b.zero(), b.zero());
    CHECK(spec.module.dim == 6);
    for (const auto& e : spec.form.entries) CHECK(is_zero(e));
}

TEST_CASE("three generator module with a = b = 0 carries the cd form on e1, e2") {
    CoeffRing b(ground_algebra(Q));
    auto spec = three_generator_module(b, b.zero(), b.zero(), ints(Q, {3}));
    REQUIRE(spec.module.dim == 2);
    CHECK(spec.form.at(0, 1) == ints(Q, {3}));
    CHECK(spec.form.at(1, 0) == ints(Q, {-3}));
    CHECK(check_alternative(build_algebra(spec).table).pass);
}

TEST_CASE("octonion criterion") {
    auto o = octonion(CoeffRing(ground_algebra(Q)));
    auto w = octonion_criterion(*o.spec, std::make_pair(ints(Q, {1, 0}), ints(Q, {0, -1})));
    CHECK(w.kind == OctonionVerdict::Kind::yes);
    auto h = octonion_criterion(*o.spec);
    CHECK(h.kind == OctonionVerdict::Kind::yes);
    REQUIRE(h.witness);
    CHECK(form_value(*o.spec, h.witness->first, h.witness->second) == ints(Q, {1}));
    CHECK(h.witness->first == ints(Q, {1, 0}));
    CHECK(h.witness->second == ints(Q, {0, -1}));
    CHECK(verdict_name(OctonionVerdict::Kind::unknown) == "unknown");
}

TEST_CASE("coordinatize the split octonions") {
    auto o = octonion(CoeffRing(ground_algebra(Q)));
    auto r = coordinatize(o.table, o.units);
    CHECK(all_pass(r.report));
    CHECK(r.failed_stage.empty());
    REQUIRE(r.spec);
    CHECK(r.za->dim() == 1);
    CHECK(r.spec->module.dim == 2);
    CHECK(r.spec->form.at(0, 1) == ints(Q, {-1}));
    CHECK(r.spec->form.at(1, 0) == ints(Q, {1}));
}

TEST_CASE("coordinatize M2(Q) and the Cayley null extension") {
    auto m = coordinatize(matrix_algebra2(Q), standard_units(Q));
    CHECK(all_pass(m.report));
    CHECK(m.spec->module.dim == 0);
    CHECK(m.za->dim() == 1);

    auto cay = split_null_extension(matrix_algebra2(Q), cay_bimodule(Q));
    MatrixUnits e = standard_units(Q);
    for (auto& row : e.e)
        for (auto& x : row) x.resize(6, Q.zero());
    auto r = coordinatize(cay.table, e);
    CHECK(all_pass(r.report));
    CHECK(r.grading->odd.dim() == 2);
    CHECK(r.split->v1.dim() == 1);
    CHECK(r.spec->form.at(0, 0) == ints(Q, {0}));
}

TEST_CASE("coordinatize cd and ncd examples") {
    CoeffRing dual(truncated_poly(Q, 2));
    auto c = cd(dual, ints(Q, {0, 1}));
    auto rc = coordinatize(c.table, c.units);
    CHECK(all_pass(rc.report));
    CHECK(rc.za->dim() == 2);

    auto n = ncd(CoeffRing(grassmann2(Q)), ints(Q, {0, 0, 0, 1}));
    auto rn = coordinatize(n.table, n.units);
    CHECK(all_pass(rn.report));
    CHECK(rn.za->dim() == 4);
    CHECK_FALSE(rn.spec->ring.is_commutative());
}

TEST_CASE("coordinatize M2 tensor M2 has a noncommutative Z_a") {
    const auto m2 = matrix_algebra2(Q);
    const auto t = tensor_product(m2, m2);
    MatrixUnits e;
    const Vec one = m2.unit();
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) {
            Vec x = zero_vec(Q, 16);
            for (std::size_t j = 0; j < 4; ++j) x[static_cast<std::size_t>(2 * p + q) * 4 + j] = one[j];
            e(p, q) = x;
        }
    auto r = coordinatize(t, e);
    CHECK(all_pass(r.report));
    CHECK(r.za->dim() == 4);
    CHECK_FALSE(r.spec->ring.is_commutative());
}

TEST_CASE("coordinatize stops on bogus units") {
    const auto t = truncated_poly(Q, 4);
    MatrixUnits e{{{{t.unit(), t.zero()}, {t.zero(), t.zero()}}}};
    auto r = coordinatize(t, e);
    CHECK(r.failed_stage == "verify_matrix_units");
    CHECK_FALSE(r.pass());
}

TEST_CASE("iso_check") {
    auto o = octonion(CoeffRing(ground_algebra(Q)));
    CHECK(iso_check(o.table, o.table, Matrix::identity(Q, 8)).pass);
    auto built = build_algebra(*o.spec);
    CHECK(iso_check(built.table, o.table, *o.spec_map).pass);
    Matrix flipped = *o.spec_map;
    // sign flip on the image of the first V(1) basis vector
    for (std::size_t r = 0; r < 8; ++r) flipped.at(r, 4) = -flipped.at(r, 4);
    auto bad = iso_check(built.table, o.table, flipped);
    CHECK_FALSE(bad.pass);
    CHECK(bad.witness.size() == 2);
}
