#include "doctest.h"

#include "altkron/constructions.hpp"
#include "altkron/coordinatized.hpp"
#include "altkron/errors.hpp"
#include "altkron/fixtures.hpp"
#include "altkron/identities.hpp"
#include "altkron/specgen.hpp"

using namespace altkron;

namespace {

KronSpec plane_spec(const Field& f, std::int64_t value) {
    CoeffRing b(ground_algebra(f));
    BimoduleV v = free_module(b, 2);
    SkewForm g = SkewForm::zero(b, 2);
    g.at(0, 1) = Vec{f.from_int(value)};
    g.at(1, 0) = Vec{f.from_int(-value)};
    return KronSpec{b, v, g};
}

}  // namespace

TEST_CASE("dim-8 algebra from a unimodular plane is alternative with trivial nucleus") {
    const Field q = Field::rational();
    auto built = build_algebra(plane_spec(q, 1));
    CHECK(built.table.dim() == 8);
    CHECK(check_alternative(built.table).pass);
    CHECK(nucleus(built.table).dim() == 1);
    CHECK(center(built.table).dim() == 1);
    CHECK(verify_matrix_units(built.table, built.units));
}

namespace {

const Field Q = Field::rational();

Mat2 mat2(const CoeffRing& b, std::initializer_list<std::int64_t> xs) {
    Mat2 m = Mat2::zero(b);
    std::size_t k = 0;
    for (auto x : xs) m.e[k++] = scale(b.field().from_int(x), b.one());
    return m;
}

/// (B = Q[t]/t^2, V = B^3 / B(0,0,t)) with <e1,e2> = t, the rest zero. The
/// F-basis of V is e1, t e1, e2, t e2, e3.
KronSpec nilpotent_three_generator() {
    CoeffRing b(truncated_poly(Q, 2));
    const Element t = b.table().basis(1);
    return three_generator_module(b, b.zero(), b.zero(), t);
}

/// Adds the B-bilinear form with <e1,e2> = 1 to the spec above.
void shift_e1e2(KronSpec& s) {
    const CoeffRing& b = s.ring;
    const Element one = b.one(), t = b.table().basis(1);
    auto add = [&](std::size_t i, std::size_t j, const Element& v) {
        s.form.at(i, j) = s.form.at(i, j) + v;
        s.form.at(j, i) = s.form.at(j, i) - v;
    };
    add(0, 2, one);
    add(0, 3, t);
    add(1, 2, t);
}

std::vector<KronSpec> random_specs(const Field& f, int count, std::uint64_t seed) {
    std::vector<KronSpec> out;
    for (int s = 0; s < count; ++s) {
        Rng r = Rng::derive(seed, static_cast<std::uint64_t>(s));
        out.push_back(random_spec(f, r));
    }
    return out;
}

}  // namespace

TEST_CASE("star on 2x2 matrices") {
    CoeffRing b(ground_algebra(Q));
    CHECK(star(Mat2::identity(b)) == Mat2::identity(b));
    CHECK(star(mat2(b, {0, 1, 0, 0})) == mat2(b, {0, -1, 0, 0}));
    CHECK(star(mat2(b, {1, 2, 3, 4})) == mat2(b, {4, -2, -3, 1}));
}

TEST_CASE("M star(M) is the determinant over a commutative ring") {
    CoeffRing b(truncated_poly(Q, 3));
    Rng rng(12);
    for (int t = 0; t < 20; ++t) {
        Mat2 m = Mat2::zero(b);
        for (auto& e : m.e) e = random_vec(Q, 3, rng);
        const Element det = b.mul(m(0, 0), m(1, 1)) - b.mul(m(0, 1), m(1, 0));
        Mat2 expect = Mat2::zero(b);
        expect(0, 0) = det;
        expect(1, 1) = det;
        CHECK(mat2_mul(b, m, star(m)) == expect);
        CHECK(mat2_mul(b, star(m), m) == expect);
    }
}

TEST_CASE("validate_form examples") {
    const Construction o = octonion(CoeffRing(ground_algebra(Q)));
    REQUIRE(o.spec.has_value());
    CHECK(validate_form(*o.spec).pass());

    CoeffRing b(truncated_poly(Q, 2));
    const KronSpec zero{b, free_module(b, 3), SkewForm::zero(b, 6)};
    CHECK(validate_form(zero).pass());

    KronSpec s = nilpotent_three_generator();
    REQUIRE(s.module.dim == 5);
    CHECK(validate_form(s).pass());
    shift_e1e2(s);
    const CheckList r = validate_form(s);
    CHECK_FALSE(r.pass());
    for (const char* ok : {"module_unital", "form_skew", "form_central", "form_bilinear"}) CHECK(r.find(ok)->pass);
    const Check* cyc = r.find("form_cyclic");
    REQUIRE(cyc != nullptr);
    CHECK_FALSE(cyc->pass);
    CHECK(cyc->witness.size() == 3);
}

TEST_CASE("forcing an invalid form gives a non-alternative algebra") {
    KronSpec s = nilpotent_three_generator();
    shift_e1e2(s);
    CHECK_THROWS_AS(build_algebra(s), PreconditionError);
    const BuiltAlgebra built = build_algebra(s, true);
    const Check c = check_alternative(built.table);
    CHECK_FALSE(c.pass);
    CHECK(c.witness.size() == 3);
}

TEST_CASE("kron_product unit law and pure pairs") {
    KronSpec spec = plane_spec(Q, 1);
    const CoeffRing& b = spec.ring;
    Rng rng(3);
    KronElement y = KronElement::zero(spec);
    for (auto& e : y.mat.e) e = random_vec(Q, 1, rng);
    y.x = random_vec(Q, 2, rng);
    y.y = random_vec(Q, 2, rng);
    KronElement one = KronElement::zero(spec);
    one.mat = Mat2::identity(b);
    CHECK(kron_product(spec, one, y) == y);
    CHECK(kron_product(spec, y, one) == y);

    const Vec u{Q.one(), Q.zero()}, w{Q.zero(), Q.one()};
    const Element uw = form_value(spec, u, w);
    KronElement u1 = KronElement::zero(spec), w1 = KronElement::zero(spec), w2 = KronElement::zero(spec);
    u1.x = u;
    w1.x = w;
    w2.y = w;
    // u(1) w(1) = <u,w> e21 and u(1) w(2) = -<u,w> e11
    Mat2 e21 = Mat2::zero(b), e11 = Mat2::zero(b);
    e21(1, 0) = uw;
    e11(0, 0) = -uw;
    CHECK(kron_product(spec, u1, w1).mat == e21);
    CHECK(kron_product(spec, u1, w2).mat == e11);
    CHECK(is_zero(kron_product(spec, u1, w1).x));
}

TEST_CASE("octonion spec rebuilds the octonion table") {
    const Construction o = octonion(CoeffRing(ground_algebra(Q)));
    REQUIRE(o.spec.has_value());
    REQUIRE(o.spec_map.has_value());
    const BuiltAlgebra built = build_algebra(*o.spec);
    const Matrix& l = *o.spec_map;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            CHECK(l.apply(mul(built.table, built.table.basis(i), built.table.basis(j))) ==
                  mul(o.table, l.column(i), l.column(j)));
}

TEST_CASE("build_algebra small cases") {
    CoeffRing b(ground_algebra(Q));
    const BuiltAlgebra m2 = build_algebra(KronSpec{b, free_module(b, 0), SkewForm::zero(b, 0)});
    CHECK(m2.table.dim() == 4);
    CHECK(check_alternative(m2.table).pass);
    CHECK(nucleus(m2.table).dim() == 4);

    const BuiltAlgebra six = build_algebra(KronSpec{b, free_module(b, 1), SkewForm::zero(b, 1)});
    CHECK(six.table.dim() == 6);
    CHECK(check_alternative(six.table).pass);
    CHECK(nucleus(six.table).dim() < 6);
}

TEST_CASE("built algebras: units, Cayley action, grading, central form values") {
    auto specs = random_specs(Q, 12, 5);
    auto more = random_specs(Field::prime(5), 12, 6);
    for (auto& s : more) specs.push_back(std::move(s));
    for (const auto& spec : specs) {
        const BuiltAlgebra built = build_algebra(spec);
        const AlgebraTable& a = built.table;
        const std::size_t db = spec.ring.dim(), dv = spec.module.dim, even = 4 * db;
        CHECK(verify_matrix_units(a, built.units));
        CHECK(built.units(0, 0) + built.units(1, 1) == a.unit());
        CHECK(check_alternative(a).pass);

        // a m = m a* on the matrix units and the pair basis.
        const Scalar one = a.field().one(), zero = a.field().zero();
        for (int p = 0; p < 4; ++p) {
            std::array<Scalar, 4> c{zero, zero, zero, zero};
            c[p] = one;
            const Element unit = built.units(p / 2, p % 2);
            const Element starred = units_star(built.units, c);
            for (std::size_t m = even; m < a.dim(); ++m)
                CHECK(mul(a, unit, a.basis(m)) == mul(a, a.basis(m), starred));
        }

        // Z2-grading on the basis.
        auto is_even = [&](const Element& x) {
            for (std::size_t k = even; k < a.dim(); ++k)
                if (!x[k].is_zero()) return false;
            return true;
        };
        auto is_odd = [&](const Element& x) {
            for (std::size_t k = 0; k < even; ++k)
                if (!x[k].is_zero()) return false;
            return true;
        };
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j) {
                const Element p = mul(a, a.basis(i), a.basis(j));
                CHECK(((i < even) == (j < even) ? is_even(p) : is_odd(p)));
            }

        // <u,v> I commutes with everything; [B,B] kills form values.
        for (std::size_t i = 0; i < dv; ++i)
            for (std::size_t j = 0; j < dv; ++j) {
                const Element& g = spec.form.at(i, j);
                KronElement scalar = KronElement::zero(spec);
                scalar.mat(0, 0) = g;
                scalar.mat(1, 1) = g;
                const Element z = to_table_element(spec, scalar);
                for (std::size_t k = 0; k < a.dim(); ++k) CHECK(is_zero(commutator(a, z, a.basis(k))));
                for (std::size_t p = 0; p < db; ++p)
                    for (std::size_t q = 0; q < db; ++q) {
                        const Element c = spec.ring.mul(spec.ring.table().basis(p), spec.ring.table().basis(q)) -
                                          spec.ring.mul(spec.ring.table().basis(q), spec.ring.table().basis(p));
                        CHECK(is_zero(spec.ring.mul(c, g)));
                    }
            }
    }
}

TEST_CASE("random specs exercise noncommutative coefficient rings") {
    bool seen = false;
    for (const auto& spec : random_specs(Q, 40, 7)) {
        CHECK(validate_form(spec).pass());
        seen = seen || !spec.ring.is_commutative();
    }
    CHECK(seen);
}

TEST_CASE("table elements round trip through KronElement") {
    for (const auto& spec : random_specs(Q, 6, 9)) {
        const BuiltAlgebra built = build_algebra(spec);
        Rng rng(1);
        const Element x = random_vec(Q, built.table.dim(), rng);
        CHECK(to_table_element(spec, from_table_element(spec, x)) == x);
    }
}

TEST_CASE("form space elements are valid forms") {
    for (const auto& spec : random_specs(Field::prime(5), 10, 10)) {
        for (const auto& g : form_space(spec.ring, spec.module)) {
            const KronSpec s{spec.ring, spec.module, g};
            CHECK(validate_form(s).pass());
        }
    }
}

TEST_CASE("perturbed forms violate the cyclic identity") {
    SpecShape shape;
    shape.module_dim = 3;
    for (int s = 0; s < 10; ++s) {
        Rng r = Rng::derive(13, static_cast<std::uint64_t>(s));
        KronSpec spec = random_spec(Q, r, shape);
        perturb_form(spec, r);
        CHECK_FALSE(validate_form(spec).pass());
    }
}
