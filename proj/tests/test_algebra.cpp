#include "doctest.h"

#include "altkron/constructions.hpp"
#include "altkron/errors.hpp"
#include "altkron/fixtures.hpp"
#include "altkron/identities.hpp"
#include "altkron/specgen.hpp"

#include <array>

using namespace altkron;

namespace {

const Field Q = Field::rational();

Element named(const AlgebraTable& a, const std::string& name) {
    auto i = a.find_basis(name);
    REQUIRE(i.has_value());
    return a.basis(*i);
}

// 2x2 rational matrices, row-major.
using M2 = std::array<mpq_class, 4>;

M2 mm(const M2& x, const M2& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}
M2 madd(const M2& x, const M2& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]}; }
M2 mstar(const M2& x) { return {x[3], -x[1], -x[2], x[0]}; }

// (M + vN)(M' + vN') = (MM' + N'N*) + v(M*N' + M'N), the doubling with
// parameter 1 over Q, written out on explicit matrices.
std::pair<M2, M2> oracle_product(const std::pair<M2, M2>& x, const std::pair<M2, M2>& y) {
    const auto& [m, n] = x;
    const auto& [mp, np] = y;
    return {madd(mm(m, mp), mm(np, mstar(n))), madd(mm(mstar(m), np), mm(mp, n))};
}

std::pair<M2, M2> octonion_basis(std::size_t i) {
    M2 z{0, 0, 0, 0}, u{0, 0, 0, 0};
    u[i % 4] = 1;
    return i < 4 ? std::pair{u, z} : std::pair{z, u};
}

Vec flatten(const std::pair<M2, M2>& x) {
    Vec v;
    for (const auto& q : x.first) v.push_back(Q.from_rational(q));
    for (const auto& q : x.second) v.push_back(Q.from_rational(q));
    return v;
}

Subspace random_subspace(const Field& f, std::size_t n, std::size_t gens, Rng& rng) {
    std::vector<Vec> vs;
    for (std::size_t k = 0; k < gens; ++k) vs.push_back(random_vec(f, n, rng));
    return Subspace::span(f, n, vs);
}

Element random_element(const AlgebraTable& a, Rng& rng) { return random_vec(a.field(), a.dim(), rng); }

}  // namespace

TEST_CASE("matrix algebra products") {
    const AlgebraTable m = matrix_algebra2(Q);
    CHECK(mul(m, named(m, "e12"), named(m, "e21")) == named(m, "e11"));
    Rng rng(5);
    const Element x = random_element(m, rng);
    CHECK(mul(m, m.unit(), x) == x);
    CHECK(mul(m, x, m.unit()) == x);
    CHECK(is_zero(associator(m, x, random_element(m, rng), random_element(m, rng))));
    CHECK(commutator(m, named(m, "e11"), named(m, "e12")) == named(m, "e12"));
}

TEST_CASE("octonion table agrees with the explicit doubling formula") {
    const Construction o = octonion(CoeffRing(ground_algebra(Q)));
    REQUIRE(o.table.dim() == 8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            CHECK(mul(o.table, o.table.basis(i), o.table.basis(j)) ==
                  flatten(oracle_product(octonion_basis(i), octonion_basis(j))));
    // (v e11)(v e22) = e22 e11* = e22 e22 = e22.
    CHECK(mul(o.table, o.table.basis(4), o.table.basis(7)) == o.table.basis(3));
}

TEST_CASE("octonions are not associative") {
    const Construction o = octonion(CoeffRing(ground_algebra(Q)));
    const Element v = o.table.basis(4) + o.table.basis(7);
    const Element a = associator(o.table, o.table.basis(1), o.table.basis(2), v);
    CHECK_FALSE(is_zero(a));
    // Oracle: ((e12 e21) v) - (e12 (e21 v)) from the explicit formula.
    const std::pair<M2, M2> ov{M2{0, 0, 0, 0}, M2{1, 0, 0, 1}};
    const auto lhs = oracle_product(oracle_product(octonion_basis(1), octonion_basis(2)), ov);
    const auto rhs = oracle_product(octonion_basis(1), oracle_product(octonion_basis(2), ov));
    CHECK(a == flatten(lhs) - flatten(rhs));
}

TEST_CASE("check_alternative on basic algebras") {
    CHECK(check_alternative(matrix_algebra2(Q)).pass);
    CHECK(check_alternative(octonion(CoeffRing(ground_algebra(Q))).table).pass);
    Rng rng(1);
    const Check c = check_alternative(random_table(Q, 3, rng));
    CHECK_FALSE(c.pass);
    CHECK(c.witness.size() == 3);
    CHECK_FALSE(c.detail.empty());
}

TEST_CASE("identity checks on basic algebras") {
    const AlgebraTable o = octonion(CoeffRing(ground_algebra(Q))).table;
    CHECK(check_identity(o, parse_identity("e15"), IdentityMode::basis()).pass);
    CHECK(check_identity(matrix_algebra2(Q), Identity::moufang_central, IdentityMode::basis()).pass);

    Rng rng(21);
    const AlgebraTable r = random_table(Q, 3, rng);
    const Check c = check_identity(r, parse_identity("e21"), IdentityMode::basis());
    CHECK_FALSE(c.pass);
    // Confirm by direct evaluation of ([x,y],y,z) - [y,(x,y,z)] at some triple
    // of basis elements and pairwise sums.
    std::vector<Element> probes;
    for (std::size_t i = 0; i < 3; ++i) probes.push_back(r.basis(i));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) probes.push_back(r.basis(i) + r.basis(j));
    bool found = false;
    for (const auto& x : probes)
        for (const auto& y : probes)
            for (const auto& z : probes) {
                const Element val = associator(r, commutator(r, x, y), y, z) - commutator(r, y, associator(r, x, y, z));
                found = found || !is_zero(val);
            }
    CHECK(found);
}

TEST_CASE("centralizers, nucleus and centers") {
    const AlgebraTable m = matrix_algebra2(Q);
    const Subspace all = Subspace::whole(Q, 4);
    const Subspace c = centralizer(m, all, all);
    CHECK(c == Subspace::span(Q, 4, {m.unit()}));
    CHECK(centralizer(m, Subspace(Q, 4), all) == all);
    CHECK(nucleus(m) == all);

    const Construction o = octonion(CoeffRing(ground_algebra(Q)));
    CHECK(center(o.table) == Subspace::span(Q, 8, {o.table.unit()}));
    // Centralizer of H inside the associative part (A, H, H)-annihilator.
    const Subspace h = Subspace::span(Q, 8, o.units.as_list());
    const Subspace even = associator_annihilator(o.table, Subspace::whole(Q, 8), h, h);
    CHECK(even.dim() == 4);
    CHECK(centralizer(o.table, h, even).dim() == 1);

    const AlgebraTable t3 = truncated_poly(Q, 3);
    CHECK(comm_center(t3) == Subspace::whole(Q, 3));
}

TEST_CASE("center equals nucleus intersected with the commutative center") {
    Rng rng(8);
    std::vector<AlgebraTable> algebras{matrix_algebra2(Q), upper_triangular2(Q), grassmann2(Q),
                                       octonion(CoeffRing(ground_algebra(Q))).table, random_table(Q, 3, rng)};
    for (int s = 0; s < 6; ++s) {
        Rng r = Rng::derive(77, static_cast<std::uint64_t>(s));
        algebras.push_back(build_algebra(random_spec(Q, r)).table);
    }
    for (const auto& a : algebras) CHECK(center(a) == intersect(nucleus(a), comm_center(a)));
}

TEST_CASE("associator subspaces") {
    const AlgebraTable m = matrix_algebra2(Q);
    const Subspace all = Subspace::whole(Q, 4);
    CHECK(associator_subspace(m, all, all, all).dim() == 0);

    const Construction o = octonion(CoeffRing(ground_algebra(Q)));
    const Subspace a8 = Subspace::whole(Q, 8);
    const Subspace h = Subspace::span(Q, 8, o.units.as_list());
    std::vector<Vec> vpart;
    for (std::size_t i = 4; i < 8; ++i) vpart.push_back(o.table.basis(i));
    CHECK(associator_subspace(o.table, a8, h, h) == Subspace::span(Q, 8, vpart));
    CHECK(associator_subspace(o.table, a8, Subspace(Q, 8), a8).dim() == 0);
}

TEST_CASE("ideals and quotients of the Grassmann algebra") {
    const AlgebraTable g = grassmann2(Q);
    const Element top = named(g, "e1e2");
    const Subspace top_span = Subspace::span(Q, 4, {top});
    CHECK(ideal_closure(g, top_span) == top_span);
    CHECK(is_ideal(g, top_span));

    const Quotient same = quotient_algebra(g, Subspace(Q, 4));
    CHECK(same.algebra == g);

    const Subspace comm = commutator_subspace(g, Subspace::whole(Q, 4), Subspace::whole(Q, 4));
    const Subspace ideal = ideal_closure(g, comm);
    CHECK(ideal.dim() == 1);
    CHECK(ideal.contains(top));
    // [e1, e2] = 2 e1e2
    CHECK(commutator(g, named(g, "e1"), named(g, "e2")) == scale(Q.from_int(2), top));
    const Quotient q = quotient_algebra(g, ideal);
    CHECK(q.algebra.dim() == 3);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(q.projection.apply(mul(g, g.basis(i), g.basis(j))) ==
                  mul(q.algebra, q.projection.column(i), q.projection.column(j)));

    CHECK_THROWS_AS(quotient_algebra(g, Subspace::span(Q, 4, {named(g, "e1")})), PreconditionError);
}

TEST_CASE("quotient projections are multiplicative") {
    Rng rng(4);
    const AlgebraTable u = upper_triangular2(Q);
    const Subspace ideal = ideal_closure(u, Subspace::span(Q, 3, {named(u, "e12")}));
    const Quotient q = quotient_algebra(u, ideal);
    CHECK(q.algebra.dim() == 2);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(q.projection.apply(mul(u, u.basis(i), u.basis(j))) ==
                  mul(q.algebra, q.projection.column(i), q.projection.column(j)));
}

TEST_CASE("matrix unit verification") {
    const AlgebraTable m = matrix_algebra2(Q);
    const MatrixUnits e = standard_units(Q);
    CHECK(verify_matrix_units(m, e));

    MatrixUnits swapped = e;
    std::swap(swapped(0, 0), swapped(1, 1));
    CHECK_FALSE(verify_matrix_units(m, swapped));

    const Element g = named(m, "e11") + scale(Q.from_int(2), named(m, "e12")) + named(m, "e22");
    const Element ginv = named(m, "e11") - scale(Q.from_int(2), named(m, "e12")) + named(m, "e22");
    REQUIRE(mul(m, g, ginv) == m.unit());
    MatrixUnits conj;
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) conj(p, q) = mul(m, mul(m, g, e(p, q)), ginv);
    CHECK(verify_matrix_units(m, conj));
}

TEST_CASE("linearised alternativity holds on random elements") {
    std::vector<AlgebraTable> algebras{octonion(CoeffRing(truncated_poly(Q, 2))).table,
                                       octonion(CoeffRing(ground_algebra(Field::prime(5)))).table};
    for (int s = 0; s < 4; ++s) {
        Rng r = Rng::derive(19, static_cast<std::uint64_t>(s));
        algebras.push_back(build_algebra(random_spec(s % 2 ? Field::prime(5) : Q, r)).table);
    }
    Rng rng(2);
    for (const auto& a : algebras) {
        REQUIRE(check_alternative(a).pass);
        for (int t = 0; t < 10; ++t) {
            const Element x = random_element(a, rng), y = random_element(a, rng), z = random_element(a, rng);
            CHECK(is_zero(associator(a, x, x, y)));
            CHECK(is_zero(associator(a, x, y, y)));
            CHECK(is_zero(associator(a, x, y, x)));
            CHECK(is_zero(associator(a, x, y, z) + associator(a, y, x, z)));
            CHECK(is_zero(associator(a, x, y, z) + associator(a, x, z, y)));
            CHECK(is_zero(associator(a, x, y, z) + associator(a, z, y, x)));
        }
    }
}

TEST_CASE("associators of alternative algebras alternate on basis tuples") {
    const AlgebraTable o = octonion(CoeffRing(truncated_poly(Q, 2))).table;
    const std::size_t n = o.dim();
    for (std::size_t i = 0; i < n; i += 3)
        for (std::size_t j = 0; j < n; j += 2)
            for (std::size_t k = 0; k < n; ++k) {
                const Element a = basis_associator(o, i, j, k);
                CHECK(a == associator(o, o.basis(i), o.basis(j), o.basis(k)));
                CHECK(a == -basis_associator(o, j, i, k));
                CHECK(a == -basis_associator(o, i, k, j));
            }
}

TEST_CASE("subspace operations") {
    for (const Field& f : {Q, Field::prime(3)}) {
        Rng rng(6);
        for (int t = 0; t < 30; ++t) {
            const Subspace s = random_subspace(f, 6, rng.below(5), rng);
            const Subspace u = random_subspace(f, 6, rng.below(5), rng);
            CHECK(Subspace::span(f, 6, s.basis()) == s);
            const Echelon e = rref(f, 6, s.basis());
            CHECK(e.rows == s.basis());
            CHECK((s + u).dim() + intersect(s, u).dim() == s.dim() + u.dim());
            CHECK(intersect(s, u).is_subspace_of(s));
            CHECK(s.is_subspace_of(s + u));
        }
    }
}

TEST_CASE("linear algebra kernels") {
    const Matrix m = Matrix::from_rows(Q, 3, {{Q.from_int(1), Q.from_int(2), Q.from_int(3)},
                                               {Q.from_int(2), Q.from_int(4), Q.from_int(6)}});
    CHECK(rank(m) == 1);
    const auto ns = nullspace(m);
    CHECK(ns.size() == 2);
    for (const auto& v : ns) CHECK(is_zero(m.apply(v)));
    CHECK_FALSE(solve(m, {Q.one(), Q.one()}).has_value());
    const auto x = solve(m, {Q.from_int(3), Q.from_int(6)});
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == Vec{Q.from_int(3), Q.from_int(6)});

    Rng rng(9);
    const Matrix g = random_invertible(Q, 4, rng);
    const auto inv = inverse(g);
    REQUIRE(inv.has_value());
    CHECK(g * *inv == Matrix::identity(Q, 4));
    CHECK_FALSE(inverse(m.transpose() * m).has_value());
}

TEST_CASE("malformed tables are rejected") {
    CHECK_THROWS_AS(AlgebraTable(Q, {"a"}, {SparseVec{{3, Q.one()}}}), InputError);
    CHECK_THROWS_AS(AlgebraTable(Q, {"a", "b"}, {SparseVec{}}), InputError);
    // A "unit" that fails 1x = x.
    CHECK_THROWS_AS(AlgebraTable(Q, {"a"}, {SparseVec{}}, Vec{Q.one()}), InputError);
}

TEST_CASE("left division and invertibility") {
    const AlgebraTable t = truncated_poly(Q, 2);
    CHECK(is_invertible(t, t.unit()));
    CHECK_FALSE(is_invertible(t, t.basis(1)));
    CHECK_FALSE(left_divide(t, t.basis(1), t.unit()).has_value());
    const Element x = t.unit() + t.basis(1);
    const auto y = left_divide(t, x, t.unit());
    REQUIRE(y.has_value());
    CHECK(mul(t, x, *y) == t.unit());
}

TEST_CASE("serial and parallel sweeps agree") {
    for (std::size_t count : {0u, 1u, 17u, 1000u}) {
        for (std::size_t bad : {0u, 5u, 16u, 999u}) {
            auto pred = [&](std::size_t i) { return i >= bad && i % 7 == bad % 7; };
            CHECK(serial::first_failure(count, pred) == parallel::first_failure(count, pred));
        }
        auto f = [](std::size_t i) { return Vec{Q.from_int(static_cast<std::int64_t>(i * i))}; };
        CHECK(serial::map_indices(count, f) == parallel::map_indices(count, f));
    }
    Rng rng(31);
    const AlgebraTable r = random_table(Q, 4, rng);
    const Check s = check_alternative(r, Exec::serial);
    const Check p = check_alternative(r, Exec::parallel);
    CHECK(s.pass == p.pass);
    CHECK(s.witness == p.witness);
    CHECK(s.detail == p.detail);
    const AlgebraTable o = octonion(CoeffRing(ground_algebra(Q))).table;
    for (Identity id : all_identities()) {
        const Check a = check_identity(r, id, IdentityMode::basis(), Exec::serial);
        const Check b = check_identity(r, id, IdentityMode::basis(), Exec::parallel);
        CHECK(a.witness == b.witness);
        CHECK(check_identity(o, id, IdentityMode::basis(), Exec::serial).pass ==
              check_identity(o, id, IdentityMode::basis(), Exec::parallel).pass);
    }
}

TEST_CASE("tuple decoding") {
    CHECK(tuple_count({2, 3, 4}) == 24);
    CHECK(decode_tuple(0, {2, 3, 4}) == std::vector<std::size_t>{0, 0, 0});
    CHECK(decode_tuple(23, {2, 3, 4}) == std::vector<std::size_t>{1, 2, 3});
    CHECK(decode_tuple(5, {2, 3, 4}) == std::vector<std::size_t>{0, 1, 1});
}
