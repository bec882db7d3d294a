#include "doctest.h"

#include "altkron/constructions.hpp"
#include "altkron/coordinatizer.hpp"
#include "altkron/errors.hpp"
#include "altkron/fixtures.hpp"
#include "altkron/io.hpp"
#include "altkron/specgen.hpp"

#include <filesystem>

using namespace altkron;

namespace {

const Field Q = Field::rational();

}  // namespace

TEST_CASE("scalars and fields round trip") {
    const Field f7 = Field::prime(7);
    CHECK(field_from_json(field_to_json(Q)) == Q);
    CHECK(field_from_json(field_to_json(f7)) == f7);
    CHECK(scalar_to_json(Q.parse("-2/6")) == Json("-1/3"));
    CHECK(scalar_from_json(Q, Json("-1/3")) == Q.parse("-1/3"));
    CHECK(scalar_from_json(f7, Json("10")) == f7.from_int(3));
    CHECK_THROWS_AS(scalar_from_json(Q, Json(3.5)), InputError);
    CHECK_THROWS_AS(field_from_json(Json("F6")), InputError);
}

TEST_CASE("sparse vectors keep only nonzero entries") {
    Vec v = zero_vec(Q, 5);
    v[1] = Q.from_int(2);
    v[4] = Q.parse("1/2");
    const Json j = sparse_to_json(v);
    CHECK(j.size() == 2);
    CHECK(sparse_from_json(Q, 5, j) == v);
    CHECK_THROWS_AS(sparse_from_json(Q, 3, j), InputError);
    CHECK_THROWS_AS(sparse_from_json(Q, 5, Json::parse(R"([[1]])")), InputError);
}

TEST_CASE("algebra tables round trip") {
    for (const AlgebraTable& a : {octonion(CoeffRing(ground_algebra(Q))).table, matrix_algebra2(Field::prime(5)),
                                  grassmann2(Q), truncated_poly(Q, 3)}) {
        const Json j = algebra_to_json(a);
        CHECK(j.at("format") == kFormatVersion);
        const AlgebraTable back = algebra_from_json(j);
        CHECK(back == a);
        CHECK(algebra_from_json(Json::parse(j.dump())) == a);
    }
}

TEST_CASE("malformed algebra files are input errors") {
    Json j = algebra_to_json(matrix_algebra2(Q));
    SUBCASE("bad index") { j["table"][0][0] = Json::parse(R"([[9, "1"]])"); }
    SUBCASE("short table") { j["table"].erase(0); }
    SUBCASE("missing field") { j.erase("field"); }
    SUBCASE("wrong format") { j["format"] = 99; }
    SUBCASE("bad scalar") { j["table"][0][0] = Json::parse(R"([[0, "x"]])"); }
    CHECK_THROWS_AS(algebra_from_json(j), InputError);
}

TEST_CASE("units and specs round trip") {
    const auto oct = octonion(CoeffRing(ground_algebra(Q)));
    const MatrixUnits u = units_from_json(units_to_json(oct.units), oct.table);
    CHECK(u.as_list() == oct.units.as_list());

    for (std::uint64_t s = 0; s < 10; ++s) {
        Rng r = Rng::derive(5, s);
        const KronSpec spec = random_spec(s % 2 ? Field::prime(5) : Q, r);
        const KronSpec back = spec_from_json(Json::parse(spec_to_json(spec).dump()));
        CHECK(back.ring.table() == spec.ring.table());
        CHECK(back.module.dim == spec.module.dim);
        CHECK(back.module.action == spec.module.action);
        CHECK(back.form == spec.form);
    }
}

TEST_CASE("Plucker families round trip") {
    const PolyFamily g = grassmann_alphas(4);
    const PolyFamily back = family_from_json(family_to_json(g));
    REQUIRE(back.n == 4);
    for (std::size_t i = 1; i <= 4; ++i)
        for (std::size_t j = 1; j <= 4; ++j) CHECK(back.at(i, j) == g.at(i, j));

    const PolyFamily d = difference_family(Q, {Q.from_int(1), Q.from_int(5), Q.parse("2/3")});
    const PolyFamily dback = family_from_json(family_to_json(d));
    CHECK(dback.at(2, 3) == d.at(2, 3));
    CHECK_THROWS_AS(family_from_json(Json::parse(R"({"format": 1, "n": 3, "entries": {"1,1": "2"}})")), InputError);
}

TEST_CASE("files and hashes") {
    const auto dir = std::filesystem::temp_directory_path() / "altkron_io_test";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "m2.json").string();
    write_json_file(path, algebra_to_json(matrix_algebra2(Q)));
    CHECK(algebra_from_json(read_json_file(path)) == matrix_algebra2(Q));
    CHECK_THROWS_AS(read_json_file((dir / "missing.json").string()), InputError);
    write_json_file((dir / "junk.json").string(), Json("x"));
    std::filesystem::remove_all(dir);

    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
    CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("coordinatize recovers random specs up to the reported isomorphism") {
    for (const Field& f : {Q, Field::prime(5)}) {
        for (std::uint64_t s = 0; s < 12; ++s) {
            Rng r = Rng::derive(31, s);
            const KronSpec spec = random_spec(f, r);
            const BuiltAlgebra built = build_algebra(spec);
            const CoordinatizationResult res = coordinatize(built.table, built.units);
            REQUIRE_MESSAGE(res.pass(), res.failed_stage << ": " << res.failure);
            CHECK(res.spec->ring.dim() == spec.ring.dim());
            CHECK(res.spec->module.dim == spec.module.dim);
            CHECK(res.rebuilt->dim() == built.table.dim());
            CHECK(iso_check(built.table, *res.rebuilt, *res.iso).pass);

            const Grading g1 = decompose(built.table, built.units);
            const Grading g2 = decompose_alternate(built.table, built.units);
            CHECK(g1.even == g2.even);
            CHECK(g1.odd == g2.odd);
        }
    }
}
