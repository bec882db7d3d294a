#include "doctest.h"

#include "altkron/errors.hpp"
#include "altkron/poly.hpp"
#include "altkron/random.hpp"

#include <algorithm>
#include <map>

using namespace altkron;

namespace {

const Field Q = Field::rational();

std::vector<std::string> vars4() { return {"x1", "x2", "y1", "y2"}; }

MultiPoly var(const std::vector<std::string>& vs, const std::string& name) { return MultiPoly::variable(Q, vs, name); }

// Naive expansion over products of named variables; monomials are sorted
// name lists. Serves as an oracle independent of MultiPoly.
using NaiveTerms = std::map<std::vector<std::string>, long>;

NaiveTerms naive_mul(const NaiveTerms& a, const NaiveTerms& b) {
    NaiveTerms out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            auto m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            std::sort(m.begin(), m.end());
            out[m] += ca * cb;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

NaiveTerms to_naive(const MultiPoly& p) {
    NaiveTerms out;
    for (const auto& [e, c] : p.terms()) {
        std::vector<std::string> m;
        for (std::size_t v = 0; v < e.size(); ++v)
            for (std::uint32_t k = 0; k < e[v]; ++k) m.push_back(p.variables()[v]);
        std::sort(m.begin(), m.end());
        out[m] = c.rational_value().get_num().get_si();
    }
    return out;
}

MultiPoly random_poly(const Field& f, const std::vector<std::string>& vs, Rng& rng) {
    MultiPoly p(f, vs);
    const std::size_t terms = 1 + rng.below(4);
    for (std::size_t t = 0; t < terms; ++t) {
        Exponents e(vs.size());
        for (auto& x : e) x = static_cast<std::uint32_t>(rng.below(3));
        p.add_term(e, random_scalar(f, rng));
    }
    return p;
}

}  // namespace

TEST_CASE("rational scalars are kept in lowest terms") {
    CHECK(Q.parse("4/6").to_string() == "2/3");
    CHECK(Q.parse("-2/5") + Q.parse("2/5") == Q.zero());
    CHECK(Q.parse(" 3 ").to_string() == "3");
    CHECK_THROWS_AS(Q.parse("1/0"), InputError);
    CHECK_THROWS_AS(Q.parse("abc"), InputError);
    CHECK_THROWS_AS(Q.zero().inverse(), std::domain_error);
}

TEST_CASE("prime field scalars") {
    const Field f5 = Field::prime(5);
    CHECK(f5.parse("1/2").residue_value() == 3);
    CHECK(f5.from_int(-1).residue_value() == 4);
    CHECK((f5.from_int(3) * f5.from_int(4)).residue_value() == 2);
    CHECK(f5.from_int(2).inverse().residue_value() == 3);
    CHECK_THROWS_AS(Field::prime(6), InputError);
    CHECK_THROWS_AS(f5.parse("1/5"), InputError);
    CHECK_THROWS_AS(f5.from_rational(mpq_class(1, 5)), std::domain_error);
    CHECK_THROWS_AS(f5.one() + Q.one(), std::logic_error);
}

TEST_CASE("field axioms on random triples") {
    for (const Field& f : {Q, Field::prime(7), Field::prime(2)}) {
        Rng rng(11);
        for (int t = 0; t < 200; ++t) {
            const Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a - a == f.zero());
            if (!a.is_zero()) CHECK(a * a.inverse() == f.one());
            Scalar acc = c;
            acc.add_product(a, b);
            CHECK(acc == c + a * b);
        }
    }
}

TEST_CASE("poly_arith examples") {
    const auto vs = vars4();
    const MultiPoly x1 = var(vs, "x1"), y1 = var(vs, "y1");
    const MultiPoly lhs = poly_arith(PolyOp::mul, x1 + y1, x1 - y1);
    CHECK(lhs == x1 * x1 - y1 * y1);
    CHECK(lhs.term_count() == 2);

    const MultiPoly zero(Q, vs);
    CHECK(poly_arith(PolyOp::add, lhs, zero) == lhs);
    CHECK(poly_arith(PolyOp::neg, lhs, zero) == -lhs);
    CHECK(poly_arith(PolyOp::sub, lhs, lhs).terms().empty());
}

TEST_CASE("product of two 2x2 minors matches an independent expansion") {
    const std::vector<std::string> vs{"x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4"};
    auto v = [&](const char* n) { return var(vs, n); };
    const MultiPoly m12 = v("x1") * v("y2") - v("x2") * v("y1");
    const MultiPoly m34 = v("x3") * v("y4") - v("x4") * v("y3");
    const MultiPoly prod = poly_arith(PolyOp::mul, m12, m34);

    const NaiveTerms a{{{"x1", "y2"}, 1}, {{"x2", "y1"}, -1}};
    const NaiveTerms b{{{"x3", "y4"}, 1}, {{"x4", "y3"}, -1}};
    const NaiveTerms oracle = naive_mul(a, b);
    CHECK(to_naive(prod) == oracle);
    // Four distinct monomials x_i x_k y_j y_l survive; nothing cancels.
    CHECK(prod.term_count() == oracle.size());
    CHECK(prod.term_count() == 4);
}

TEST_CASE("poly_eval examples") {
    const auto vs = vars4();
    const MultiPoly det = var(vs, "x1") * var(vs, "y2") - var(vs, "x2") * var(vs, "y1");
    const std::map<std::string, Scalar> pt{
        {"x1", Q.from_int(1)}, {"x2", Q.from_int(2)}, {"y1", Q.from_int(3)}, {"y2", Q.from_int(4)}};
    CHECK(poly_eval(det, pt) == Q.from_int(1 * 4 - 2 * 3));
    CHECK(poly_eval(det, pt) == Q.from_int(-2));
    CHECK(poly_eval(MultiPoly::constant(Q, vs, Q.from_int(5)), pt) == Q.from_int(5));
    CHECK(poly_eval(MultiPoly(Q, vs), pt) == Q.zero());
    CHECK_THROWS_AS(poly_eval(det, {{"x1", Q.one()}}), std::invalid_argument);
}

TEST_CASE("poly printing and derivatives") {
    const auto vs = vars4();
    const MultiPoly det = var(vs, "x1") * var(vs, "y2") - var(vs, "x2") * var(vs, "y1");
    CHECK(det.to_string() == "x1*y2 - x2*y1");
    CHECK(det.derivative(0) == var(vs, "y2"));
    CHECK(det.derivative(2) == -var(vs, "x2"));
}

TEST_CASE("evaluation is a ring homomorphism on random polynomials") {
    const std::vector<std::string> vs{"a", "b", "c"};
    for (const Field& f : {Q, Field::prime(5)}) {
        Rng rng(3);
        for (int t = 0; t < 100; ++t) {
            const MultiPoly p = random_poly(f, vs, rng), q = random_poly(f, vs, rng);
            std::map<std::string, Scalar> pt;
            for (const auto& v : vs) pt.emplace(v, random_scalar(f, rng));
            CHECK(poly_eval(p * q, pt) == poly_eval(p, pt) * poly_eval(q, pt));
            CHECK(poly_eval(p + q, pt) == poly_eval(p, pt) + poly_eval(q, pt));
            CHECK((p - p).terms().empty());
        }
    }
}

TEST_CASE("mixing variable lists is rejected") {
    const MultiPoly a = MultiPoly::variable(Q, {"x"}, "x");
    const MultiPoly b = MultiPoly::variable(Q, {"y"}, "y");
    CHECK_THROWS_AS(poly_arith(PolyOp::add, a, b), std::invalid_argument);
    CHECK_THROWS_AS(MultiPoly::variable(Q, {"x"}, "z"), std::invalid_argument);
}
