#include "altkron/plucker.hpp"

#include "altkron/linalg.hpp"
#include "altkron/random.hpp"

namespace altkron {

namespace {

MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }
bool poly_zero(const MultiPoly& p) { return p.is_zero(); }

}  // namespace

Check check_plucker(const PolyFamily& fam, PluckerConvention conv, Exec exec) {
    return check_plucker(fam, poly_mul, poly_zero, conv, exec);
}

std::vector<std::string> grassmann_variables(std::size_t n) {
    std::vector<std::string> vars;
    for (std::size_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) vars.push_back("y" + std::to_string(i));
    return vars;
}

PolyFamily grassmann_alphas(std::size_t n, const Field& f) {
    if (n < 2) throw std::invalid_argument("grassmann_alphas needs n >= 2");
    const auto vars = grassmann_variables(n);
    auto x = [&](std::size_t i) { return MultiPoly::variable(f, vars, "x" + std::to_string(i)); };
    auto y = [&](std::size_t i) { return MultiPoly::variable(f, vars, "y" + std::to_string(i)); };
    PolyFamily fam = make_family(n, MultiPoly(f, vars));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) fam.stored(i, j) = x(i) * y(j) - x(j) * y(i);
    return fam;
}

PolyFamily difference_family(const std::vector<MultiPoly>& a) {
    if (a.empty()) throw std::invalid_argument("difference_family needs at least one element");
    const std::size_t n = a.size();
    PolyFamily fam = make_family(n, MultiPoly(a[0].field(), a[0].variables()));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) fam.stored(i, j) = poly_arith(PolyOp::sub, a[i - 1], a[j - 1]);
    return fam;
}

PolyFamily difference_family(const Field& f, const std::vector<Scalar>& a) {
    std::vector<MultiPoly> polys;
    for (const auto& s : a) polys.push_back(MultiPoly::constant(f, {}, s));
    return difference_family(polys);
}

Check check_pivot_relation(const PolyFamily& fam, Exec exec) {
    const std::size_t n = fam.n;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 3; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    Check c{"pivot_relation", true, {}, {}, std::nullopt};
    auto bad = first_failure(pairs.size(), [&](std::size_t t) {
        const auto [i, j] = pairs[t];
        MultiPoly s = fam.at(1, 2) * fam.at(i, j) + fam.at(1, i) * fam.at(j, 2) + fam.at(1, j) * fam.at(2, i);
        return !s.is_zero();
    }, exec);
    if (bad) {
        c.pass = false;
        c.witness = {pairs[*bad].first, pairs[*bad].second};
        c.detail = "fails for (i,j) = (" + std::to_string(c.witness[0]) + "," + std::to_string(c.witness[1]) + ")";
    }
    return c;
}

namespace {

std::vector<std::vector<MultiPoly>> grassmann_jacobian(std::size_t n, const Field& f) {
    const PolyFamily fam = grassmann_alphas(n, f);
    std::vector<MultiPoly> funcs;
    for (std::size_t j = 2; j <= n; ++j) funcs.push_back(fam.at(1, j));
    for (std::size_t j = 3; j <= n; ++j) funcs.push_back(fam.at(2, j));
    const std::size_t nvars = 2 * n;
    std::vector<std::vector<MultiPoly>> jac;
    for (const auto& g : funcs) {
        std::vector<MultiPoly> row;
        for (std::size_t v = 0; v < nvars; ++v) row.push_back(g.derivative(v));
        jac.push_back(std::move(row));
    }
    return jac;
}

std::size_t rank_at(const std::vector<std::vector<MultiPoly>>& jac, const std::vector<std::string>& vars,
                    const std::vector<Scalar>& coords, const Field& f) {
    if (coords.size() != vars.size()) throw std::invalid_argument("evaluation point has the wrong length");
    std::map<std::string, Scalar> point;
    for (std::size_t v = 0; v < vars.size(); ++v) point.emplace(vars[v], coords[v]);
    Matrix m(f, jac.size(), vars.size());
    for (std::size_t r = 0; r < jac.size(); ++r)
        for (std::size_t c = 0; c < vars.size(); ++c) m.at(r, c) = poly_eval(jac[r][c], point);
    return rank(m);
}

void require_independence_args(std::size_t n, const Field& f) {
    if (n < 3) throw std::invalid_argument("independence_check needs n >= 3");
    if (!f.is_rational())
        throw std::domain_error("the Jacobian criterion is only sound in characteristic 0; refusing over " +
                                f.describe());
}

}  // namespace

std::size_t jacobian_rank(std::size_t n, const std::vector<Scalar>& point, const Field& f) {
    require_independence_args(n, f);
    return rank_at(grassmann_jacobian(n, f), grassmann_variables(n), point, f);
}

IndependenceReport independence_check(std::size_t n, std::size_t trials, std::uint64_t seed, const Field& f) {
    require_independence_args(n, f);
    const auto jac = grassmann_jacobian(n, f);
    const auto vars = grassmann_variables(n);

    IndependenceReport rep;
    rep.n = n;
    rep.expected_rank = 2 * n - 3;
    rep.seed = seed;
    for (std::size_t t = 0; t < trials && !rep.certified; ++t) {
        Rng rng = Rng::derive(seed, t);
        std::vector<Scalar> coords;
        for (std::size_t v = 0; v < vars.size(); ++v) coords.push_back(random_scalar(f, rng));
        ++rep.trials;
        const std::size_t rk = rank_at(jac, vars, coords, f);
        if (rk == 0) {
            ++rep.discarded;
            continue;
        }
        rep.max_rank = std::max(rep.max_rank, rk);
        if (rk == rep.expected_rank) {
            rep.certified = true;
            rep.point = coords;
        }
    }
    return rep;
}

}  // namespace altkron
