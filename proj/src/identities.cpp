#include "altkron/identities.hpp"

#include "altkron/random.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace altkron {

namespace {

struct Ops {
    const AlgebraTable& a;
    Element m(const Element& x, const Element& y) const { return mul(a, x, y); }
    Element as(const Element& x, const Element& y, const Element& z) const { return associator(a, x, y, z); }
    Element cm(const Element& x, const Element& y) const { return commutator(a, x, y); }
    Element jo(const Element& x, const Element& y) const { return jordan(a, x, y); }
    Element k(std::int64_t c, const Element& x) const { return scale(a.field().from_int(c), x); }
};

using Components = std::vector<Element>;

std::vector<IdentitySpec> make_specs() {
    std::vector<IdentitySpec> s;
    // (xy)(zx) = (x(yz))x
    s.push_back({"moufang_central", {"x", "y", "z"}, {2, 1, 1}, [](const AlgebraTable& a, const std::vector<Element>& v) {
                     Ops o{a};
                     const auto &x = v[0], &y = v[1], &z = v[2];
                     return Components{o.m(o.m(x, y), o.m(z, x)) - o.m(o.m(x, o.m(y, z)), x)};
                 }});
    // [x,yz] = [x,y]z + y[x,z] - 3(x,y,z)
    s.push_back({"commutator_derivation", {"x", "y", "z"}, {1, 1, 1}, [](const AlgebraTable& a, const std::vector<Element>& v) {
                     Ops o{a};
                     const auto &x = v[0], &y = v[1], &z = v[2];
                     return Components{o.cm(x, o.m(y, z)) - o.m(o.cm(x, y), z) - o.m(y, o.cm(x, z)) + o.k(3, o.as(x, y, z))};
                 }});
    // (xy,z,t) = x(y,z,t) + (x,z,t)y - (x,y,[z,t])
    s.push_back({"product_associator", {"x", "y", "z", "t"}, {1, 1, 1, 1}, [](const AlgebraTable& a, const std::vector<Element>& v) {
                     Ops o{a};
                     const auto &x = v[0], &y = v[1], &z = v[2], &t = v[3];
                     return Components{o.as(o.m(x, y), z, t) - o.m(x, o.as(y, z, t)) - o.m(o.as(x, z, t), y) +
                                       o.as(x, y, o.cm(z, t))};
                 }});
    // 2[(x,y,z),t] = ([x,y],z,t) + ([y,z],x,t) + ([z,x],y,t)
    s.push_back({"commutator_associator", {"x", "y", "z", "t"}, {1, 1, 1, 1}, [](const AlgebraTable& a, const std::vector<Element>& v) {
                     Ops o{a};
                     const auto &x = v[0], &y = v[1], &z = v[2], &t = v[3];
                     return Components{o.k(2, o.cm(o.as(x, y, z), t)) - o.as(o.cm(x, y), z, t) -
                                       o.as(o.cm(y, z), x, t) - o.as(o.cm(z, x), y, t)};
                 }});
    // [x,y](x,y,z) = (x,y,(x,y,z)) = -(x,y,z)[x,y]
    s.push_back({"commutator_times_associator", {"x", "y", "z"}, {2, 2, 1}, [](const AlgebraTable& a, const std::vector<Element>& v) {
                     Ops o{a};
                     const auto &x = v[0], &y = v[1], &z = v[2];
                     Element xyz = o.as(x, y, z);
                     Element c = o.cm(x, y);
                     Element inner = o.as(x, y, xyz);
                     return Components{o.m(c, xyz) - inner, inner + o.m(xyz, c)};
                 }});
    // ((z,w,t),x,y) = ((z,x,y),w,t) + (z,(w,x,y),t) + (z,w,(t,x,y))
    //                 - [w,(z,t,[x,y])] + ([z,t],w,[x,y])
    s.push_back({"nested_associator", {"z", "w", "t", "x", "y"}, {1, 1, 1, 1, 1},
                 [](const AlgebraTable& a, const std::vector<Element>& v) {
                     Ops o{a};
                     const auto &z = v[0], &w = v[1], &t = v[2], &x = v[3], &y = v[4];
                     Element xy = o.cm(x, y);
                     return Components{o.as(o.as(z, w, t), x, y) - o.as(o.as(z, x, y), w, t) -
                                       o.as(z, o.as(w, x, y), t) - o.as(z, w, o.as(t, x, y)) +
                                       o.cm(w, o.as(z, t, xy)) - o.as(o.cm(z, t), w, xy)};
                 }});
    // ([x,y],y,z) = [y,(x,y,z)]
    s.push_back({"commutator_in_associator", {"x", "y", "z"}, {1, 2, 1}, [](const AlgebraTable& a, const std::vector<Element>& v) {
                     Ops o{a};
                     const auto &x = v[0], &y = v[1], &z = v[2];
                     return Components{o.as(o.cm(x, y), y, z) - o.cm(y, o.as(x, y, z))};
                 }});
    // (x o z)y - x(zy) - z(xy) = 0
    s.push_back({"acirc_left", {"x", "z", "y"}, {1, 1, 1}, [](const AlgebraTable& a, const std::vector<Element>& v) {
                     Ops o{a};
                     const auto &x = v[0], &z = v[1], &y = v[2];
                     return Components{o.m(o.jo(x, z), y) - o.m(x, o.m(z, y)) - o.m(z, o.m(x, y))};
                 }});
    // (xy)z + (xz)y - x(y o z) = 0
    s.push_back({"acirc_right", {"x", "y", "z"}, {1, 1, 1}, [](const AlgebraTable& a, const std::vector<Element>& v) {
                     Ops o{a};
                     const auto &x = v[0], &y = v[1], &z = v[2];
                     return Components{o.m(o.m(x, y), z) + o.m(o.m(x, z), y) - o.m(x, o.jo(y, z))};
                 }});
    return s;
}

const std::vector<IdentitySpec>& specs() {
    static const std::vector<IdentitySpec> s = make_specs();
    return s;
}

bool any_nonzero(const Components& c) {
    for (const auto& e : c)
        if (!is_zero(e)) return true;
    return false;
}

/// Multilinear part of `spec` evaluated at fresh basis elements.
Components linearised_value(const AlgebraTable& a, const IdentitySpec& spec, const std::vector<Element>& basis,
                            const std::vector<std::size_t>& fresh) {
    const std::size_t nv = spec.degrees.size();
    std::vector<std::uint32_t> masks(nv, 1);
    std::vector<std::size_t> offset(nv, 0);
    for (std::size_t v = 1; v < nv; ++v) offset[v] = offset[v - 1] + static_cast<std::size_t>(spec.degrees[v - 1]);
    Components total;
    for (;;) {
        std::vector<Element> args;
        args.reserve(nv);
        int sign = 1;
        for (std::size_t v = 0; v < nv; ++v) {
            const int d = spec.degrees[v];
            Element arg = a.zero();
            for (int i = 0; i < d; ++i)
                if (masks[v] & (1u << i)) arg = arg + basis[fresh[offset[v] + static_cast<std::size_t>(i)]];
            if ((d - std::popcount(masks[v])) % 2 != 0) sign = -sign;
            args.push_back(std::move(arg));
        }
        Components val = spec.evaluate(a, args);
        if (total.empty()) {
            total.reserve(val.size());
            for (auto& e : val) total.push_back(sign > 0 ? std::move(e) : -e);
        } else {
            for (std::size_t c = 0; c < val.size(); ++c) total[c] = sign > 0 ? total[c] + val[c] : total[c] - val[c];
        }
        // Advance the odometer over non-empty subsets of each group.
        std::size_t v = 0;
        for (; v < nv; ++v) {
            const std::uint32_t limit = (1u << spec.degrees[v]);
            if (++masks[v] < limit) break;
            masks[v] = 1;
        }
        if (v == nv) break;
    }
    return total;
}

}  // namespace

Check check_alternative(const AlgebraTable& a, Exec exec) {
    const std::size_t n = a.dim();
    const std::size_t pairs = n * n;
    const std::size_t total = pairs + n * n * n;

    // Returns the failing criterion name, empty if all vanish.
    auto evaluate = [&](std::size_t idx) -> std::pair<std::string, std::vector<std::size_t>> {
        if (idx < pairs) {
            const std::size_t i = idx / n, k = idx % n;
            if (!is_zero(basis_associator(a, i, i, k))) return {"(b_i,b_i,b_k) != 0", {i, i, k}};
            if (!is_zero(basis_associator(a, i, k, k))) return {"(b_i,b_k,b_k) != 0", {i, k, k}};
            return {};
        }
        idx -= pairs;
        const std::size_t i = idx / (n * n), j = (idx / n) % n, k = idx % n;
        Element ijk = basis_associator(a, i, j, k);
        if (i < j && !is_zero(ijk + basis_associator(a, j, i, k)))
            return {"(b_i,b_j,b_k) + (b_j,b_i,b_k) != 0", {i, j, k}};
        if (j < k && !is_zero(ijk + basis_associator(a, i, k, j)))
            return {"(b_i,b_j,b_k) + (b_i,b_k,b_j) != 0", {i, j, k}};
        return {};
    };

    Check c{"alternative", true, {}, {}, std::nullopt};
    auto first = first_failure(total, [&](std::size_t idx) { return !evaluate(idx).first.empty(); }, exec);
    if (first) {
        auto [what, witness] = evaluate(*first);
        c.pass = false;
        c.witness = witness;
        c.detail = what;
    }
    return c;
}

Identity parse_identity(const std::string& name) {
    static const std::map<std::string, Identity> short_labels{
        {"e15", Identity::commutator_derivation}, {"e16", Identity::product_associator},
        {"e17", Identity::commutator_associator}, {"e18", Identity::commutator_times_associator},
        {"e19", Identity::nested_associator},     {"e21", Identity::commutator_in_associator}};
    for (Identity id : all_identities())
        if (identity_name(id) == name) return id;
    auto it = short_labels.find(name);
    if (it == short_labels.end()) throw std::invalid_argument("unknown identity '" + name + "'");
    return it->second;
}

std::string identity_name(Identity id) { return identity_spec(id).name; }

std::vector<Identity> all_identities() {
    return {Identity::moufang_central,
            Identity::commutator_derivation,
            Identity::product_associator,
            Identity::commutator_associator,
            Identity::commutator_times_associator,
            Identity::nested_associator,
            Identity::commutator_in_associator,
            Identity::acirc_left,
            Identity::acirc_right};
}

const IdentitySpec& identity_spec(Identity id) { return specs().at(static_cast<std::size_t>(id)); }

Check check_identity(const AlgebraTable& a, Identity id, const IdentityMode& mode, Exec exec) {
    const auto p = a.field().characteristic();
    if ((id == Identity::commutator_derivation || id == Identity::commutator_associator || id == Identity::commutator_times_associator) && (p == 2 || p == 3))
        throw std::domain_error(identity_name(id) + " involves the coefficients 2 or 3 and is not checked over " +
                                a.field().describe());
    return check_identity(a, identity_spec(id), mode, exec);
}

Check check_identity(const AlgebraTable& a, const IdentitySpec& spec, const IdentityMode& mode, Exec exec) {
    Check c{spec.name, true, {}, {}, std::nullopt};
    const std::size_t n = a.dim();

    if (mode.kind == IdentityMode::Kind::random) {
        c.seed = mode.seed;
        auto sample = [&](std::size_t trial) {
            Rng rng = Rng::derive(mode.seed, trial);
            std::vector<Element> args;
            for (std::size_t v = 0; v < spec.degrees.size(); ++v) args.push_back(random_vec(a.field(), n, rng));
            return spec.evaluate(a, args);
        };
        auto first = first_failure(mode.samples, [&](std::size_t t) { return any_nonzero(sample(t)); }, exec);
        if (first) {
            c.pass = false;
            c.witness = {*first};
            c.detail = "random trial " + std::to_string(*first) + " gives a nonzero value";
        }
        return c;
    }

    std::vector<Element> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back(a.basis(i));
    std::size_t fresh_count = 0;
    for (int d : spec.degrees) fresh_count += static_cast<std::size_t>(d);
    const std::vector<std::size_t> radices(fresh_count, n);

    // The linearisation is symmetric within each group of fresh variables,
    // so only non-decreasing index runs inside a group are visited.
    auto canonical = [&](const std::vector<std::size_t>& t) {
        std::size_t pos = 0;
        for (int d : spec.degrees) {
            for (int i = 1; i < d; ++i)
                if (t[pos + static_cast<std::size_t>(i) - 1] > t[pos + static_cast<std::size_t>(i)]) return false;
            pos += static_cast<std::size_t>(d);
        }
        return true;
    };
    auto fails = [&](std::size_t idx) {
        auto t = decode_tuple(idx, radices);
        if (!canonical(t)) return false;
        return any_nonzero(linearised_value(a, spec, basis, t));
    };
    auto first = first_failure(tuple_count(radices), fails, exec);
    if (first) {
        c.pass = false;
        c.witness = decode_tuple(*first, radices);
        auto value = linearised_value(a, spec, basis, c.witness);
        for (std::size_t k = 0; k < value.size(); ++k)
            if (!is_zero(value[k])) {
                c.detail = "linearised component " + std::to_string(k) + " nonzero on basis tuple";
                break;
            }
    }
    return c;
}

}  // namespace altkron
