#include "altkron/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace altkron {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da < db;
    // Among equal degrees, x1 > x2 > ...: a is smaller when its first
    // differing exponent is smaller.
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly::MultiPoly(Field field, std::vector<std::string> variables)
    : field_(field), vars_(std::move(variables)) {}

MultiPoly MultiPoly::constant(Field field, std::vector<std::string> variables, const Scalar& c) {
    MultiPoly p(field, std::move(variables));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(Field field, std::vector<std::string> variables, const std::string& name) {
    auto it = std::find(variables.begin(), variables.end(), name);
    if (it == variables.end()) throw std::invalid_argument("unknown variable '" + name + "'");
    Exponents e(variables.size(), 0);
    e[static_cast<std::size_t>(it - variables.begin())] = 1;
    MultiPoly p(field, std::move(variables));
    p.add_term(e, field.one());
    return p;
}

void MultiPoly::add_term(const Exponents& e, const Scalar& c) {
    if (e.size() != vars_.size()) throw std::invalid_argument("exponent vector length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("polynomial variable lists differ");
    if (field_ != o.field_) throw std::invalid_argument("polynomial fields differ");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(field_, vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
    MultiPoly r(field_, vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly r(a.field_, a.vars_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    if (var >= vars_.size()) throw std::invalid_argument("derivative variable out of range");
    MultiPoly r(field_, vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        --d[var];
        r.add_term(d, c * field_.from_int(e[var]));
    }
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string coeff = c.to_string();
        bool negative = field_.is_rational() && coeff[0] == '-';
        if (negative) coeff.erase(0, 1);
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool constant = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
        bool unit_coeff = coeff == "1";
        if (!unit_coeff || constant) os << coeff;
        bool need_star = !unit_coeff;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

MultiPoly poly_arith(PolyOp op, const MultiPoly& f, const MultiPoly& g) {
    switch (op) {
        case PolyOp::add: return f + g;
        case PolyOp::sub: return f - g;
        case PolyOp::mul: return f * g;
        case PolyOp::neg: return -f;
    }
    throw std::invalid_argument("unknown polynomial operation");
}

Scalar poly_eval(const MultiPoly& f, const std::map<std::string, Scalar>& point) {
    const auto& vars = f.variables();
    std::vector<Scalar> values;
    values.reserve(vars.size());
    for (const auto& v : vars) {
        auto it = point.find(v);
        if (it == point.end()) throw std::invalid_argument("variable '" + v + "' is unassigned");
        values.push_back(it->second);
    }
    Scalar total = f.field().zero();
    for (const auto& [e, c] : f.terms()) {
        Scalar term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) term *= values[i];
        total += term;
    }
    return total;
}

}  // namespace altkron
