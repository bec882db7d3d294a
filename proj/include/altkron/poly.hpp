#pragma once

#include "altkron/scalar.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace altkron {

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order on exponent vectors (total degree first, then
/// lexicographic by the declared variable order).
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over a Field. Zero coefficients are never
/// stored, so equal polynomials have identical term maps.
class MultiPoly {
public:
    using Terms = std::map<Exponents, Scalar, GrlexLess>;

    MultiPoly(Field field, std::vector<std::string> variables);

    static MultiPoly constant(Field field, std::vector<std::string> variables, const Scalar& c);
    /// Throws std::invalid_argument if name is not among variables.
    static MultiPoly variable(Field field, std::vector<std::string> variables, const std::string& name);

    const Field& field() const noexcept { return field_; }
    const std::vector<std::string>& variables() const noexcept { return vars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    /// Adds c * x^e; drops the term if the coefficient cancels.
    void add_term(const Exponents& e, const Scalar& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator-() const;
    MultiPoly scaled(const Scalar& c) const;

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Partial derivative with respect to variable index `var`.
    MultiPoly derivative(std::size_t var) const;

    /// Terms printed in descending grlex order, e.g. "x1*y2 - x2*y1".
    std::string to_string() const;

private:
    void check_compatible(const MultiPoly& o) const;

    Field field_;
    std::vector<std::string> vars_;
    Terms terms_;
};

enum class PolyOp { add, sub, mul, neg };

/// neg ignores g. Throws std::invalid_argument on variable-list or field mismatch.
MultiPoly poly_arith(PolyOp op, const MultiPoly& f, const MultiPoly& g);

/// Throws std::invalid_argument when a variable of f is unassigned.
Scalar poly_eval(const MultiPoly& f, const std::map<std::string, Scalar>& point);

}  // namespace altkron
