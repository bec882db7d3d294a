#pragma once

#include "altkron/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace altkron {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec scale(const Scalar& c, const Vec& v);
/// out += c * v
void axpy(Vec& out, const Scalar& c, const Vec& v);

/// Dense row-major matrix over a Field.
class Matrix {
public:
    Matrix(Field f, std::size_t rows, std::size_t cols);
    static Matrix identity(Field f, std::size_t n);
    /// Columns given as vectors of equal length.
    static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols);
    static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Vec row(std::size_t r) const;
    Vec column(std::size_t c) const;

    /// M * v
    Vec apply(const Vec& v) const;
    Matrix transpose() const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

/// Reduced row-echelon form under the fixed pivot rule: leftmost nonzero
/// column, first eligible row, leading entry scaled to 1, elimination above
/// and below. Zero rows are dropped; rows come out ordered by pivot column.
struct Echelon {
    std::vector<Vec> rows;
    std::vector<std::size_t> pivots;
};

Echelon rref(const Field& f, std::size_t ncols, std::vector<Vec> rows);

/// Basis of {x : M x = 0}; one vector per free column with a 1 in that column.
std::vector<Vec> nullspace(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Some x with M x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);

/// Incrementally maintained reduced echelon basis. Adding a vector reduces it
/// against the current rows and, if it survives, normalises it and clears its
/// pivot column from the other rows.
class EchelonBuilder {
public:
    EchelonBuilder(Field f, std::size_t ambient);
    /// Returns true when v enlarged the span.
    bool add(Vec v);
    /// v minus its projection along the pivot columns.
    Vec reduce(Vec v) const;
    std::size_t dim() const noexcept { return rows_.size(); }
    bool full() const noexcept { return rows_.size() == ambient_; }
    Echelon finish() const;

private:
    Field field_;
    std::size_t ambient_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

/// A subspace of F^n stored as its reduced row-echelon basis.
class Subspace {
public:
    Subspace(Field f, std::size_t ambient);
    static Subspace span(const Field& f, std::size_t ambient, const std::vector<Vec>& vectors);
    static Subspace whole(const Field& f, std::size_t ambient);

    const Field& field() const noexcept { return field_; }
    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<Vec>& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(const Vec& v) const;
    /// Remainder of v after eliminating the pivot coordinates; zero iff v is in the subspace.
    Vec reduce(const Vec& v) const;
    /// Coefficients of v in the echelon basis, or nullopt if v is outside.
    std::optional<Vec> coordinates(const Vec& v) const;
    bool is_subspace_of(const Subspace& o) const;

    friend Subspace operator+(const Subspace& a, const Subspace& b);
    friend Subspace intersect(const Subspace& a, const Subspace& b);
    friend bool operator==(const Subspace& a, const Subspace& b);

    /// Standard basis indices not used as pivots: a canonical complement.
    std::vector<std::size_t> complement_indices() const;

private:
    Field field_;
    std::size_t ambient_;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace altkron
