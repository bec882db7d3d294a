#include "altkron/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace altkron {

Vec zero_vec(const Field& f, std::size_t n) {
    // Default scalars are rational zeros and cost no allocation.
    Vec v(n);
    if (!f.is_rational())
        for (auto& x : v) x = Scalar::residue(0, f.modulus());
    return v;
}

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
    Vec v = zero_vec(f, n);
    v.at(i) = f.one();
    return v;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec operator-(const Vec& a) {
    Vec r;
    r.reserve(a.size());
    for (const auto& s : a) r.push_back(-s);
    return r;
}

Vec scale(const Scalar& c, const Vec& v) {
    Vec r = v;
    for (auto& s : r) s *= c;
    return r;
}

void axpy(Vec& out, const Scalar& c, const Vec& v) {
    if (out.size() != v.size()) throw std::invalid_argument("vector length mismatch");
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out[i].add_product(c, v[i]);
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Vec Matrix::row(std::size_t r) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::column(std::size_t c) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    Vec out = zero_vec(field_, rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero()) continue;
        for (std::size_t r = 0; r < rows_; ++r) out[r].add_product(at(r, c), v[c]);
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix m(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) m.at(i, j).add_product(aik, b.at(k, j));
        }
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

EchelonBuilder::EchelonBuilder(Field f, std::size_t ambient) : field_(f), ambient_(ambient) {}

Vec EchelonBuilder::reduce(Vec v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Scalar c = v[pivots_[k]];
        if (c.is_zero()) continue;
        axpy(v, -c, rows_[k]);
    }
    return v;
}

bool EchelonBuilder::add(Vec v) {
    if (v.size() != ambient_) throw std::invalid_argument("vector length mismatch in span");
    if (full()) return false;
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) return false;
    const Scalar inv = v[p].inverse();
    for (auto& s : v)
        if (!s.is_zero()) s *= inv;
    for (auto& row : rows_) {
        const Scalar c = row[p];
        if (!c.is_zero()) axpy(row, -c, v);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

Echelon EchelonBuilder::finish() const {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivots_[a] < pivots_[b]; });
    Echelon e;
    for (auto k : order) {
        e.rows.push_back(rows_[k]);
        e.pivots.push_back(pivots_[k]);
    }
    return e;
}

Echelon rref(const Field& f, std::size_t ncols, std::vector<Vec> rows) {
    // Textbook sweep: column by column, first row at or below the current
    // position with a nonzero entry becomes the pivot row.
    std::size_t lead_row = 0;
    Echelon e;
    for (std::size_t col = 0; col < ncols && lead_row < rows.size(); ++col) {
        std::size_t r = lead_row;
        while (r < rows.size() && rows[r][col].is_zero()) ++r;
        if (r == rows.size()) continue;
        std::swap(rows[lead_row], rows[r]);
        Vec& pivot = rows[lead_row];
        const Scalar inv = pivot[col].inverse();
        for (auto& s : pivot)
            if (!s.is_zero()) s *= inv;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == lead_row) continue;
            const Scalar c = rows[k][col];
            if (!c.is_zero()) axpy(rows[k], -c, pivot);
        }
        e.pivots.push_back(col);
        ++lead_row;
    }
    rows.resize(lead_row);
    e.rows = std::move(rows);
    (void)f;
    return e;
}

std::vector<Vec> nullspace(const Matrix& m) {
    std::vector<Vec> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    Echelon e = rref(m.field(), m.cols(), std::move(rows));
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec x = unit_vec(m.field(), m.cols(), free);
        for (std::size_t k = 0; k < e.rows.size(); ++k) x[e.pivots[k]] = -e.rows[k][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::size_t rank(const Matrix& m) {
    EchelonBuilder b(m.field(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) b.add(m.row(r));
    return b.dim();
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Vec row = m.row(r);
        row.push_back(b[r]);
        rows.push_back(std::move(row));
    }
    Echelon e = rref(m.field(), m.cols() + 1, std::move(rows));
    Vec x = zero_vec(m.field(), m.cols());
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
        if (e.pivots[k] == m.cols()) return std::nullopt;
        x[e.pivots[k]] = e.rows[k][m.cols()];
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < n; ++r) {
        Vec row = m.row(r);
        Vec id = unit_vec(m.field(), n, r);
        row.insert(row.end(), id.begin(), id.end());
        rows.push_back(std::move(row));
    }
    Echelon e = rref(m.field(), 2 * n, std::move(rows));
    if (e.rows.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(m.field(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = e.rows[r][n + c];
    return inv;
}

Subspace::Subspace(Field f, std::size_t ambient) : field_(f), ambient_(ambient) {}

Subspace Subspace::span(const Field& f, std::size_t ambient, const std::vector<Vec>& vectors) {
    EchelonBuilder b(f, ambient);
    for (const auto& v : vectors) {
        if (b.full()) break;
        b.add(v);
    }
    Echelon e = b.finish();
    Subspace s(f, ambient);
    s.basis_ = std::move(e.rows);
    s.pivots_ = std::move(e.pivots);
    return s;
}

Subspace Subspace::whole(const Field& f, std::size_t ambient) {
    Subspace s(f, ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        s.basis_.push_back(unit_vec(f, ambient, i));
        s.pivots_.push_back(i);
    }
    return s;
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector length mismatch for subspace");
    Vec r = v;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        const Scalar c = r[pivots_[k]];
        if (!c.is_zero()) axpy(r, -c, basis_[k]);
    }
    return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (!contains(v)) return std::nullopt;
    Vec c;
    c.reserve(basis_.size());
    for (auto p : pivots_) c.push_back(v[p]);
    return c;
}

bool Subspace::is_subspace_of(const Subspace& o) const {
    return std::all_of(basis_.begin(), basis_.end(), [&](const Vec& v) { return o.contains(v); });
}

Subspace operator+(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw std::invalid_argument("subspace ambient mismatch");
    std::vector<Vec> all = a.basis_;
    all.insert(all.end(), b.basis_.begin(), b.basis_.end());
    return Subspace::span(a.field_, a.ambient_, all);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw std::invalid_argument("subspace ambient mismatch");
    // Solve sum_i s_i a_i - sum_j t_j b_j = 0 and map the s-part back.
    std::vector<Vec> cols = a.basis_;
    for (const auto& v : b.basis_) cols.push_back(-v);
    if (cols.empty()) return Subspace(a.field_, a.ambient_);
    Matrix m = Matrix::from_columns(a.field_, a.ambient_, cols);
    std::vector<Vec> gens;
    for (const auto& x : nullspace(m)) {
        Vec v = zero_vec(a.field_, a.ambient_);
        for (std::size_t i = 0; i < a.basis_.size(); ++i) axpy(v, x[i], a.basis_[i]);
        gens.push_back(std::move(v));
    }
    return Subspace::span(a.field_, a.ambient_, gens);
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.field_ == b.field_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
}

std::vector<std::size_t> Subspace::complement_indices() const {
    std::vector<bool> used(ambient_, false);
    for (auto p : pivots_) used[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ambient_; ++i)
        if (!used[i]) out.push_back(i);
    return out;
}

}  // namespace altkron
