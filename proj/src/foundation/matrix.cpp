#include "ncgauge/foundation/matrix.hpp"

#include "ncgauge/foundation/errors.hpp"
#include "ncgauge/foundation/kernels.hpp"

namespace ncg {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec basis_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v.at(i) = Scalar(1);
    return v;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec operator+(const Vec& a, const Vec& b) {
    Vec r = a;
    return r += b;
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec r = a;
    return r -= b;
}

Vec operator*(const Scalar& s, const Vec& v) {
    Vec r(v.size());
    if (s.is_zero()) return r;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) r[i] = s * v[i];
    return r;
}

Vec& operator+=(Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero()) a[i] += b[i];
    return a;
}

Vec& operator-=(Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero()) a[i] -= b[i];
    return a;
}

void axpy(Vec& a, const Scalar& s, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    if (s.is_zero()) return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero()) a[i].add_product(s, b[i]);
}

Vec kron(const Vec& a, const Vec& b) {
    Vec r(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
    }
    return r;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
    return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

Matrix Matrix::column_matrix(const Vec& v) { return from_columns(v.size(), {v}); }

Vec Matrix::column(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Vec Matrix::row(std::size_t r) const {
    return Vec(a_.begin() + static_cast<long>(r * cols_), a_.begin() + static_cast<long>((r + 1) * cols_));
}

void Matrix::set_column(std::size_t c, const Vec& v) {
    if (v.size() != rows_) throw DimensionMismatch("set_column: length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

void Matrix::set_row(std::size_t r, const Vec& v) {
    if (v.size() != cols_) throw DimensionMismatch("set_row: length mismatch");
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::size_t Matrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& x : a_) n += x.is_zero() ? 0 : 1;
    return n;
}

Matrix Matrix::columns(std::size_t c0, std::size_t n) const {
    Matrix m(rows_, n);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = (*this)(r, c0 + c);
    return m;
}

Matrix Matrix::hcat(const Matrix& o) const {
    if (rows_ != o.rows_) throw DimensionMismatch("hcat: row counts differ");
    Matrix m(rows_, cols_ + o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
        for (std::size_t c = 0; c < o.cols_; ++c) m(r, cols_ + c) = o(r, c);
    }
    return m;
}

Matrix Matrix::vcat(const Matrix& o) const {
    if (cols_ != o.cols_) throw DimensionMismatch("vcat: column counts differ");
    Matrix m(rows_ + o.rows_, cols_);
    std::copy(a_.begin(), a_.end(), m.a_.begin());
    std::copy(o.a_.begin(), o.a_.end(), m.a_.begin() + static_cast<long>(a_.size()));
    return m;
}

Matrix& Matrix::operator+=(const Matrix& b) {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch("matrix sum: shapes differ");
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!b.a_[i].is_zero()) a_[i] += b.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& b) {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch("matrix difference: shapes differ");
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!b.a_[i].is_zero()) a_[i] -= b.a_[i];
    return *this;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
    Matrix r(m.rows_, m.cols_);
    for (std::size_t i = 0; i < m.a_.size(); ++i)
        if (!m.a_[i].is_zero()) r.a_[i] = s * m.a_[i];
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return kernels::matmul(a, b); }
Vec operator*(const Matrix& a, const Vec& v) { return kernels::matvec(a, v); }

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Matrix kron(const Matrix& a, const Matrix& b) { return kernels::kron(a, b); }

}  // namespace ncg
