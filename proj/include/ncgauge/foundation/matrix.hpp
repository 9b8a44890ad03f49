#pragma once

#include <cstddef>
#include <vector>

#include "ncgauge/foundation/scalar.hpp"

namespace ncg {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec basis_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& v);
Vec& operator+=(Vec& a, const Vec& b);
Vec& operator-=(Vec& a, const Vec& b);
/// a += s * b
void axpy(Vec& a, const Scalar& s, const Vec& b);
/// Kronecker product of vectors, row-major: (a⊗b)[i*|b|+j] = a[i]b[j].
Vec kron(const Vec& a, const Vec& b);

/// Dense row-major matrix. Column c is the image of source basis vector c.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols);
    static Matrix from_rows(std::size_t cols, const std::vector<Vec>& rows);
    /// Single-column matrix.
    static Matrix column_matrix(const Vec& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Vec column(std::size_t c) const;
    Vec row(std::size_t r) const;
    void set_column(std::size_t c, const Vec& v);
    void set_row(std::size_t r, const Vec& v);

    Matrix transpose() const;
    bool is_zero() const;
    std::size_t nonzeros() const;

    /// Columns [c0, c0+n).
    Matrix columns(std::size_t c0, std::size_t n) const;
    /// Horizontal concatenation [this | other].
    Matrix hcat(const Matrix& other) const;
    /// Vertical concatenation.
    Matrix vcat(const Matrix& other) const;

    Matrix& operator+=(const Matrix& b);
    Matrix& operator-=(const Matrix& b);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Scalar& s, const Matrix& m);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vec operator*(const Matrix& a, const Vec& v);

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    const std::vector<Scalar>& data() const { return a_; }
    std::vector<Scalar>& data() { return a_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> a_;
};

/// Kronecker product with row-major factor ordering.
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace ncg
