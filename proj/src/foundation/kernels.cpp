#include "ncgauge/foundation/kernels.hpp"

#include <cstdlib>
#include <string>
#include <utility>

#include <omp.h>

#include "ncgauge/foundation/errors.hpp"

namespace ncg::kernels {
namespace {

// Below this many scalar multiply-adds a parallel region costs more than it saves.
constexpr std::size_t kParallelWork = 4096;

void check_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

// Nonzero column indices of each row of b, so the inner loop skips zeros.
std::vector<std::vector<std::size_t>> row_support(const Matrix& b) {
    std::vector<std::vector<std::size_t>> s(b.rows());
    for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (!b(k, j).is_zero()) s[k].push_back(j);
    return s;
}

void mul_row(const Matrix& a, const Matrix& b, const std::vector<std::vector<std::size_t>>& sup,
             std::size_t i, Matrix& c) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
        const Scalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j : sup[k]) c(i, j).add_product(aik, b(k, j));
    }
}

// Shared pivot search for both rref variants; returns false when column is empty.
bool find_pivot(Matrix& m, std::size_t rank, std::size_t col) {
    for (std::size_t r = rank; r < m.rows(); ++r) {
        if (m(r, col).is_zero()) continue;
        if (r != rank)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(r, c), m(rank, c));
        return true;
    }
    return false;
}

void normalize_row(Matrix& m, std::size_t row, std::size_t col, std::vector<std::size_t>& support) {
    Scalar inv = m(row, col).inverse();
    support.clear();
    for (std::size_t c = col; c < m.cols(); ++c) {
        if (m(row, c).is_zero()) continue;
        if (!inv.is_one()) m(row, c) *= inv;
        support.push_back(c);
    }
}

void eliminate(Matrix& m, std::size_t r, std::size_t prow, std::size_t col,
               const std::vector<std::size_t>& support) {
    if (r == prow || m(r, col).is_zero()) return;
    Scalar f = -m(r, col);
    for (std::size_t c : support) m(r, c).add_product(f, m(prow, c));
}

Echelon finish(Matrix m, std::size_t rank, std::vector<std::size_t> pivots) {
    Matrix r(rank, m.cols());
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t c = 0; c < m.cols(); ++c) r(i, c) = std::move(m(i, c));
    return {std::move(r), std::move(pivots)};
}

int initial_threads() {
    if (const char* env = std::getenv("NCGAUGE_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return omp_get_max_threads();
}

int& threads() {
    static int n = initial_threads();
    return n;
}

}  // namespace

int thread_count() { return threads(); }
void set_thread_count(int n) { threads() = n > 0 ? n : 1; }

Matrix matmul(const Matrix& a, const Matrix& b) {
    check_mul(a, b);
    Matrix c(a.rows(), b.cols());
    const auto sup = row_support(b);
    const std::size_t work = a.rows() * a.cols() * b.cols();
    const long rows = static_cast<long>(a.rows());
#pragma omp parallel for schedule(dynamic, 4) num_threads(thread_count()) if (work > kParallelWork)
    for (long i = 0; i < rows; ++i) mul_row(a, b, sup, static_cast<std::size_t>(i), c);
    return c;
}

Vec matvec(const Matrix& a, const Vec& v) {
    if (a.cols() != v.size()) throw DimensionMismatch("matvec: size mismatch");
    Vec out(a.rows());
    const long rows = static_cast<long>(a.rows());
#pragma omp parallel for schedule(static) num_threads(thread_count()) if (a.rows() * a.cols() > kParallelWork)
    for (long i = 0; i < rows; ++i) {
        Scalar acc;
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (!v[k].is_zero()) acc.add_product(a(static_cast<std::size_t>(i), k), v[k]);
        out[static_cast<std::size_t>(i)] = std::move(acc);
    }
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
    const long ar = static_cast<long>(a.rows());
#pragma omp parallel for schedule(static) num_threads(thread_count()) if (c.rows() * c.cols() > kParallelWork)
    for (long i = 0; i < ar; ++i) {
        const auto ii = static_cast<std::size_t>(i);
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& aij = a(ii, j);
            if (aij.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) c(ii * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    }
    return c;
}

Echelon rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> support;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        if (!find_pivot(m, rank, col)) continue;
        normalize_row(m, rank, col, support);
        const long rows = static_cast<long>(m.rows());
        const std::size_t prow = rank;
#pragma omp parallel for schedule(dynamic, 8) num_threads(thread_count()) if (m.rows() * support.size() > kParallelWork)
        for (long r = 0; r < rows; ++r) eliminate(m, static_cast<std::size_t>(r), prow, col, support);
        pivots.push_back(col);
        ++rank;
    }
    return finish(std::move(m), rank, std::move(pivots));
}

namespace serial {

Matrix matmul(const Matrix& a, const Matrix& b) {
    check_mul(a, b);
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Scalar acc;
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
            c(i, j) = std::move(acc);
        }
    return c;
}

Vec matvec(const Matrix& a, const Vec& v) {
    if (a.cols() != v.size()) throw DimensionMismatch("matvec: size mismatch");
    Vec out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return c;
}

Echelon rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> support;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        if (!find_pivot(m, rank, col)) continue;
        normalize_row(m, rank, col, support);
        for (std::size_t r = 0; r < m.rows(); ++r) eliminate(m, r, rank, col, support);
        pivots.push_back(col);
        ++rank;
    }
    return finish(std::move(m), rank, std::move(pivots));
}

}  // namespace serial
}  // namespace ncg::kernels
