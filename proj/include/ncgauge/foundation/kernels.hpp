#pragma once

#include <cstddef>
#include <vector>

#include "ncgauge/foundation/matrix.hpp"

// Hot linear-algebra kernels. The default versions are OpenMP-parallel; the
// serial namespace holds the reference implementations the tests compare
// against. Both must produce identical results entry for entry.
namespace ncg::kernels {

struct Echelon {
    Matrix r;                         // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Matrix matmul(const Matrix& a, const Matrix& b);
Vec matvec(const Matrix& a, const Vec& v);
Matrix kron(const Matrix& a, const Matrix& b);
/// Reduced row echelon form, leftmost pivot, rows scanned top to bottom.
/// Zero rows are dropped from the result.
Echelon rref(Matrix m);

/// Threads used by the parallel kernels (from NCGAUGE_THREADS, else OpenMP default).
int thread_count();
void set_thread_count(int n);

namespace serial {
Matrix matmul(const Matrix& a, const Matrix& b);
Vec matvec(const Matrix& a, const Vec& v);
Matrix kron(const Matrix& a, const Matrix& b);
Echelon rref(Matrix m);
}  // namespace serial

}  // namespace ncg::kernels
