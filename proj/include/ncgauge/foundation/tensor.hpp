#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ncgauge/foundation/matrix.hpp"

// Leg-wise manipulation of vectors in V_0 ⊗ ... ⊗ V_{n-1} (row-major index,
// last leg fastest). Every structure-map formula is evaluated with these.
namespace ncg {

struct Term {
    std::uint32_t index;
    Scalar coeff;
};
using TermList = std::vector<Term>;

/// Nonzero entries of each column of m.
std::vector<TermList> sparse_columns(const Matrix& m);
TermList sparse(const Vec& v);

using Dims = std::vector<std::size_t>;
std::size_t total(const Dims& dims);

/// Apply f (mapping the product of legs [leg, leg+count) to f.rows() dims) in place of those legs.
Vec apply_legs(const Vec& x, const Dims& dims, std::size_t leg, std::size_t count, const Matrix& f);
/// Same with f already in sparse-column form; out_dim is the dimension of the new leg.
Vec apply_legs(const Vec& x, const Dims& dims, std::size_t leg, std::size_t count,
               const std::vector<TermList>& f, std::size_t out_dim);
inline Vec apply_leg(const Vec& x, const Dims& dims, std::size_t leg, const Matrix& f) {
    return apply_legs(x, dims, leg, 1, f);
}
/// Output leg k is input leg perm[k].
Vec permute_legs(const Vec& x, const Dims& dims, const std::vector<std::size_t>& perm);
Dims permute_dims(const Dims& dims, const std::vector<std::size_t>& perm);

/// Matrix of the linear map whose value on basis vector j is fn(j).
template <class Fn>
Matrix matrix_from(std::size_t rows, std::size_t cols, Fn&& fn) {
    Matrix m(rows, cols);
    for (std::size_t j = 0; j < cols; ++j) m.set_column(j, fn(j));
    return m;
}

}  // namespace ncg
