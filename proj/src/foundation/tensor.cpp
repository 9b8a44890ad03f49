#include "ncgauge/foundation/tensor.hpp"

#include <numeric>

#include "ncgauge/foundation/errors.hpp"

namespace ncg {

std::vector<TermList> sparse_columns(const Matrix& m) {
    std::vector<TermList> cols(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero()) cols[c].push_back({static_cast<std::uint32_t>(r), m(r, c)});
    return cols;
}

TermList sparse(const Vec& v) {
    TermList t;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) t.push_back({static_cast<std::uint32_t>(i), v[i]});
    return t;
}

std::size_t total(const Dims& dims) {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

Vec apply_legs(const Vec& x, const Dims& dims, std::size_t leg, std::size_t count, const std::vector<TermList>& f,
               std::size_t out_dim) {
    if (x.size() != total(dims) || leg + count > dims.size())
        throw DimensionMismatch("apply_legs: tensor shape mismatch");
    std::size_t mid = 1, post = 1;
    for (std::size_t i = leg; i < leg + count; ++i) mid *= dims[i];
    for (std::size_t i = leg + count; i < dims.size(); ++i) post *= dims[i];
    if (f.size() != mid) throw DimensionMismatch("apply_legs: map source does not match legs");
    const std::size_t pre = x.size() / (mid * post);
    Vec out(pre * out_dim * post);
    for (std::size_t a = 0; a < pre; ++a)
        for (std::size_t b = 0; b < mid; ++b) {
            const auto& col = f[b];
            if (col.empty()) continue;
            const std::size_t base = (a * mid + b) * post;
            for (std::size_t c = 0; c < post; ++c) {
                const Scalar& xv = x[base + c];
                if (xv.is_zero()) continue;
                for (const auto& t : col) out[(a * out_dim + t.index) * post + c].add_product(xv, t.coeff);
            }
        }
    return out;
}

Vec apply_legs(const Vec& x, const Dims& dims, std::size_t leg, std::size_t count, const Matrix& f) {
    return apply_legs(x, dims, leg, count, sparse_columns(f), f.rows());
}

Dims permute_dims(const Dims& dims, const std::vector<std::size_t>& perm) {
    Dims out(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) out[k] = dims.at(perm[k]);
    return out;
}

Vec permute_legs(const Vec& x, const Dims& dims, const std::vector<std::size_t>& perm) {
    if (perm.size() != dims.size() || x.size() != total(dims))
        throw DimensionMismatch("permute_legs: shape mismatch");
    const std::size_t n = dims.size();
    Dims out_dims = permute_dims(dims, perm);
    std::vector<std::size_t> in_stride(n, 1), out_stride(n, 1);
    for (std::size_t k = n; k-- > 1;) {
        in_stride[k - 1] = in_stride[k] * dims[k];
        out_stride[k - 1] = out_stride[k] * out_dims[k];
    }
    Vec out(x.size());
    std::vector<std::size_t> idx(n);
    for (std::size_t flat = 0; flat < x.size(); ++flat) {
        if (x[flat].is_zero()) continue;
        std::size_t rem = flat;
        for (std::size_t k = 0; k < n; ++k) {
            idx[k] = rem / in_stride[k];
            rem %= in_stride[k];
        }
        std::size_t o = 0;
        for (std::size_t k = 0; k < n; ++k) o += idx[perm[k]] * out_stride[k];
        out[o] = x[flat];
    }
    return out;
}

}  // namespace ncg
