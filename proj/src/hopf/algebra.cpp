#include "ncgauge/hopf/algebra.hpp"

#include "ncgauge/foundation/errors.hpp"

namespace ncg {

Algebra::Algebra(StructuredSpace space, Matrix mult, Vec unit) {
    const std::size_t d = space.dim();
    if (mult.rows() != d || mult.cols() != d * d) throw DimensionMismatch("algebra: product has wrong shape");
    if (unit.size() != d) throw DimensionMismatch("algebra: unit has wrong length");
    auto table = sparse_columns(mult);
    impl_ = std::make_shared<const Impl>(Impl{std::move(space), std::move(mult), std::move(unit), std::move(table)});
}

Algebra Algebra::ground() {
    Matrix m(1, 1);
    m(0, 0) = 1;
    return Algebra(StructuredSpace::ground(), m, Vec{Scalar(1)});
}

Algebra Algebra::tensor(const Algebra& a, const Algebra& b) {
    const std::size_t da = a.dim(), db = b.dim(), d = da * db;
    Matrix m(d, d * d);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t k = 0; k < da; ++k)
                for (std::size_t l = 0; l < db; ++l) {
                    const std::size_t col = (i * db + j) * d + (k * db + l);
                    for (const auto& s : a.product(i, k))
                        for (const auto& t : b.product(j, l)) m(s.index * db + t.index, col) += s.coeff * t.coeff;
                }
    return Algebra(StructuredSpace::tensor(a.space(), b.space()), std::move(m), kron(a.unit(), b.unit()));
}

Vec tensor_multiply(const Algebra& a, const Algebra& b, const Vec& x, const Vec& y) {
    const std::size_t da = a.dim(), db = b.dim();
    if (x.size() != da * db || y.size() != da * db) throw DimensionMismatch("tensor_multiply: wrong vector length");
    TermList sx = sparse(x), sy = sparse(y);
    Vec out(da * db);
    for (const auto& s : sx)
        for (const auto& t : sy) {
            Scalar w = s.coeff * t.coeff;
            for (const auto& p : a.product(s.index / db, t.index / db))
                for (const auto& q : b.product(s.index % db, t.index % db))
                    out[p.index * db + q.index].add_product(w, p.coeff * q.coeff);
        }
    return out;
}

Vec Algebra::multiply(const Vec& a, const Vec& b) const {
    const std::size_t d = dim();
    if (a.size() != d || b.size() != d) throw DimensionMismatch("multiply: wrong vector length");
    Vec out(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (b[j].is_zero()) continue;
            Scalar ab = a[i] * b[j];
            for (const auto& t : product(i, j)) out[t.index].add_product(ab, t.coeff);
        }
    }
    return out;
}

Matrix Algebra::left_mult(const Vec& a) const {
    const std::size_t d = dim();
    Matrix m(d, d);
    for (std::size_t j = 0; j < d; ++j) m.set_column(j, multiply(a, basis_vec(d, j)));
    return m;
}

Matrix Algebra::right_mult(const Vec& a) const {
    const std::size_t d = dim();
    Matrix m(d, d);
    for (std::size_t j = 0; j < d; ++j) m.set_column(j, multiply(basis_vec(d, j), a));
    return m;
}

Coalgebra::Coalgebra(StructuredSpace space, Matrix comult, Vec counit) {
    const std::size_t d = space.dim();
    if (comult.rows() != d * d || comult.cols() != d) throw DimensionMismatch("coalgebra: coproduct has wrong shape");
    if (counit.size() != d) throw DimensionMismatch("coalgebra: counit has wrong length");
    auto table = sparse_columns(comult);
    std::vector<TermList> table3(d);
    for (std::size_t i = 0; i < d; ++i) {
        Vec acc(d * d * d);
        for (const auto& t : table[i]) {
            const std::size_t j = t.index / d, k = t.index % d;
            for (const auto& u : table[j]) acc[u.index * d + k].add_product(t.coeff, u.coeff);
        }
        table3[i] = sparse(acc);
    }
    impl_ = std::make_shared<const Impl>(
        Impl{std::move(space), std::move(comult), std::move(counit), std::move(table), std::move(table3)});
}

Coalgebra Coalgebra::ground() {
    Matrix m(1, 1);
    m(0, 0) = 1;
    return Coalgebra(StructuredSpace::ground(), m, Vec{Scalar(1)});
}

Coalgebra Coalgebra::tensor(const Coalgebra& a, const Coalgebra& b) {
    const std::size_t da = a.dim(), db = b.dim(), d = da * db;
    Matrix m(d * d, d);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (const auto& s : a.coproduct(i))
                for (const auto& t : b.coproduct(j)) {
                    const std::size_t p = s.index / da, q = s.index % da;
                    const std::size_t r = t.index / db, u = t.index % db;
                    m((p * db + r) * d + (q * db + u), i * db + j) += s.coeff * t.coeff;
                }
    return Coalgebra(StructuredSpace::tensor(a.space(), b.space()), std::move(m), kron(a.counit(), b.counit()));
}

Vec Coalgebra::comultiply(const Vec& c) const { return comult() * c; }

Scalar Coalgebra::counit(const Vec& c) const {
    Scalar s;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) s.add_product(c[i], impl_->counit[i]);
    return s;
}

ConvMap ConvolutionAlgebra::product(const ConvMap& f, const ConvMap& g) const {
    const std::size_t dc = c_.dim(), da = a_.dim();
    if (f.rows() != da || g.rows() != da || f.cols() != dc || g.cols() != dc)
        throw DimensionMismatch("convolution: maps have wrong shape");
    ConvMap out(da, dc);
    for (std::size_t c = 0; c < dc; ++c) {
        Vec acc(da);
        for (const auto& t : c_.coproduct(c)) {
            const std::size_t j = t.index / dc, k = t.index % dc;
            Vec fj = f.column(j), gk = g.column(k);
            if (is_zero(fj) || is_zero(gk)) continue;
            axpy(acc, t.coeff, a_.multiply(fj, gk));
        }
        out.set_column(c, acc);
    }
    return out;
}

ConvMap ConvolutionAlgebra::unit() const {
    const std::size_t dc = c_.dim(), da = a_.dim();
    ConvMap u(da, dc);
    for (std::size_t c = 0; c < dc; ++c)
        if (!c_.counit()[c].is_zero())
            for (std::size_t a = 0; a < da; ++a) u(a, c) = c_.counit()[c] * a_.unit()[a];
    return u;
}

Matrix ConvolutionAlgebra::left_operator(const ConvMap& f) const {
    const std::size_t dc = c_.dim(), da = a_.dim(), n = dc * da;
    Matrix l(n, n);
    for (std::size_t c = 0; c < dc; ++c)
        for (const auto& t : c_.coproduct(c)) {
            const std::size_t j = t.index / dc, k = t.index % dc;
            for (std::size_t a = 0; a < da; ++a) {
                if (f(a, j).is_zero()) continue;
                Scalar w = t.coeff * f(a, j);
                for (std::size_t b = 0; b < da; ++b)
                    for (const auto& p : a_.product(a, b)) l(p.index * dc + c, b * dc + k).add_product(w, p.coeff);
            }
        }
    return l;
}

Matrix ConvolutionAlgebra::right_operator(const ConvMap& f) const {
    const std::size_t dc = c_.dim(), da = a_.dim(), n = dc * da;
    Matrix r(n, n);
    for (std::size_t c = 0; c < dc; ++c)
        for (const auto& t : c_.coproduct(c)) {
            const std::size_t j = t.index / dc, k = t.index % dc;
            for (std::size_t a = 0; a < da; ++a) {
                if (f(a, k).is_zero()) continue;
                Scalar w = t.coeff * f(a, k);
                for (std::size_t b = 0; b < da; ++b)
                    for (const auto& p : a_.product(b, a)) r(p.index * dc + c, b * dc + j).add_product(w, p.coeff);
            }
        }
    return r;
}

std::optional<ConvMap> ConvolutionAlgebra::inverse(const ConvMap& f) const {
    const std::size_t dc = c_.dim(), da = a_.dim();
    Matrix sys = left_operator(f).vcat(right_operator(f));
    ConvMap u = unit();
    Vec rhs(2 * da * dc);
    for (std::size_t a = 0; a < da; ++a)
        for (std::size_t c = 0; c < dc; ++c) {
            rhs[a * dc + c] = u(a, c);
            rhs[da * dc + a * dc + c] = u(a, c);
        }
    auto x = solve(sys, rhs);
    if (!x) return std::nullopt;
    ConvMap g(da, dc);
    for (std::size_t a = 0; a < da; ++a)
        for (std::size_t c = 0; c < dc; ++c) g(a, c) = (*x)[a * dc + c];
    return g;
}

}  // namespace ncg
