#include "ncgauge/local/local.hpp"

#include "ncgauge/foundation/errors.hpp"
#include "ncgauge/foundation/sampling.hpp"

namespace ncg {
namespace {

StructuredSpace form_space(const Algebra& m, std::size_t n) { return StructuredSpace::tensor_power(m.space(), n + 1); }

CheckResult compare_form_maps(std::string name, const FormMap& l, const FormMap& r, const StructuredSpace& source,
                              const Algebra& m) {
    if (l.degree != r.degree) return fail(std::move(name), "degrees differ");
    return compare_maps(std::move(name), l.values, r.values, source, form_space(m, l.degree));
}

}  // namespace

Report check_gauge_field(const Algebra& m, const Coalgebra& b, const Vec& one, const FormMap& a) {
    Report rep;
    if (a.degree != 1 || a.values.cols() != b.dim() || a.values.rows() != m.dim() * m.dim())
        throw DimensionMismatch("gauge field must be B → M⊗M");
    CheckResult forms = pass("A takes values in Ω¹M");
    for (std::size_t c = 0; c < b.dim(); ++c)
        if (!is_form(m, a.values.column(c), 1)) {
            forms = fail(forms.name, Witness{b.space().label(c), render(a.values.column(c), form_space(m, 1)), "not a 1-form"});
            break;
        }
    rep.add(std::move(forms));
    rep.add(compare_vectors("A(1) = 0", "1", a.values * one, Vec(a.values.rows()), form_space(m, 1)));
    return rep;
}

FormMap bianchi_residue(const Algebra& m, const Coalgebra& b, const FormMap& a, const FormMap& f) {
    return differential(m, f) + convolve(b, m, a, f) - convolve(b, m, f, a);
}

FormMap curvature(const Algebra& m, const Coalgebra& b, const FormMap& a) {
    FormMap f = differential(m, a) + convolve(b, m, a, a);
    FormMap res = bianchi_residue(m, b, a, f);
    for (std::size_t c = 0; c < b.dim(); ++c)
        if (!is_zero(res.values.column(c)))
            throw BianchiFailure("dF + A*F − F*A ≠ 0", b.space().label(c) + " ↦ " + render(res.values.column(c), form_space(m, 3)));
    return f;
}

FormMap nabla(const Algebra& m, const Comodule& v, const FormMap& a, const FormMap& sigma) {
    FormMap conv = convolve(v, m, sigma, a);
    FormMap d = differential(m, sigma);
    return sigma.degree % 2 == 0 ? d - conv : d + conv;
}

CheckResult check_nabla_squared(const Algebra& m, const Coalgebra& b, const Comodule& v, const FormMap& a,
                                const FormMap& sigma) {
    FormMap lhs = nabla(m, v, a, nabla(m, v, a, sigma));
    FormMap rhs = Scalar(-1) * convolve(v, m, sigma, curvature(m, b, a));
    return compare_form_maps("∇²σ = −σ*F", lhs, rhs, v.space(), m);
}

Matrix local_gauge_inverse(const Algebra& m, const Coalgebra& b, const Vec& one, const Matrix& gamma) {
    if (gamma * one != m.unit())
        throw InvariantFailure("γ(1) ≠ 1", render(gamma * one, m.space()));
    auto inv = ConvolutionAlgebra(b, m).inverse(gamma);
    if (!inv) throw InvariantFailure("γ is not convolution-invertible");
    return *inv;
}

FormMap local_gauge_transform(const Algebra& m, const Coalgebra& b, const FormMap& a, const Matrix& gamma,
                              const Matrix& gamma_inv) {
    const FormMap g{gamma, 0}, gi{gamma_inv, 0};
    return convolve(b, m, convolve(b, m, gi, a), g) + convolve(b, m, gi, differential(m, g));
}

FormMap local_gauge_transform(const Algebra& m, const Comodule& v, const FormMap& sigma, const Matrix& gamma) {
    return convolve(v, m, sigma, FormMap{gamma, 0});
}

Report check_local_covariance(const Algebra& m, const Coalgebra& b, const Comodule& v, const Vec& one,
                              const FormMap& a, const Matrix& gamma, const FormMap& sigma) {
    Report rep;
    const Matrix gi = local_gauge_inverse(m, b, one, gamma);
    const FormMap ag = local_gauge_transform(m, b, a, gamma, gi);
    const FormMap f = curvature(m, b, a), fg = curvature(m, b, ag);
    rep.add(compare_form_maps("F^γ = γ⁻¹*F*γ", fg, convolve(b, m, convolve(b, m, FormMap{gi, 0}, f), FormMap{gamma, 0}),
                              b.space(), m));
    const FormMap lhs = nabla(m, v, ag, local_gauge_transform(m, v, sigma, gamma));
    const FormMap rhs = local_gauge_transform(m, v, nabla(m, v, a, sigma), gamma);
    rep.add(compare_form_maps("∇^γ(σ^γ) = (∇σ)^γ", lhs, rhs, v.space(), m));
    return rep;
}

FormMap sample_gauge_field(const Algebra& m, const Coalgebra& b, const Vec& one, std::mt19937& rng, int conductor) {
    const std::vector<Vec> basis = universal_forms(m, 1).space.vectors();
    const std::size_t n = m.dim() * m.dim();
    Matrix a = matrix_from(n, b.dim(), [&](std::size_t) { return sampling::random_combination(rng, basis, n, conductor); });
    const Vec at_one = a * one;
    for (std::size_t c = 0; c < b.dim(); ++c)
        if (!b.counit()[c].is_zero())
            for (std::size_t r = 0; r < n; ++r) a(r, c) -= b.counit()[c] * at_one[r];
    return {std::move(a), 1};
}

Matrix sample_local_gauge(const Algebra& m, const Coalgebra& b, const Vec& one, std::mt19937& rng, int conductor) {
    const ConvolutionAlgebra conv(b, m);
    for (;;) {
        Matrix g = sampling::random_matrix(rng, m.dim(), b.dim(), conductor);
        const Vec shift = g * one - m.unit();
        for (std::size_t c = 0; c < b.dim(); ++c)
            if (!b.counit()[c].is_zero())
                for (std::size_t r = 0; r < m.dim(); ++r) g(r, c) -= b.counit()[c] * shift[r];
        if (conv.inverse(g)) return g;
    }
}

FormMap sample_matter_field(const Algebra& m, std::size_t dim_v, std::size_t degree, std::mt19937& rng, int conductor) {
    const std::vector<Vec> basis = universal_forms(m, degree).space.vectors();
    std::size_t n = 1;
    for (std::size_t k = 0; k <= degree; ++k) n *= m.dim();
    return {matrix_from(n, dim_v, [&](std::size_t) { return sampling::random_combination(rng, basis, n, conductor); }),
            degree};
}

}  // namespace ncg
