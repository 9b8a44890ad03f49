#include "ncgauge/calculus/forms.hpp"

#include "ncgauge/foundation/errors.hpp"

namespace ncg {
namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

// Multiply legs i and i+1 of x ∈ P^{⊗(n+1)}, giving an element of P^{⊗n}.
Vec contract(const Algebra& p, const Vec& x, std::size_t n, std::size_t i) {
    const std::size_t d = p.dim(), tail = ipow(d, n - i - 1);
    Vec out(ipow(d, n));
    for (const auto& t : sparse(x)) {
        const std::size_t high = t.index / (tail * d * d), a = (t.index / (tail * d)) % d, b = (t.index / tail) % d;
        const std::size_t low = t.index % tail;
        for (const auto& u : p.product(a, b)) out[(high * d + u.index) * tail + low].add_product(t.coeff, u.coeff);
    }
    return out;
}

}  // namespace

UniversalForms universal_forms(const Algebra& p, std::size_t n) {
    const std::size_t d = p.dim(), amb = ipow(d, n + 1);
    StructuredSpace s = StructuredSpace::tensor_power(p.space(), n + 1);
    if (n == 0) return {p, 0, Subspace::whole(s)};
    const std::size_t block = ipow(d, n);
    Matrix m(n * block, amb);
    for (std::size_t idx = 0; idx < amb; ++idx)
        for (std::size_t i = 0; i < n; ++i) {
            Vec c = contract(p, basis_vec(amb, idx), n, i);
            for (std::size_t r = 0; r < block; ++r)
                if (!c[r].is_zero()) m(i * block + r, idx) = c[r];
        }
    Subspace k = kernel(m);
    return {p, n, Subspace::span(s, k.vectors())};
}

bool is_form(const Algebra& p, const Vec& x, std::size_t n) {
    if (x.size() != ipow(p.dim(), n + 1)) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (!is_zero(contract(p, x, n, i))) return false;
    return true;
}

Vec differential_unchecked(const Algebra& p, const Vec& x, std::size_t n) {
    const std::size_t d = p.dim();
    if (x.size() != ipow(d, n + 1)) throw DimensionMismatch("differential: wrong tensor length");
    const TermList unit = sparse(p.unit());
    Vec out(ipow(d, n + 2));
    for (const auto& t : sparse(x))
        for (std::size_t i = 0; i <= n + 1; ++i) {
            const std::size_t tail = ipow(d, n + 1 - i);
            const std::size_t high = t.index / tail, low = t.index % tail;
            Scalar c = (i % 2 == 0) ? t.coeff : -t.coeff;
            for (const auto& u : unit) out[(high * d + u.index) * tail + low].add_product(c, u.coeff);
        }
    return out;
}

Vec differential(const Algebra& p, const Vec& x, std::size_t n) {
    if (!is_form(p, x, n))
        throw NotAForm("differential: input is not a universal " + std::to_string(n) + "-form",
                       render(x, StructuredSpace::tensor_power(p.space(), n + 1)));
    return differential_unchecked(p, x, n);
}

Vec form_product(const Algebra& p, const Vec& x, std::size_t n, const Vec& y, std::size_t m) {
    const std::size_t d = p.dim(), ytail = ipow(d, m);
    if (x.size() != ipow(d, n + 1) || y.size() != ipow(d, m + 1))
        throw DimensionMismatch("form_product: wrong tensor length");
    Vec out(ipow(d, n + m + 1));
    const TermList sy = sparse(y);
    for (const auto& s : sparse(x)) {
        const std::size_t xh = s.index / d, a = s.index % d;
        for (const auto& t : sy) {
            const std::size_t b = t.index / ytail, yl = t.index % ytail;
            Scalar w = s.coeff * t.coeff;
            for (const auto& u : p.product(a, b)) out[(xh * d + u.index) * ytail + yl].add_product(w, u.coeff);
        }
    }
    return out;
}

Vec embed_form(const Matrix& inclusion, const Vec& x, std::size_t n) {
    Dims dims(n + 1, inclusion.cols());
    Vec out = x;
    for (std::size_t k = 0; k <= n; ++k) {
        out = apply_leg(out, dims, k, inclusion);
        dims[k] = inclusion.rows();
    }
    return out;
}

Matrix embed_form_map(const Matrix& inclusion, const Matrix& values, std::size_t n) {
    return matrix_from(ipow(inclusion.rows(), n + 1), values.cols(),
                       [&](std::size_t j) { return embed_form(inclusion, values.column(j), n); });
}

Subspace p_omega1m_p(const Algebra& p, const FixedSubalgebra& m) {
    const std::size_t d = p.dim();
    std::vector<Vec> gens;
    for (std::size_t k = 0; k < m.dim(); ++k) {
        const Vec mk = m.inclusion.column(k);
        for (std::size_t u = 0; u < d; ++u) {
            const Vec um = p.multiply(basis_vec(d, u), mk);
            for (std::size_t v = 0; v < d; ++v) {
                Vec g = kron(basis_vec(d, u), p.multiply(mk, basis_vec(d, v))) - kron(um, basis_vec(d, v));
                if (!is_zero(g)) gens.push_back(std::move(g));
            }
        }
    }
    return Subspace::span(StructuredSpace::tensor(p.space(), p.space()), gens);
}

Subspace omega_m_p(const Algebra& p, const FixedSubalgebra& m, std::size_t n) {
    const std::size_t d = p.dim();
    std::vector<Vec> gens;
    for (const Vec& xi : universal_forms(m.algebra, n).space.vectors()) {
        Vec e = embed_form(m.inclusion, xi, n);
        for (std::size_t v = 0; v < d; ++v) gens.push_back(form_product(p, e, n, basis_vec(d, v), 0));
    }
    return Subspace::span(StructuredSpace::tensor_power(p.space(), n + 1), gens);
}

HorizontalSubspaces horizontal_subspaces(const Algebra& p, const FixedSubalgebra& m, std::size_t n) {
    return {p_omega1m_p(p, m), omega_m_p(p, m, n), n};
}

FormMap operator+(const FormMap& a, const FormMap& b) {
    if (a.degree != b.degree) throw DimensionMismatch("form maps of different degree");
    return {a.values + b.values, a.degree};
}

FormMap operator-(const FormMap& a, const FormMap& b) {
    if (a.degree != b.degree) throw DimensionMismatch("form maps of different degree");
    return {a.values - b.values, a.degree};
}

FormMap operator*(const Scalar& s, const FormMap& a) { return {s * a.values, a.degree}; }

FormMap convolve(const Coalgebra& c, const Algebra& p, const FormMap& f, const FormMap& g) {
    const std::size_t dc = c.dim(), d = p.dim();
    if (f.values.cols() != dc || g.values.cols() != dc) throw DimensionMismatch("convolve: source mismatch");
    const std::size_t deg = f.degree + g.degree;
    std::vector<Vec> fc(dc), gc(dc);
    for (std::size_t i = 0; i < dc; ++i) {
        fc[i] = f.values.column(i);
        gc[i] = g.values.column(i);
    }
    Matrix out(ipow(d, deg + 1), dc);
    for (std::size_t i = 0; i < dc; ++i) {
        Vec acc(out.rows());
        for (const auto& t : c.coproduct(i)) {
            const Vec& a = fc[t.index / dc];
            const Vec& b = gc[t.index % dc];
            if (is_zero(a) || is_zero(b)) continue;
            axpy(acc, t.coeff, form_product(p, a, f.degree, b, g.degree));
        }
        out.set_column(i, acc);
    }
    return {std::move(out), deg};
}

FormMap convolve(const Comodule& v, const Algebra& p, const FormMap& sigma, const FormMap& a) {
    const std::size_t dv = v.dim(), dc = v.coalgebra().dim(), d = p.dim();
    if (sigma.values.cols() != dv || a.values.cols() != dc) throw DimensionMismatch("convolve: source mismatch");
    const std::size_t deg = sigma.degree + a.degree;
    Matrix out(ipow(d, deg + 1), dv);
    for (std::size_t i = 0; i < dv; ++i) {
        Vec acc(out.rows());
        for (const auto& t : v.coact(i)) {
            Vec s = sigma.values.column(t.index / dc), b = a.values.column(t.index % dc);
            if (is_zero(s) || is_zero(b)) continue;
            axpy(acc, t.coeff, form_product(p, s, sigma.degree, b, a.degree));
        }
        out.set_column(i, acc);
    }
    return {std::move(out), deg};
}

CheckResult check_tensorial(std::string name, const HopfAlgebra& h, const Comodule& p_rho, const Comodule& v,
                            const FormMap& sigma) {
    const std::size_t dh = h.dim(), legs = sigma.degree + 1;
    StructuredSpace target = StructuredSpace::tensor(
        StructuredSpace::tensor_power(p_rho.space(), legs), h.space());
    for (std::size_t i = 0; i < v.dim(); ++i) {
        Vec lhs(sigma.values.rows() * dh);
        for (const auto& t : v.coact(i)) {
            const std::size_t c = t.index % dh;
            for (const auto& s : sparse(sigma.values.column(t.index / dh))) lhs[s.index * dh + c].add_product(t.coeff, s.coeff);
        }
        Vec rhs = coact_tensor_power(h, p_rho, sigma.values.column(i), legs);
        if (lhs != rhs) return fail(std::move(name), Witness{v.space().label(i), render(lhs, target), render(rhs, target)});
    }
    return pass(std::move(name));
}

CheckResult check_values_in(std::string name, const FormMap& sigma, const Subspace& s, const StructuredSpace& source) {
    for (std::size_t j = 0; j < sigma.values.cols(); ++j) {
        Vec x = sigma.values.column(j);
        if (!s.contains(x))
            return fail(std::move(name), Witness{source.label(j), render(x, s.ambient()), "outside the subspace"});
    }
    return pass(std::move(name));
}

FormMap differential(const Algebra& p, const FormMap& f) {
    const std::size_t d = p.dim();
    return {matrix_from(ipow(d, f.degree + 2), f.values.cols(),
                        [&](std::size_t j) { return differential_unchecked(p, f.values.column(j), f.degree); }),
            f.degree + 1};
}

}  // namespace ncg
