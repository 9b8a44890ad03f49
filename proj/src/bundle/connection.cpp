#include "ncgauge/bundle/connection.hpp"

#include "ncgauge/foundation/errors.hpp"

namespace ncg {
namespace {

Vec d0(const Algebra& p, std::size_t u) { return differential_unchecked(p, basis_vec(p.dim(), u), 0); }

Matrix augmentation_complement(const HopfAlgebra& h) {
    // h ↦ h − ε(h)1
    Matrix m = Matrix::identity(h.dim());
    for (std::size_t c = 0; c < h.dim(); ++c)
        for (std::size_t r = 0; r < h.dim(); ++r) m(r, c) -= h.unit()[r] * h.counit()[c];
    return m;
}

}  // namespace

Report check_connection(const PrincipalBundle& b, const Matrix& omega) {
    const std::size_t d = b.dim_p(), dh = b.dim_h();
    if (omega.rows() != d * d || omega.cols() != dh) throw DimensionMismatch("connection: ω must be dim P² x dim H");
    const HopfAlgebra& h = b.h();
    Report rep;
    CheckResult forms = pass("ω takes values in Ω¹P");
    for (std::size_t c = 0; c < dh && forms.passed(); ++c)
        if (!is_form(b.p(), omega.column(c), 1))
            forms = fail(forms.name, Witness{h.space().label(c), render(omega.column(c), b.galois.pp()), "not a 1-form"});
    rep.add(std::move(forms));
    Matrix target(d * dh, dh);
    for (std::size_t c = 0; c < dh; ++c)
        target.set_column(c, kron(b.p().unit(), basis_vec(dh, c)) - h.counit()[c] * kron(b.p().unit(), h.unit()));
    rep.add(compare_maps("χ̃∘ω(h) = 1⊗h − ε(h)1⊗1", b.galois.chi_tilde * omega, target, h.space(), b.galois.pc()));
    rep.add(compare_vectors("ω(1) = 0", "1", omega * h.unit(), Vec(d * d), b.galois.pp()));
    rep.add(check_tensorial("ω: H_Ad → P_ρ⊗P_ρ", h, b.rho(), b.h_comodules.adjoint, FormMap{omega, 1}));
    return rep;
}

ConnectionForm make_connection(const PrincipalBundle& b, const Matrix& omega) {
    require_passed(check_connection(b, omega), "not a connection");
    return {omega};
}

Matrix projection_matrix(const PrincipalBundle& b, const Matrix& omega) {
    const Algebra& p = b.p();
    const std::size_t d = p.dim(), dh = b.dim_h();
    const auto cols = sparse_columns(omega);
    Matrix pi(d * d, d * d);
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v)
            for (const auto& t : b.rho().coact(v)) {
                const std::size_t w = t.index / dh, c = t.index % dh;
                for (const auto& s : p.product(u, w))
                    for (const auto& q : cols[c]) {
                        Scalar k = t.coeff * s.coeff * q.coeff;
                        const std::size_t x = q.index / d, y = q.index % d;
                        for (const auto& r : p.product(s.index, x)) pi(r.index * d + y, u * d + v).add_product(k, r.coeff);
                    }
            }
    return pi;
}

Report check_projection(const PrincipalBundle& b, const Matrix& pi) {
    const Algebra& p = b.p();
    const std::size_t d = p.dim(), dh = b.dim_h();
    const StructuredSpace pp = b.galois.pp();
    if (pi.rows() != d * d || pi.cols() != d * d) throw DimensionMismatch("projection: Π must act on P⊗P");
    const std::vector<Vec> basis = b.omega1.vectors();
    std::vector<Vec> images;
    images.reserve(basis.size());
    for (const Vec& x : basis) images.push_back(pi * x);
    Report rep;

    CheckResult closed = pass("Π(Ω¹P) ⊂ Ω¹P");
    CheckResult idem = pass("Π² = Π");
    CheckResult chi = pass("χ̃∘Π = χ̃");
    CheckResult cov = pass("Π covariant on Ω¹P_ρ");
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Vec& x = basis[i];
        const Vec& y = images[i];
        if (closed.passed() && !is_form(p, y, 1)) closed = fail(closed.name, Witness{render(x, pp), render(y, pp), "not a 1-form"});
        if (idem.passed()) {
            Vec yy = pi * y;
            if (yy != y) idem = fail(idem.name, Witness{render(x, pp), render(yy, pp), render(y, pp)});
        }
        if (chi.passed()) {
            Vec l = b.galois.chi_tilde * y, r = b.galois.chi_tilde * x;
            if (l != r) chi = fail(chi.name, Witness{render(x, pp), render(l, b.galois.pc()), render(r, b.galois.pc())});
        }
        if (cov.passed()) {
            Vec l = coact_tensor_power(b.h(), b.rho(), y, 2);
            Vec r = apply_leg(coact_tensor_power(b.h(), b.rho(), x, 2), {d * d, dh}, 0, pi);
            if (l != r) cov = fail(cov.name, Witness{render(x, pp), "ρ(Πx) differs", "(Π⊗id)ρ(x)"});
        }
    }
    rep.add(std::move(closed));
    rep.add(std::move(idem));

    CheckResult linear = pass("Π left P-linear");
    std::vector<Vec> pd(d);
    for (std::size_t u = 0; u < d; ++u) pd[u] = pi * d0(p, u);
    for (std::size_t a = 0; a < d && linear.passed(); ++a)
        for (std::size_t u = 0; u < d; ++u) {
            const Vec ea = basis_vec(d, a);
            Vec l = pi * form_product(p, ea, 0, d0(p, u), 1), r = form_product(p, ea, 0, pd[u], 1);
            if (l != r) {
                linear = fail(linear.name, Witness{p.space().label(a) + "·d" + p.space().label(u), render(l, pp), render(r, pp)});
                break;
            }
        }
    rep.add(std::move(linear));

    CheckResult ker = pass("ker Π = P(Ω¹M)P");
    for (const Vec& n : b.galois.relations.vectors()) {
        Vec y = pi * n;
        if (!is_zero(y)) {
            ker = fail(ker.name, Witness{render(n, pp), render(y, pp), "0"});
            break;
        }
    }
    if (ker.passed()) {
        const std::size_t r = Subspace::span(pp, images).dim();
        if (r + b.galois.relations.dim() != basis.size())
            ker = fail(ker.name, "rank of Π on Ω¹P is " + std::to_string(r) + ", expected " +
                                     std::to_string(basis.size() - b.galois.relations.dim()));
    }
    rep.add(std::move(ker));
    rep.add(std::move(cov));
    rep.add(std::move(chi));
    return rep;
}

ConnectionProjection projection_from_connection(const PrincipalBundle& b, const ConnectionForm& w) {
    require_passed(check_connection(b, w.omega), "not a connection");
    Matrix pi = projection_matrix(b, w.omega);
    require_passed(check_projection(b, pi), "projection from connection");
    return {std::move(pi)};
}

ConnectionForm connection_from_projection(const PrincipalBundle& b, const ConnectionProjection& p) {
    require_passed(check_projection(b, p.pi), "not a connection projection");
    Matrix omega = p.pi * b.galois.tau_lift * augmentation_complement(b.h());
    require_passed(check_connection(b, omega), "connection from projection");
    return {std::move(omega)};
}

std::optional<ConnectionSpace> connection_space(const PrincipalBundle& b) {
    const Algebra& p = b.p();
    const std::size_t d = p.dim(), dh = b.dim_h(), n = d * d * dh;
    Subspace inter = intertwiner_space(b.h_comodules.adjoint, b.pp_comodule());
    const Matrix k = inter.columns();
    // Linear conditions on the flattened ω (index r*dim H + c): values are 1-forms, ω(1) = 0, χ̃ω fixed.
    const std::size_t rows = d * dh + d * d + d * dh * dh;
    Matrix a(rows, n);
    Vec rhs(rows);
    for (std::size_t c = 0; c < dh; ++c)
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y < d; ++y)
                for (const auto& t : p.product(x, y)) a(c * d + t.index, (x * d + y) * dh + c) += t.coeff;
    std::size_t off = d * dh;
    for (std::size_t r = 0; r < d * d; ++r)
        for (std::size_t c = 0; c < dh; ++c) a(off + r, r * dh + c) = b.h().unit()[c];
    off += d * d;
    const Matrix& chi = b.galois.chi_tilde;
    for (std::size_t c = 0; c < dh; ++c) {
        Vec t = kron(p.unit(), basis_vec(dh, c)) - b.h().counit()[c] * kron(p.unit(), b.h().unit());
        for (std::size_t i = 0; i < d * dh; ++i) {
            rhs[off + c * d * dh + i] = t[i];
            for (std::size_t r = 0; r < d * d; ++r)
                if (!chi(i, r).is_zero()) a(off + c * d * dh + i, r * dh + c) = chi(i, r);
        }
    }
    return affine_family(k, a, rhs, d * d, dh);
}

StrongVerdict is_strong(const PrincipalBundle& b, const ConnectionForm& w) {
    const Algebra& p = b.p();
    const std::size_t d = p.dim(), dh = b.dim_h();
    const Matrix pi = projection_matrix(b, w.omega);
    const StructuredSpace pp = b.galois.pp();
    const StructuredSpace pph = StructuredSpace::tensor(pp, b.h().space());
    CheckResult by_pi = pass("(id−Π)du ∈ (Ω¹M)P");
    CheckResult by_coaction = pass("ρ-form of the strong condition");
    for (std::size_t u = 0; u < d; ++u) {
        const Vec du = d0(p, u);
        const Vec x = pi * kron(p.unit(), basis_vec(d, u));  // u⁽¹⁾ω(u⁽²⁾)
        const Vec y = du - pi * du;
        if (by_pi.passed() && !b.horizontal.contains(y))
            by_pi = fail(by_pi.name, Witness{p.space().label(u), render(y, pp), "outside (Ω¹M)P"});
        if (by_coaction.passed()) {
            Vec lhs = permute_legs(apply_leg(x, {d, d}, 0, b.rho().coaction()), {d, dh, d}, {0, 2, 1});
            Vec rhs = kron(kron(basis_vec(d, u), p.unit()), b.h().unit()) + kron(x, b.h().unit());
            for (const auto& t : b.rho().coact(u))
                axpy(rhs, -t.coeff, kron(kron(basis_vec(d, t.index / dh), p.unit()), basis_vec(dh, t.index % dh)));
            if (lhs != rhs) by_coaction = fail(by_coaction.name, Witness{p.space().label(u), render(lhs, pph), render(rhs, pph)});
        }
    }
    if (by_pi.passed() != by_coaction.passed())
        throw InternalInconsistency("strong-connection criteria disagree: Π-form " +
                                    std::string(by_pi.passed() ? "holds" : "fails") + ", coaction form " +
                                    std::string(by_coaction.passed() ? "holds" : "fails"));
    StrongVerdict v;
    v.strong = by_pi.passed();
    v.report.add(std::move(by_pi));
    v.report.add(std::move(by_coaction));
    return v;
}

FormMap covariant_derivative(const PrincipalBundle& b, const ConnectionForm& w, const FormMap& sigma) {
    const Algebra& p = b.p();
    const std::size_t d = p.dim(), n = sigma.degree;
    const Matrix pi = projection_matrix(b, w.omega);
    std::vector<Vec> theta;
    for (const Vec& t : universal_forms(b.m().algebra, n).space.vectors())
        theta.push_back(embed_form(b.m().inclusion, t, n));
    // Spanning set θ_j·e_k of (ΩⁿM)P and the value of D on each.
    std::size_t amb = 1;
    for (std::size_t k = 0; k <= n; ++k) amb *= d;
    Matrix gens(amb, theta.size() * d);
    std::vector<Vec> images;
    images.reserve(gens.cols());
    std::vector<Vec> hor(d);
    for (std::size_t k = 0; k < d; ++k) {
        Vec dk = d0(p, k);
        hor[k] = dk - pi * dk;
    }
    const Scalar sign = (n % 2 == 0) ? Scalar(1) : Scalar(-1);
    for (std::size_t j = 0; j < theta.size(); ++j) {
        const Vec dtheta = differential_unchecked(p, theta[j], n);
        for (std::size_t k = 0; k < d; ++k) {
            const Vec ek = basis_vec(d, k);
            gens.set_column(j * d + k, form_product(p, theta[j], n, ek, 0));
            Vec v = form_product(p, dtheta, n + 1, ek, 0);
            axpy(v, sign, form_product(p, theta[j], n, hor[k], 1));
            images.push_back(std::move(v));
        }
    }
    Matrix out(amb * d, sigma.values.cols());
    for (std::size_t i = 0; i < sigma.values.cols(); ++i) {
        auto coeffs = solve(gens, sigma.values.column(i));
        if (!coeffs)
            throw InvariantFailure("covariant derivative: value not in (ΩⁿM)P",
                                   render(sigma.values.column(i), StructuredSpace::tensor_power(p.space(), n + 1)));
        Vec acc(amb * d);
        for (const auto& t : sparse(*coeffs)) axpy(acc, t.coeff, images[t.index]);
        out.set_column(i, acc);
    }
    return {std::move(out), n + 1};
}

FormMap covariant_derivative_of_identity(const PrincipalBundle& b, const ConnectionForm& w) {
    const std::size_t d = b.dim_p();
    const Matrix pi = projection_matrix(b, w.omega);
    return {matrix_from(d * d, d, [&](std::size_t u) {
                Vec du = d0(b.p(), u);
                return du - pi * du;
            }),
            1};
}

Report check_strongly_tensorial(const PrincipalBundle& b, const Comodule& v, const FormMap& sigma) {
    Report rep;
    rep.add(check_tensorial("tensorial", b.h(), b.rho(), v, sigma));
    const Subspace hor = sigma.degree == 1 ? b.horizontal : omega_m_p(b.p(), b.m(), sigma.degree);
    rep.add(check_values_in("values in (ΩⁿM)P", sigma, hor, v.space()));
    return rep;
}

}  // namespace ncg
