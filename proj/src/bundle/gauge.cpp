#include "ncgauge/bundle/gauge.hpp"

#include <functional>

#include "ncgauge/foundation/errors.hpp"
#include "ncgauge/local/local.hpp"

namespace ncg {
namespace {

ConvolutionAlgebra hom_hp(const PrincipalBundle& b) { return ConvolutionAlgebra(b.h().coalgebra, b.p()); }

FormMap conv(const PrincipalBundle& b, const FormMap& f, const FormMap& g) {
    return convolve(b.h().coalgebra, b.p(), f, g);
}

CheckResult unit_preserving(std::string name, const PrincipalBundle& b, const Matrix& f) {
    return compare_vectors(std::move(name), "1", f * b.h().unit(), b.p().unit(), b.p().space());
}

CheckResult conv_invertible(std::string name, const PrincipalBundle& b, const Matrix& f) {
    return hom_hp(b).inverse(f) ? pass(std::move(name)) : fail(std::move(name), "no convolution inverse");
}

// Φ(h) = 1⊗h when P is laid out as M⊗H (index m*dim H + h) with coaction id⊗Δ; empty otherwise.
std::optional<Matrix> canonical_candidate(const PrincipalBundle& b) {
    const std::size_t dp = b.dim_p(), dh = b.dim_h();
    if (dp % dh != 0) return std::nullopt;
    const std::size_t dm = dp / dh;
    const Vec& uh = b.h().unit();
    std::size_t j = 0;
    while (j < dh && uh[j].is_zero()) ++j;
    Vec um(dm);
    for (std::size_t m = 0; m < dm; ++m) um[m] = b.p().unit()[m * dh + j] / uh[j];
    if (kron(um, uh) != b.p().unit()) return std::nullopt;
    for (std::size_t m = 0; m < dm; ++m)
        for (std::size_t h = 0; h < dh; ++h) {
            Vec expect(dp * dh);
            for (const auto& t : b.h().coalgebra.coproduct(h))
                expect[(m * dh + t.index / dh) * dh + t.index % dh] = t.coeff;
            if (b.rho().coaction().column(m * dh + h) != expect) return std::nullopt;
        }
    return matrix_from(dp, dh, [&](std::size_t h) { return kron(um, basis_vec(dh, h)); });
}

}  // namespace

Report check_gauge_transform(const PrincipalBundle& b, const Matrix& gamma) {
    Report rep;
    rep.add(unit_preserving("Γ(1) = 1", b, gamma));
    rep.add(check_intertwiner("Γ: H_Ad → P_ρ", gamma, b.h_comodules.adjoint, b.rho()));
    rep.add(conv_invertible("Γ convolution-invertible", b, gamma));
    return rep;
}

GaugeTransform make_gauge_transform(const PrincipalBundle& b, const Matrix& gamma) {
    require_passed(check_gauge_transform(b, gamma), "not a gauge transform");
    return {gamma, *hom_hp(b).inverse(gamma)};
}

GaugeTransform identity_gauge(const PrincipalBundle& b) {
    Matrix e = hom_hp(b).unit();
    return {e, e};
}

Report check_bundle_map(const PrincipalBundle& b, const Matrix& theta) {
    const Algebra& p = b.p();
    Report rep;
    rep.add(compare_vectors("Θ(1) = 1", "1", theta * p.unit(), p.unit(), p.space()));
    rep.add(check_intertwiner("Θ: P_ρ → P_ρ", theta, b.rho(), b.rho()));
    CheckResult lin = pass("Θ left M-linear");
    for (std::size_t k = 0; k < b.m().dim() && lin.passed(); ++k) {
        const Vec m = b.m().inclusion.column(k);
        for (std::size_t u = 0; u < p.dim(); ++u) {
            Vec l = theta * p.multiply(m, basis_vec(p.dim(), u)), r = p.multiply(m, theta.column(u));
            if (l != r) {
                lin = fail(lin.name, Witness{b.m().algebra.space().label(k) + "·" + p.space().label(u), render(l, p.space()),
                                             render(r, p.space())});
                break;
            }
        }
    }
    rep.add(std::move(lin));
    rep.add(check("Θ invertible", rank(theta) == p.dim()));
    return rep;
}

Matrix theta_from_gamma(const PrincipalBundle& b, const GaugeTransform& g) {
    const Algebra& p = b.p();
    const std::size_t d = p.dim(), dh = b.dim_h();
    Matrix theta = matrix_from(d, d, [&](std::size_t u) {
        Vec acc(d);
        for (const auto& t : b.rho().coact(u))
            axpy(acc, t.coeff, p.multiply(basis_vec(d, t.index / dh), g.gamma.column(t.index % dh)));
        return acc;
    });
    require_passed(check_bundle_map(b, theta), "Θ from Γ");
    return theta;
}

GaugeTransform gamma_from_theta(const PrincipalBundle& b, const Matrix& theta) {
    require_passed(check_bundle_map(b, theta), "not a bundle map");
    const Algebra& p = b.p();
    const std::size_t d = p.dim();
    Matrix gamma = matrix_from(d, b.dim_h(), [&](std::size_t h) {
        Vec acc(d);
        for (const auto& t : sparse(b.galois.tau_lift.column(h)))
            axpy(acc, t.coeff, p.multiply(basis_vec(d, t.index / d), theta.column(t.index % d)));
        return acc;
    });
    GaugeTransform g = make_gauge_transform(b, gamma);
    Matrix back = theta_from_gamma(b, g);
    if (back != theta) throw InvariantFailure("Θ → Γ → Θ is not the identity");
    return g;
}

Report check_trivialisation(const PrincipalBundle& b, const Matrix& phi) {
    Report rep;
    rep.add(check_intertwiner("Φ: H_R → P_ρ", phi, b.h_comodules.right, b.rho()));
    rep.add(unit_preserving("Φ(1) = 1", b, phi));
    rep.add(conv_invertible("Φ convolution-invertible", b, phi));
    return rep;
}

Trivialisation make_trivialisation(const PrincipalBundle& b, const Matrix& phi) {
    require_passed(check_trivialisation(b, phi), "not a trivialisation");
    return {phi, *hom_hp(b).inverse(phi)};
}

GaugedBundle bundle_gauge_transform(const PrincipalBundle& b, const GaugeTransform& g) {
    GaugedBundle out;
    out.theta = theta_from_gamma(b, g);
    out.theta_inv = inverse(out.theta);
    const Algebra& p = b.p();
    Matrix mult = out.theta * p.mult() * kron(out.theta_inv, out.theta_inv);
    ComoduleAlgebra pg{Algebra(p.space(), std::move(mult), out.theta * p.unit()), b.h(), b.rho()};
    out.bundle = build_bundle(pg, b.name.empty() ? std::string() : b.name + "^Γ");
    return out;
}

Matrix gauge_field_connection(const PrincipalBundle& b, const Trivialisation& t, const FormMap& a) {
    const FormMap phi{t.phi, 0}, phi_inv{t.phi_inv, 0};
    const FormMap ap{embed_form_map(b.m().inclusion, a.values, 1), 1};
    return (conv(b, phi_inv, differential(b.p(), phi)) + conv(b, conv(b, phi_inv, ap), phi)).values;
}

ConnectionForm connection_from_gauge_field(const PrincipalBundle& b, const Trivialisation& t, const FormMap& a) {
    require_passed(check_gauge_field(b.m().algebra, b.h().coalgebra, b.h().unit(), a), "not a gauge field");
    ConnectionForm w = make_connection(b, gauge_field_connection(b, t, a));
    StrongVerdict v = is_strong(b, w);
    require_passed(v.report, "ω_{A,P,Φ} not strong");
    return w;
}

GaugeTransform global_gauge_from_local(const PrincipalBundle& b, const Trivialisation& t, const Matrix& gamma) {
    local_gauge_inverse(b.m().algebra, b.h().coalgebra, b.h().unit(), gamma);
    const FormMap g{b.m().inclusion * gamma, 0};
    return make_gauge_transform(b, conv(b, conv(b, FormMap{t.phi_inv, 0}, g), FormMap{t.phi, 0}).values);
}

Report check_bundle_gauge_covariance(const PrincipalBundle& b, const GaugeTransform& g, const GaugedBundle& pg,
                                     const std::vector<ConnectionForm>& connections, const Trivialisation* t,
                                     const std::vector<FormMap>& fields) {
    Report rep;
    const PrincipalBundle& q = pg.bundle;
    rep.add(check("P^Γ has the same base algebra",
                  q.m().subspace.contains(b.m().subspace) && b.m().subspace.contains(q.m().subspace) &&
                      q.m().algebra.mult() == b.m().algebra.mult()));
    const Matrix tt = kron(pg.theta, pg.theta);
    const std::vector<Vec> forms = b.omega1.vectors();
    for (std::size_t i = 0; i < connections.size(); ++i) {
        const std::string tag = " [" + std::to_string(i) + "]";
        const Matrix wg = tt * connections[i].omega;
        Report c = check_connection(q, wg);
        rep.add(check("ω^Γ = (Θ⊗Θ)∘ω is a connection on P^Γ" + tag, c.passed(),
                      c.passed() ? std::string() : c.first_failure()->name));
        const Matrix pi = projection_matrix(b, connections[i].omega), pig = projection_matrix(q, wg);
        rep.add(compare_on("(Θ⊗Θ)∘Π = Π^Γ∘(Θ⊗Θ)" + tag, tt * pi, pig * tt, forms, b.galois.pp(), b.galois.pp()));
    }
    if (t) {
        const Matrix phig = pg.theta * t->phi;
        rep.add(compare_maps("Φ^Γ = Θ∘Φ = Φ*Γ", phig, hom_hp(b).product(t->phi, g.gamma), b.h().space(), b.p().space()));
        Report tr = check_trivialisation(q, phig);
        rep.add(check("Φ^Γ is a trivialisation of P^Γ", tr.passed(), tr.passed() ? std::string() : tr.first_failure()->name));
        if (tr.passed()) {
            const Trivialisation tg = make_trivialisation(q, phig);
            for (std::size_t i = 0; i < fields.size(); ++i)
                rep.add(compare_maps("(ω_{A,P,Φ})^Γ = ω_{A,P^Γ,Φ^Γ} [" + std::to_string(i) + "]",
                                     tt * gauge_field_connection(b, *t, fields[i]), gauge_field_connection(q, tg, fields[i]),
                                     b.h().space(), b.galois.pp()));
        }
    }
    return rep;
}

Report check_local_to_global(const PrincipalBundle& b, const Trivialisation& t, const Matrix& gamma,
                             const std::vector<FormMap>& fields) {
    Report rep;
    const GaugeTransform g = global_gauge_from_local(b, t, gamma);
    const GaugedBundle pg = bundle_gauge_transform(b, g);
    const Matrix gp = b.m().inclusion * gamma;
    rep.add(compare_maps("Φ^Γ = γ*Φ", pg.theta * t.phi, hom_hp(b).product(gp, t.phi), b.h().space(), b.p().space()));
    Report tr = check_trivialisation(pg.bundle, t.phi);
    rep.add(check("Φ is a trivialisation of P^Γ", tr.passed(), tr.passed() ? std::string() : tr.first_failure()->name));
    if (!tr.passed()) return rep;
    const Trivialisation tq = make_trivialisation(pg.bundle, t.phi);
    const Algebra& m = b.m().algebra;
    const Matrix gamma_inv = local_gauge_inverse(m, b.h().coalgebra, b.h().unit(), gamma);
    const Matrix tt = kron(pg.theta, pg.theta);
    for (std::size_t i = 0; i < fields.size(); ++i) {
        const FormMap ag = local_gauge_transform(m, b.h().coalgebra, fields[i], gamma, gamma_inv);
        rep.add(compare_maps("(ω_{A,P,Φ})^Γ = ω_{A^γ,P^Γ,Φ} [" + std::to_string(i) + "]",
                             tt * gauge_field_connection(b, t, fields[i]), gauge_field_connection(pg.bundle, tq, ag),
                             b.h().space(), b.galois.pp()));
    }
    return rep;
}

TrivialisationSearch find_trivialisation(const PrincipalBundle& b, std::size_t max_points) {
    TrivialisationSearch out;
    const ConvolutionAlgebra hom = hom_hp(b);
    const std::size_t dp = b.dim_p(), dh = b.dim_h(), n = dp * dh;

    if (auto c = canonical_candidate(b); c && check_trivialisation(b, *c).passed()) {
        out.status = Status::Pass;
        out.found = make_trivialisation(b, *c);
        out.detail = "canonical Φ(h) = 1⊗h";
        return out;
    }
    const Subspace inter = intertwiner_space(b.h_comodules.right, b.rho());
    const Matrix k = inter.columns();
    Matrix unit_cond(dp, n);  // Φ(1) as a function of the flattened Φ
    for (std::size_t r = 0; r < dp; ++r)
        for (std::size_t c = 0; c < dh; ++c) unit_cond(r, r * dh + c) = b.h().unit()[c];
    const Matrix uk = unit_cond * k;
    auto c0 = solve(uk, b.p().unit());
    if (!c0) {
        out.status = Status::Fail;
        out.detail = "no unit-preserving intertwiner H_R → P_ρ";
        return out;
    }
    const Matrix f0 = hom_matrix(k * *c0, dp, dh);
    std::vector<Matrix> dirs;
    for (const Vec& v : kernel(uk).vectors()) dirs.push_back(hom_matrix(k * v, dp, dh));
    const Matrix l0 = hom.left_operator(f0);
    std::vector<Matrix> ls;
    std::vector<std::size_t> degree;
    for (const Matrix& d : dirs) {
        ls.push_back(hom.left_operator(d));
        degree.push_back(rank(ls.back()));
    }
    // det L_Φ has degree ≤ rank(L_i) in s_i, so a grid with rank+1 values per coordinate decides
    // whether it vanishes identically.
    std::size_t grid = 1;
    bool capped = false;
    for (std::size_t t : degree) {
        if (grid > max_points / (t + 1)) {
            capped = true;
            break;
        }
        grid *= t + 1;
    }
    std::size_t evaluated = 0;
    std::vector<long> s(dirs.size(), 0);
    std::optional<Matrix> hit;
    // Points with fewer nonzero coordinates first, each group in lexicographic order.
    std::function<bool(std::size_t, std::size_t)> visit = [&](std::size_t from, std::size_t left) -> bool {
        if (left == 0) {
            if (evaluated >= max_points) return true;
            ++evaluated;
            Matrix l = l0;
            Matrix phi = f0;
            for (std::size_t i = 0; i < dirs.size(); ++i)
                if (s[i] != 0) {
                    l = l + Scalar(s[i]) * ls[i];
                    phi = phi + Scalar(s[i]) * dirs[i];
                }
            if (rank(l) == n) {
                hit = phi;
                return true;
            }
            return false;
        }
        for (std::size_t i = from; i < dirs.size(); ++i)
            for (std::size_t v = 1; v <= degree[i]; ++v) {
                s[i] = static_cast<long>(v);
                if (visit(i + 1, left - 1)) {
                    if (!hit) s[i] = 0;
                    return true;
                }
                s[i] = 0;
            }
        return false;
    };
    for (std::size_t nz = 0; nz <= dirs.size() && !hit && evaluated < max_points; ++nz) visit(0, nz);
    if (hit) {
        out.status = Status::Pass;
        out.found = make_trivialisation(b, *hit);
        out.detail = "found after " + std::to_string(evaluated) + " evaluations";
    } else if (!capped && evaluated == grid) {
        out.status = Status::Fail;
        out.detail = "determinant vanishes on the full grid of " + std::to_string(grid) +
                     " points; no unit-preserving intertwiner is convolution-invertible";
    } else {
        out.status = Status::Undecided;
        out.detail = "no invertible point among " + std::to_string(evaluated) + " evaluations; grid exceeds budget";
    }
    return out;
}

}  // namespace ncg
