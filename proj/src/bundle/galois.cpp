#include "ncgauge/bundle/galois.hpp"

#include "ncgauge/foundation/errors.hpp"

namespace ncg {

Matrix galois_map(const Algebra& p, const Comodule& rho) {
    const std::size_t d = p.dim(), dc = rho.coalgebra().dim();
    Matrix chi(d * dc, d * d);
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v)
            for (const auto& t : rho.coact(v)) {
                const std::size_t w = t.index / dc, h = t.index % dc;
                for (const auto& s : p.product(u, w)) chi(s.index * dc + h, u * d + v).add_product(t.coeff, s.coeff);
            }
    return chi;
}

GaloisData galois_data(const Algebra& p, const Comodule& rho, const Vec& e) {
    GaloisData g;
    g.p = p;
    g.rho = rho;
    g.e = e;
    g.m = fixed_subalgebra(p, rho, e);
    g.relations = p_omega1m_p(p, g.m);
    g.over_m = quotient(g.pp(), g.relations);
    g.chi_tilde = galois_map(p, rho);
    const std::size_t d = p.dim(), dc = g.dim_c();

    Subspace im = image(g.chi_tilde);
    if (im.dim() < d * dc) {
        for (std::size_t k = 0; k < d * dc; ++k)
            if (!im.contains(basis_vec(d * dc, k)))
                throw NotFree("χ̃ is not surjective", "missing " + g.pc().label(k));
    }
    for (const Vec& n : g.relations.vectors())
        if (!is_zero(g.chi_tilde * n))
            throw InvariantFailure("χ̃ does not vanish on the relations of P⊗_M P", render(n, g.pp()));

    g.chi = g.chi_tilde * g.over_m.section.matrix;
    Subspace ker = kernel(g.chi);
    if (ker.dim() > 0)
        throw NotGalois("χ is not injective", render(g.over_m.section.matrix * ker.vector(0), g.pp()));
    g.chi_inv = inverse(g.chi);
    Matrix rhs(d * dc, dc);
    for (std::size_t h = 0; h < dc; ++h) rhs.set_column(h, kron(p.unit(), basis_vec(dc, h)));
    g.tau = g.chi_inv * rhs;
    g.tau_lift = g.over_m.section.matrix * g.tau;
    return g;
}

Report check_galois(const GaloisData& g) {
    Report rep;
    const std::size_t q = g.over_m.space.dim(), n = g.chi.rows();
    rep.add(compare_maps("χ∘χ⁻¹ = id", g.chi * g.chi_inv, Matrix::identity(n), g.pc(), g.pc()));
    rep.add(compare_maps("χ⁻¹∘χ = id", g.chi_inv * g.chi, Matrix::identity(q), g.over_m.space, g.over_m.space));
    rep.add(check("χ̃ surjective", rank(g.chi_tilde) == n));
    rep.add(compare_on("χ̃ descends to P⊗_M P", g.chi_tilde, Matrix(n, g.chi_tilde.cols()), g.relations.vectors(),
                       g.pp(), g.pc()));
    Subspace ker = Subspace::span(g.pp(), kernel(g.chi_tilde).vectors());
    CheckResult eq = pass("ker χ̃ = P(Ω¹M)P");
    for (const Vec& v : ker.vectors())
        if (!g.relations.contains(v)) {
            eq = fail(eq.name, Witness{render(v, g.pp()), "in ker χ̃", "not in P(Ω¹M)P"});
            break;
        }
    if (eq.passed())
        for (const Vec& v : g.relations.vectors())
            if (!ker.contains(v)) {
                eq = fail(eq.name, Witness{render(v, g.pp()), "in P(Ω¹M)P", "not in ker χ̃"});
                break;
            }
    rep.add(std::move(eq));
    return rep;
}

Comodule PrincipalBundle::pp_comodule() const { return tensor_comodule(h(), rho(), rho()); }

PrincipalBundle build_bundle(const ComoduleAlgebra& p, std::string name) {
    Report pre = check_comodule_algebra(p);
    if (const CheckResult* f = pre.first_failure())
        throw InvariantFailure("not a comodule algebra: " + f->name, f->witness ? f->witness->element : "");
    PrincipalBundle b;
    b.name = std::move(name);
    b.total = p;
    b.galois = galois_data(p.algebra, p.comodule, p.host.unit());
    b.h_comodules = standard_comodules(p.host);
    b.omega1 = universal_forms(p.algebra, 1).space;
    b.horizontal = omega_m_p(p.algebra, b.galois.m, 1);
    return b;
}

Report check_chi_covariance(const PrincipalBundle& b) {
    Report rep;
    const HopfAlgebra& h = b.h();
    const GaloisData& g = b.galois;
    const std::size_t dh = b.dim_h();
    Comodule flat = trivial_comodule(b.p().space(), h.coalgebra, h.unit());
    const Comodule& rho = b.rho();
    struct Case {
        std::string name, inverse_name;
        Comodule source, target;
    };
    const Case cases[] = {
        {"χ̃: P⊗P_ρ → P⊗H_R", "χ⁻¹: P⊗H_R → P⊗_M P_ρ", tensor_comodule(h, flat, rho), tensor_comodule(h, flat, b.h_comodules.right)},
        {"χ̃: P_ρ⊗P → P_ρ⊗H_L", "χ⁻¹: P_ρ⊗H_L → P_ρ⊗_M P", tensor_comodule(h, rho, flat), tensor_comodule(h, rho, b.h_comodules.left)},
        {"χ̃: P_ρ⊗P_ρ → P_ρ⊗H_Ad", "χ⁻¹: P_ρ⊗H_Ad → P_ρ⊗_M P_ρ", tensor_comodule(h, rho, rho), tensor_comodule(h, rho, b.h_comodules.adjoint)},
    };
    const Matrix proj_h = kron(g.over_m.projection.matrix, Matrix::identity(dh));
    for (const Case& c : cases) {
        rep.add(check_intertwiner(c.name, g.chi_tilde, c.source, c.target));
        // The coaction on P⊗P descends to P⊗_M P; χ⁻¹ must intertwine the induced coaction.
        const std::string& inv = c.inverse_name;
        Matrix lifted = proj_h * c.source.coaction();
        bool descends = true;
        for (const Vec& n : g.relations.vectors())
            if (!is_zero(lifted * n)) {
                rep.add(fail(inv, Witness{render(n, g.pp()), "coaction of relation", "not in relations⊗H"}));
                descends = false;
                break;
            }
        if (!descends) continue;
        Comodule quotient_side(g.over_m.space, h.coalgebra, lifted * g.over_m.section.matrix);
        rep.add(check_intertwiner(inv, g.chi_inv, c.target, quotient_side));
    }
    return rep;
}

}  // namespace ncg
