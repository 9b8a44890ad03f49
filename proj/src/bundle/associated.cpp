#include "ncgauge/bundle/associated.hpp"

#include "ncgauge/foundation/errors.hpp"

namespace ncg {
namespace {

StructuredSpace pv_space(const AssociatedBundle& e) { return e.pv.space(); }

Vec e_coords(const AssociatedBundle& e, const Vec& x) {
    auto c = e.e.coordinates(x);
    if (!c) throw InvariantFailure("element is not in E", render(x, e.pv.space()));
    return *c;
}

// ((m·)⊗id) on P⊗V
Vec left_act(const PrincipalBundle& b, const Vec& m, const Vec& x, std::size_t dv) {
    return apply_leg(x, {b.dim_p(), dv}, 0, b.p().left_mult(m));
}

// Σ_c S⁻¹ applied to the H-leg of ρ_V(v), then f on the H-leg, paired with v⁽¹⁾: f(S⁻¹v⁽²⁾)⊗v⁽¹⁾.
Vec twisted(const PrincipalBundle& b, const Matrix& s_inv, const Comodule& v, std::size_t i, const Matrix& f) {
    const std::size_t dh = b.dim_h(), dv = v.dim();
    Vec out(f.rows() * dv);
    for (const auto& t : v.coact(i)) {
        const std::size_t w = t.index / dh, c = t.index % dh;
        for (std::size_t h = 0; h < dh; ++h) {
            if (s_inv(h, c).is_zero()) continue;
            axpy(out, t.coeff * s_inv(h, c), kron(f.column(h), basis_vec(dv, w)));
        }
    }
    return out;
}

}  // namespace

AssociatedBundle associated_bundle(const PrincipalBundle& b, const PointedComodule& v) {
    AssociatedBundle out;
    out.v = v;
    out.pv = tensor_comodule(b.h(), b.rho(), v.comodule);
    const std::size_t n = out.pv.dim(), dh = b.dim_h(), dv = v.comodule.dim();
    Matrix shifted = out.pv.coaction();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < dh; ++c)
            if (!b.h().unit()[c].is_zero()) shifted(i * dh + c, i) -= b.h().unit()[c];
    out.e = Subspace::span(out.pv.space(), kernel(shifted).vectors());
    out.basis = out.e.columns();
    const FixedSubalgebra& m = b.m();
    CheckResult contains = pass("M⊗1 ⊆ E");
    for (std::size_t k = 0; k < m.dim(); ++k) {
        Vec x = kron(m.inclusion.column(k), v.one);
        if (!out.e.contains(x)) {
            contains = fail(contains.name, Witness{m.algebra.space().label(k) + "⊗1", render(x, out.pv.space()), "not invariant"});
            break;
        }
    }
    out.report.add(std::move(contains));
    CheckResult closed = pass("E closed under left multiplication by M");
    for (std::size_t k = 0; k < m.dim(); ++k) {
        Matrix act(out.dim(), out.dim());
        for (std::size_t j = 0; j < out.dim() && closed.passed(); ++j) {
            Vec y = left_act(b, m.inclusion.column(k), out.basis.column(j), dv);
            auto c = out.e.coordinates(y);
            if (!c) {
                closed = fail(closed.name, Witness{m.algebra.space().label(k) + "·" + render(out.basis.column(j), out.pv.space()),
                                                   render(y, out.pv.space()), "not in E"});
                break;
            }
            act.set_column(j, *c);
        }
        out.m_action.push_back(std::move(act));
    }
    out.report.add(std::move(closed));
    return out;
}

Report check_section(const PrincipalBundle& b, const AssociatedBundle& e, const Matrix& s) {
    const FixedSubalgebra& m = b.m();
    if (s.rows() != m.dim() || s.cols() != e.dim()) throw DimensionMismatch("section must be dim M x dim E");
    Report rep;
    const Vec one = e_coords(e, kron(b.p().unit(), e.v.one));
    rep.add(compare_vectors("s(1⊗1) = 1", "1⊗1", s * one, m.algebra.unit(), m.algebra.space()));
    CheckResult lin = pass("s left M-linear");
    for (std::size_t k = 0; k < m.dim() && lin.passed(); ++k) {
        const Matrix mk = m.algebra.left_mult(basis_vec(m.dim(), k));
        for (std::size_t j = 0; j < e.dim(); ++j) {
            Vec l = s * e.m_action[k].column(j), r = mk * s.column(j);
            if (l != r) {
                lin = fail(lin.name, Witness{m.algebra.space().label(k) + "·" + render(e.basis.column(j), pv_space(e)),
                                             render(l, m.algebra.space()), render(r, m.algebra.space())});
                break;
            }
        }
    }
    rep.add(std::move(lin));
    return rep;
}

Report check_pseudotensorial(const PrincipalBundle& b, const AssociatedBundle& e, const Matrix& sigma) {
    Report rep;
    rep.add(check_intertwiner("Σ: V → P_ρ", sigma, e.v.comodule, b.rho()));
    rep.add(compare_vectors("Σ(1) = 1", "1", sigma * e.v.one, b.p().unit(), b.p().space()));
    return rep;
}

Matrix section_from_sigma(const PrincipalBundle& b, const AssociatedBundle& e, const Matrix& sigma) {
    const std::size_t dp = b.dim_p(), dv = e.dim_v();
    return matrix_from(b.m().dim(), e.dim(), [&](std::size_t j) {
        Vec acc(dp);
        for (const auto& t : sparse(e.basis.column(j)))
            axpy(acc, t.coeff, b.p().multiply(basis_vec(dp, t.index / dv), sigma.column(t.index % dv)));
        return b.m().coordinates(acc);
    });
}

Matrix sigma_from_section(const PrincipalBundle& b, const AssociatedBundle& e, const Matrix& s) {
    const std::size_t dp = b.dim_p(), dv = e.dim_v();
    const Matrix s_inv = antipode_inverse(b.h());
    // Spanning set of P⊗E + P(Ω¹M)P⊗V inside P⊗P⊗V.
    const std::vector<Vec> rel = b.galois.relations.vectors();
    Matrix gens(dp * dp * dv, dp * e.dim() + rel.size() * dv);
    for (std::size_t a = 0; a < dp; ++a)
        for (std::size_t j = 0; j < e.dim(); ++j) gens.set_column(a * e.dim() + j, kron(basis_vec(dp, a), e.basis.column(j)));
    for (std::size_t r = 0; r < rel.size(); ++r)
        for (std::size_t w = 0; w < dv; ++w) gens.set_column(dp * e.dim() + r * dv + w, kron(rel[r], basis_vec(dv, w)));
    const Matrix values = b.m().inclusion * s;  // s(x_j) as elements of P
    return matrix_from(dp, dv, [&](std::size_t v) {
        const Vec y = twisted(b, s_inv, e.v.comodule, v, b.galois.tau_lift);
        auto c = solve(gens, y);
        if (!c) throw InvariantFailure("τ(S⁻¹v⁽²⁾)⊗v⁽¹⁾ does not lie in P⊗_M E", e.v.comodule.space().label(v));
        Vec acc(dp);
        for (const auto& t : sparse(*c)) {
            if (t.index >= dp * e.dim()) continue;
            const std::size_t a = t.index / e.dim(), j = t.index % e.dim();
            axpy(acc, t.coeff, b.p().multiply(basis_vec(dp, a), values.column(j)));
        }
        return acc;
    });
}

std::optional<AffineFamily> section_space(const PrincipalBundle& b, const AssociatedBundle& e) {
    const FixedSubalgebra& m = b.m();
    const std::size_t dm = m.dim(), de = e.dim(), n = dm * de;
    Matrix a(dm * dm * de + dm, n);
    Vec rhs(a.rows());
    for (std::size_t k = 0; k < dm; ++k) {
        const Matrix mk = m.algebra.left_mult(basis_vec(dm, k));
        for (std::size_t j = 0; j < de; ++j) {
            const std::size_t row0 = (k * de + j) * dm;
            // s(m_k·x_j) − m_k s(x_j) = 0
            for (std::size_t r = 0; r < dm; ++r) {
                for (std::size_t i = 0; i < de; ++i) a(row0 + r, r * de + i) += e.m_action[k](i, j);
                for (std::size_t q = 0; q < dm; ++q) a(row0 + r, q * de + j) -= mk(r, q);
            }
        }
    }
    const Vec one = e_coords(e, kron(b.p().unit(), e.v.one));
    const std::size_t off = dm * dm * de;
    for (std::size_t r = 0; r < dm; ++r) {
        for (std::size_t i = 0; i < de; ++i) a(off + r, r * de + i) = one[i];
        rhs[off + r] = m.algebra.unit()[r];
    }
    return affine_family(Matrix::identity(n), a, rhs, dm, de);
}

std::optional<AffineFamily> pseudotensorial_space(const PrincipalBundle& b, const AssociatedBundle& e) {
    const std::size_t dp = b.dim_p(), dv = e.dim_v();
    const Matrix k = intertwiner_space(e.v.comodule, b.rho()).columns();
    Matrix a(dp, dp * dv);
    for (std::size_t r = 0; r < dp; ++r)
        for (std::size_t v = 0; v < dv; ++v) a(r, r * dv + v) = e.v.one[v];
    return affine_family(k, a, b.p().unit(), dp, dv);
}

Report check_section_correspondence(const PrincipalBundle& b, const AssociatedBundle& e, const Matrix& sigma) {
    Report rep;
    rep.append(check_pseudotensorial(b, e, sigma));
    const Matrix s = section_from_sigma(b, e, sigma);
    rep.append(check_section(b, e, s));
    const Matrix back = sigma_from_section(b, e, s);
    rep.add(compare_maps("Σ → s → Σ", back, sigma, e.v.comodule.space(), b.p().space()));
    rep.add(compare_maps("s → Σ → s", section_from_sigma(b, e, back), s, StructuredSpace::numbered(e.dim(), "x"),
                         b.m().algebra.space()));
    return rep;
}

Matrix fibre_trivialisation(const PrincipalBundle& b, const AssociatedBundle& e, const Trivialisation& t) {
    const Matrix s_inv = antipode_inverse(b.h());
    return matrix_from(e.pv.dim(), e.dim_v(), [&](std::size_t v) { return twisted(b, s_inv, e.v.comodule, v, t.phi); });
}

Report check_fibre_trivialisation(const PrincipalBundle& b, const AssociatedBundle& e, const Trivialisation& t) {
    Report rep;
    const Matrix phi_e = fibre_trivialisation(b, e, t);
    const std::size_t dm = b.m().dim(), dv = e.dim_v();
    CheckResult in_e = pass("Φ_E(V) ⊂ E");
    for (std::size_t v = 0; v < dv; ++v)
        if (!e.e.contains(phi_e.column(v))) {
            in_e = fail(in_e.name, Witness{e.v.comodule.space().label(v), render(phi_e.column(v), pv_space(e)), "not invariant"});
            break;
        }
    rep.add(std::move(in_e));
    if (!rep.passed()) return rep;
    Matrix map(e.dim(), dm * dv);
    for (std::size_t k = 0; k < dm; ++k)
        for (std::size_t v = 0; v < dv; ++v)
            map.set_column(k * dv + v, e_coords(e, left_act(b, b.m().inclusion.column(k), phi_e.column(v), dv)));
    rep.add(check("m⊗v ↦ mΦ_E(v) bijective M⊗V → E", map.rows() == map.cols() && rank(map) == map.rows(),
                  "dim E = " + std::to_string(e.dim()) + ", dim M⊗V = " + std::to_string(dm * dv)));
    return rep;
}

}  // namespace ncg
