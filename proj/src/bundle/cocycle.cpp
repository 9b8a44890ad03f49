#include "ncgauge/bundle/cocycle.hpp"

#include "ncgauge/foundation/errors.hpp"

namespace ncg {
namespace {

StructuredSpace cross_space(const Algebra& m, const HopfAlgebra& h) { return StructuredSpace::tensor(m.space(), h.space()); }

}  // namespace

CocycleData trivial_cocycle_data(const Algebra& m, const HopfAlgebra& h) {
    const std::size_t dm = m.dim(), dh = h.dim();
    Matrix c(dm, dh * dh), alpha(dm, dh * dm);
    for (std::size_t a = 0; a < dh; ++a) {
        for (std::size_t b = 0; b < dh; ++b)
            if (!h.counit()[a].is_zero() && !h.counit()[b].is_zero())
                for (std::size_t r = 0; r < dm; ++r) c(r, a * dh + b) = h.counit()[a] * h.counit()[b] * m.unit()[r];
        if (!h.counit()[a].is_zero())
            for (std::size_t n = 0; n < dm; ++n) alpha(n, a * dm + n) = h.counit()[a];
    }
    return {m, h, std::move(c), std::move(alpha)};
}

Matrix cross_product_mult(const CocycleData& data) {
    const Algebra& m = data.m;
    const HopfAlgebra& h = data.h;
    const std::size_t dm = m.dim(), dh = h.dim(), dp = dm * dh;
    if (data.c.rows() != dm || data.c.cols() != dh * dh || data.alpha.rows() != dm || data.alpha.cols() != dh * dm)
        throw DimensionMismatch("cocycle data: c must be M x H², α must be M x (H·M)");
    Matrix mult(dp, dp * dp);
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t a = 0; a < dh; ++a)
            for (std::size_t j = 0; j < dm; ++j)
                for (std::size_t b = 0; b < dh; ++b) {
                    Vec acc(dp);
                    for (const auto& s : h.coalgebra.coproduct3(a)) {
                        const std::size_t a1 = s.index / (dh * dh), a2 = (s.index / dh) % dh, a3 = s.index % dh;
                        const Vec left = m.multiply(basis_vec(dm, i), data.alpha.column(a1 * dm + j));
                        if (is_zero(left)) continue;
                        for (const auto& t : h.coalgebra.coproduct(b)) {
                            const std::size_t b1 = t.index / dh, b2 = t.index % dh;
                            const Vec mc = m.multiply(left, data.c.column(a2 * dh + b1));
                            if (is_zero(mc)) continue;
                            Vec hg(dh);
                            for (const auto& u : h.algebra.product(a3, b2)) hg[u.index] += u.coeff;
                            axpy(acc, s.coeff * t.coeff, kron(mc, hg));
                        }
                    }
                    mult.set_column((i * dh + a) * dp + j * dh + b, acc);
                }
    return mult;
}

CrossProduct cocycle_cross_product(const CocycleData& data, std::string name) {
    const Algebra& m = data.m;
    const HopfAlgebra& h = data.h;
    const std::size_t dm = m.dim(), dh = h.dim(), dp = dm * dh;
    const StructuredSpace space = cross_space(m, h);
    Matrix mult = cross_product_mult(data);
    Algebra p(space, mult, kron(m.unit(), h.unit()));
    for (std::size_t x = 0; x < dp; ++x)
        for (std::size_t y = 0; y < dp; ++y) {
            Vec xy(dp);
            for (const auto& t : p.product(x, y)) xy[t.index] += t.coeff;
            for (std::size_t z = 0; z < dp; ++z) {
                Vec l = p.multiply(xy, basis_vec(dp, z));
                Vec yz(dp);
                for (const auto& t : p.product(y, z)) yz[t.index] += t.coeff;
                Vec r = p.multiply(basis_vec(dp, x), yz);
                if (l != r)
                    throw NotAssociative("cross product not associative",
                                         space.label(x) + ", " + space.label(y) + ", " + space.label(z) + ": " +
                                             render(l, space) + " vs " + render(r, space));
            }
        }
    for (std::size_t x = 0; x < dp; ++x) {
        const Vec e = basis_vec(dp, x);
        if (p.multiply(p.unit(), e) != e || p.multiply(e, p.unit()) != e)
            throw InvariantFailure("1⊗1 is not a unit for the cross product", space.label(x));
    }
    Matrix rho(dp * dh, dp);
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t a = 0; a < dh; ++a)
            for (const auto& t : h.coalgebra.coproduct(a))
                rho((i * dh + t.index / dh) * dh + t.index % dh, i * dh + a) = t.coeff;
    CrossProduct out;
    out.bundle = build_bundle(ComoduleAlgebra{p, h, Comodule(space, h.coalgebra, rho)}, std::move(name));
    out.report.add(pass("cross product associative"));
    out.report.add(pass("cross product unital"));
    const Matrix phi = matrix_from(dp, dh, [&](std::size_t a) { return kron(m.unit(), basis_vec(dh, a)); });
    Report tr = check_trivialisation(out.bundle, phi);
    out.report.append(tr);
    require_passed(tr, "canonical trivialisation");
    out.trivialisation = make_trivialisation(out.bundle, phi);
    // Closed form Φ⁻¹(h) = c⁻¹(Sh₂⊗h₃)⊗Sh₁, with c⁻¹ the inverse of c in Hom(H⊗H, M).
    auto c_inv = ConvolutionAlgebra(Coalgebra::tensor(h.coalgebra, h.coalgebra), m).inverse(data.c);
    if (!c_inv) {
        out.report.add(fail("c convolution-invertible", "no inverse in Hom(H⊗H, M)"));
    } else {
        Matrix closed(dp, dh);
        for (std::size_t a = 0; a < dh; ++a)
            for (const auto& s : h.coalgebra.coproduct3(a)) {
                const std::size_t a1 = s.index / (dh * dh), a2 = (s.index / dh) % dh, a3 = s.index % dh;
                for (std::size_t x = 0; x < dh; ++x) {
                    if (h.antipode(x, a2).is_zero()) continue;
                    const Vec cm = c_inv->column(x * dh + a3);
                    for (std::size_t y = 0; y < dh; ++y) {
                        if (h.antipode(y, a1).is_zero()) continue;
                        const Scalar k = s.coeff * h.antipode(x, a2) * h.antipode(y, a1);
                        for (std::size_t r = 0; r < dm; ++r)
                            if (!cm[r].is_zero()) closed(r * dh + y, a).add_product(k, cm[r]);
                    }
                }
            }
        out.report.add(compare_maps("Φ⁻¹(h) = c⁻¹(Sh₂⊗h₃)⊗Sh₁", out.trivialisation.phi_inv, closed, h.space(), space));
    }
    return out;
}

CocycleData extract_cocycle_data(const PrincipalBundle& b) {
    const HopfAlgebra& h = b.h();
    const Algebra& p = b.p();
    const std::size_t dp = p.dim(), dh = h.dim();
    if (dp % dh != 0) throw NotCanonicalForm("dim P is not a multiple of dim H", std::to_string(dp));
    const std::size_t dm = dp / dh;
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t a = 0; a < dh; ++a) {
            Vec expect(dp * dh);
            for (const auto& t : h.coalgebra.coproduct(a)) expect[(i * dh + t.index / dh) * dh + t.index % dh] = t.coeff;
            if (b.rho().coaction().column(i * dh + a) != expect)
                throw NotCanonicalForm("coaction is not id⊗Δ", p.space().label(i * dh + a));
        }
    // Read the unit of M from 1_P = 1_M⊗1_H.
    std::size_t j = 0;
    while (j < dh && h.unit()[j].is_zero()) ++j;
    Vec um(dm);
    for (std::size_t i = 0; i < dm; ++i) um[i] = p.unit()[i * dh + j] / h.unit()[j];
    if (kron(um, h.unit()) != p.unit()) throw NotCanonicalForm("unit is not of the form 1⊗1", render(p.unit(), p.space()));
    // id⊗ε: M⊗H → M
    Matrix id_eps(dm, dp);
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t a = 0; a < dh; ++a) id_eps(i, i * dh + a) = h.counit()[a];
    auto m_elem = [&](const Vec& m) { return kron(m, h.unit()); };
    auto h_elem = [&](std::size_t a) { return kron(um, basis_vec(dh, a)); };
    Matrix mmult(dm, dm * dm);
    for (std::size_t x = 0; x < dm; ++x)
        for (std::size_t y = 0; y < dm; ++y) {
            Vec prod = p.multiply(m_elem(basis_vec(dm, x)), m_elem(basis_vec(dm, y)));
            Vec coeff = id_eps * prod;
            if (m_elem(coeff) != prod)
                throw NotCanonicalForm("M⊗1 is not closed under the product", std::to_string(x) + "·" + std::to_string(y));
            mmult.set_column(x * dm + y, coeff);
        }
    StructuredSpace mspace = StructuredSpace::numbered(dm, "m");
    if (p.space().dim() == dp) {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < dm; ++i) {
            std::string l = p.space().label(i * dh + j);
            const std::string suffix = "⊗" + h.space().label(j);
            if (l.size() > suffix.size() && l.compare(l.size() - suffix.size(), suffix.size(), suffix) == 0)
                l.resize(l.size() - suffix.size());
            labels.push_back(l);
        }
        mspace = StructuredSpace(std::move(labels));
    }
    CocycleData data{Algebra(mspace, std::move(mmult), um), h, Matrix(dm, dh * dh), Matrix(dm, dh * dm)};
    for (std::size_t a = 0; a < dh; ++a) {
        for (std::size_t c = 0; c < dh; ++c) data.c.set_column(a * dh + c, id_eps * p.multiply(h_elem(a), h_elem(c)));
        for (std::size_t x = 0; x < dm; ++x)
            data.alpha.set_column(a * dm + x, id_eps * p.multiply(h_elem(a), m_elem(basis_vec(dm, x))));
    }
    const Matrix rebuilt = cross_product_mult(data);
    for (std::size_t col = 0; col < dp * dp; ++col)
        if (rebuilt.column(col) != p.mult().column(col))
            throw NotCanonicalForm("product is not of cross-product shape",
                                   p.space().label(col / dp) + "·" + p.space().label(col % dp) + ": " +
                                       render(p.mult().column(col), p.space()) + " vs " +
                                       render(rebuilt.column(col), p.space()));
    return data;
}

}  // namespace ncg
