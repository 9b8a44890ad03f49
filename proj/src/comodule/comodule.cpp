#include "ncgauge/comodule/comodule.hpp"

#include <functional>

#include "ncgauge/foundation/errors.hpp"

namespace ncg {

Comodule::Comodule(StructuredSpace space, Coalgebra coalgebra, Matrix coaction) {
    const std::size_t dv = space.dim(), dc = coalgebra.dim();
    if (coaction.rows() != dv * dc || coaction.cols() != dv)
        throw DimensionMismatch("comodule: coaction must be (dim V * dim C) x dim V");
    auto table = sparse_columns(coaction);
    impl_ = std::make_shared<const Impl>(
        Impl{std::move(space), std::move(coalgebra), std::move(coaction), std::move(table)});
}

Report check_comodule(const Comodule& v) {
    Report rep;
    const std::size_t dv = v.dim(), dc = v.coalgebra().dim();
    StructuredSpace vcc = StructuredSpace::tensor(StructuredSpace::tensor(v.space(), v.coalgebra().space()),
                                                  v.coalgebra().space());
    Matrix lhs(dv * dc * dc, dv), rhs(dv * dc * dc, dv), eps(1, dc);
    for (std::size_t c = 0; c < dc; ++c) eps(0, c) = v.coalgebra().counit()[c];
    Matrix counit_side(dv, dv);
    for (std::size_t i = 0; i < dv; ++i) {
        Vec r = v.coaction().column(i);
        lhs.set_column(i, apply_leg(r, {dv, dc}, 0, v.coaction()));
        rhs.set_column(i, apply_leg(r, {dv, dc}, 1, v.coalgebra().comult()));
        counit_side.set_column(i, apply_leg(r, {dv, dc}, 1, eps));
    }
    rep.add(compare_maps("coaction coassociative", lhs, rhs, v.space(), vcc));
    rep.add(compare_maps("coaction counital", counit_side, Matrix::identity(dv), v.space(), v.space()));
    return rep;
}

Comodule trivial_comodule(const StructuredSpace& space, const Coalgebra& c, const Vec& e) {
    const std::size_t dv = space.dim();
    return Comodule(space, c, matrix_from(dv * c.dim(), dv, [&](std::size_t i) { return kron(basis_vec(dv, i), e); }));
}

ComoduleAlgebra regular_comodule_algebra(const HopfAlgebra& h) {
    return {h.algebra, h, Comodule(h.space(), h.coalgebra, h.coalgebra.comult())};
}

Report check_comodule_algebra(const ComoduleAlgebra& p) {
    Report rep = check_comodule(p.comodule);
    const Algebra& a = p.algebra;
    const Algebra& h = p.host.algebra;
    const std::size_t d = a.dim();
    if (p.comodule.dim() != d) throw DimensionMismatch("comodule algebra: algebra and comodule differ in dimension");
    StructuredSpace ph = StructuredSpace::tensor(a.space(), h.space());
    const Matrix& rho = p.comodule.coaction();
    CheckResult mult = pass("coaction multiplicative");
    for (std::size_t i = 0; i < d && mult.passed(); ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec prod(d);
            for (const auto& t : a.product(i, j)) prod[t.index] += t.coeff;
            Vec l = rho * prod, r = tensor_multiply(a, h, rho.column(i), rho.column(j));
            if (l != r) {
                mult = fail("coaction multiplicative",
                            Witness{a.space().label(i) + "⊗" + a.space().label(j), render(l, ph), render(r, ph)});
                break;
            }
        }
    rep.add(std::move(mult));
    rep.add(compare_vectors("coaction unital", "1", rho * a.unit(), kron(a.unit(), h.unit()), ph));
    return rep;
}

Vec FixedSubalgebra::coordinates(const Vec& u) const {
    auto c = subspace.coordinates(u);
    if (!c) throw InvariantFailure("element is not in the fixed subalgebra", render(u, subspace.ambient()));
    return *c;
}

FixedSubalgebra fixed_subalgebra(const Algebra& p, const Comodule& rho, const Vec& e) {
    const std::size_t d = p.dim();
    Matrix shifted = rho.coaction();
    const std::size_t dc = rho.coalgebra().dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t c = 0; c < dc; ++c)
            if (!e[c].is_zero()) shifted(i * dc + c, i) -= e[c];
    FixedSubalgebra m;
    m.subspace = kernel(shifted);
    m.subspace = Subspace::span(p.space(), m.subspace.vectors());
    m.inclusion = m.subspace.columns();
    const std::size_t k = m.subspace.dim();
    std::vector<std::string> labels;
    for (const Vec& v : m.subspace.vectors()) {
        std::string l = render(v, p.space());
        labels.push_back(l.find(' ') == std::string::npos ? l : "(" + l + ")");
    }
    Matrix mult(k, k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Vec prod = p.multiply(m.inclusion.column(i), m.inclusion.column(j));
            auto c = m.subspace.coordinates(prod);
            if (!c)
                throw InvariantFailure("fixed subspace is not closed under the product",
                                       labels[i] + "·" + labels[j] + " = " + render(prod, p.space()));
            mult.set_column(i * k + j, *c);
        }
    auto unit = m.subspace.coordinates(p.unit());
    if (!unit) throw InvariantFailure("unit is not fixed by the coaction", render(p.unit(), p.space()));
    m.algebra = Algebra(StructuredSpace(std::move(labels)), std::move(mult), std::move(*unit));
    return m;
}

FixedSubalgebra fixed_subalgebra(const ComoduleAlgebra& p) {
    return fixed_subalgebra(p.algebra, p.comodule, p.host.unit());
}

StandardComodules standard_comodules(const HopfAlgebra& h) {
    const std::size_t d = h.dim();
    const Coalgebra& c = h.coalgebra;
    Matrix left(d * d, d), adj(d * d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (const auto& t : c.coproduct(i)) {
            const std::size_t a = t.index / d, b = t.index % d;
            for (std::size_t s = 0; s < d; ++s)
                if (!h.antipode(s, a).is_zero()) left(b * d + s, i) += t.coeff * h.antipode(s, a);
        }
        for (const auto& t : c.coproduct3(i)) {
            const std::size_t a = t.index / (d * d), b = (t.index / d) % d, e = t.index % d;
            for (std::size_t s = 0; s < d; ++s) {
                if (h.antipode(s, a).is_zero()) continue;
                Scalar w = t.coeff * h.antipode(s, a);
                for (const auto& p : h.algebra.product(s, e)) adj(b * d + p.index, i).add_product(w, p.coeff);
            }
        }
    }
    StandardComodules out{Comodule(h.space(), c, c.comult()), Comodule(h.space(), c, std::move(left)),
                          Comodule(h.space(), c, std::move(adj))};
    for (const auto* m : {&out.right, &out.left, &out.adjoint}) {
        Report r = check_comodule(*m);
        if (const CheckResult* f = r.first_failure())
            throw InvariantFailure("standard comodule of " + h.name + ": " + f->name,
                                   f->witness ? f->witness->element : std::string());
    }
    return out;
}

Comodule tensor_comodule(const HopfAlgebra& h, const Comodule& v, const Comodule& w) {
    const std::size_t dv = v.dim(), dw = w.dim(), dh = h.dim();
    if (v.coalgebra().dim() != dh || w.coalgebra().dim() != dh)
        throw DimensionMismatch("tensor_comodule: comodules over different coalgebras");
    Matrix rho(dv * dw * dh, dv * dw);
    for (std::size_t i = 0; i < dv; ++i)
        for (std::size_t j = 0; j < dw; ++j)
            for (const auto& s : v.coact(i))
                for (const auto& t : w.coact(j)) {
                    Scalar st = s.coeff * t.coeff;
                    const std::size_t row0 = ((s.index / dh) * dw + t.index / dh) * dh;
                    for (const auto& p : h.algebra.product(s.index % dh, t.index % dh))
                        rho(row0 + p.index, i * dw + j).add_product(st, p.coeff);
                }
    return Comodule(StructuredSpace::tensor(v.space(), w.space()), h.coalgebra, std::move(rho));
}

Vec coact_tensor_power(const HopfAlgebra& h, const Comodule& v, const Vec& x, std::size_t legs) {
    const std::size_t dv = v.dim(), dh = h.dim();
    std::size_t n = 1;
    for (std::size_t k = 0; k < legs; ++k) n *= dv;
    if (x.size() != n) throw DimensionMismatch("coact_tensor_power: wrong tensor length");
    Vec out(n * dh);
    std::vector<std::size_t> digits(legs);
    // Expand leg by leg, carrying the running product of the H factors.
    std::function<void(std::size_t, std::size_t, const TermList&)> expand = [&](std::size_t leg, std::size_t idx,
                                                                                 const TermList& acc) {
        if (leg == legs) {
            for (const auto& t : acc) out[idx * dh + t.index] += t.coeff;
            return;
        }
        for (const auto& s : v.coact(digits[leg])) {
            const std::size_t c = s.index % dh;
            Vec next(dh);
            for (const auto& a : acc)
                for (const auto& p : h.algebra.product(a.index, c)) next[p.index].add_product(a.coeff * s.coeff, p.coeff);
            TermList nt = sparse(next);
            if (!nt.empty()) expand(leg + 1, idx * dv + s.index / dh, nt);
        }
    };
    for (const auto& t : sparse(x)) {
        std::size_t rest = t.index;
        for (std::size_t k = legs; k-- > 0;) {
            digits[k] = rest % dv;
            rest /= dv;
        }
        TermList start;
        for (const auto& u : sparse(h.unit())) start.push_back({u.index, u.coeff * t.coeff});
        expand(0, 0, start);
    }
    return out;
}

Matrix hom_matrix(const Vec& flat, std::size_t rows, std::size_t cols) {
    if (flat.size() != rows * cols) throw DimensionMismatch("hom_matrix: wrong length");
    Matrix m(rows, cols);
    m.data() = flat;
    return m;
}

Vec hom_vector(const Matrix& f) { return f.data(); }

Subspace intertwiner_space(const Comodule& v, const Comodule& w) {
    const std::size_t dv = v.dim(), dw = w.dim(), dc = v.coalgebra().dim();
    if (w.coalgebra().dim() != dc) throw DimensionMismatch("intertwiner_space: comodules over different coalgebras");
    // One block per source basis vector: (f⊗id)ρ_V(e_i) − ρ_W(f e_i) = 0 in W⊗C.
    return kernel_by_blocks(StructuredSpace::numbered(dw * dv, "f"), dv, [&](std::size_t i) {
        Matrix b(dw * dc, dw * dv);
        for (const auto& t : v.coact(i)) {
            const std::size_t vi = t.index / dc, c = t.index % dc;
            for (std::size_t x = 0; x < dw; ++x) b(x * dc + c, x * dv + vi) += t.coeff;
        }
        for (std::size_t x = 0; x < dw; ++x)
            for (const auto& t : w.coact(x)) b(t.index, x * dv + i) -= t.coeff;
        return b;
    });
}

CheckResult check_intertwiner(std::string name, const Matrix& f, const Comodule& v, const Comodule& w) {
    const std::size_t dv = v.dim(), dc = v.coalgebra().dim();
    StructuredSpace wc = StructuredSpace::tensor(w.space(), w.coalgebra().space());
    Matrix lhs(w.dim() * dc, dv);
    for (std::size_t i = 0; i < dv; ++i) lhs.set_column(i, apply_leg(v.coaction().column(i), {dv, dc}, 0, f));
    return compare_maps(std::move(name), lhs, w.coaction() * f, v.space(), wc);
}

PointedComodule make_pointed(const Comodule& v, const Vec& one, const Vec& e) {
    if (v.apply(one) != kron(one, e))
        throw InvariantFailure("distinguished vector is not fixed by the coaction", render(one, v.space()));
    return PointedComodule{v, one};
}

}  // namespace ncg
