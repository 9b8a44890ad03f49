#include "ncgauge/hopf/hopf.hpp"

#include <functional>

#include "ncgauge/foundation/errors.hpp"

namespace ncg {
namespace {

using Eval = std::function<Vec(std::size_t)>;

// Compares lhs(j) and rhs(j) for every index j; stops at the first mismatch.
CheckResult compare_indexed(std::string name, std::size_t count, const StructuredSpace& source,
                            const StructuredSpace& target, const Eval& lhs, const Eval& rhs) {
    for (std::size_t j = 0; j < count; ++j) {
        Vec a = lhs(j), b = rhs(j);
        if (a != b) return fail(std::move(name), Witness{source.label(j), render(a, target), render(b, target)});
    }
    return pass(std::move(name));
}

Vec term_vec(const TermList& t, std::size_t n) {
    Vec v(n);
    for (const auto& x : t) v[x.index] += x.coeff;
    return v;
}

}  // namespace

HopfAlgebra::HopfAlgebra(std::string n, Algebra a, Coalgebra c, Matrix s, std::optional<Matrix> r)
    : name(std::move(n)), algebra(std::move(a)), coalgebra(std::move(c)), antipode(std::move(s)), r_form(std::move(r)) {
    const std::size_t d = algebra.dim();
    if (coalgebra.dim() != d) throw DimensionMismatch("hopf: algebra and coalgebra dimensions differ");
    if (antipode.rows() != d || antipode.cols() != d) throw DimensionMismatch("hopf: antipode has wrong shape");
    if (r_form && (r_form->rows() != d || r_form->cols() != d)) throw DimensionMismatch("hopf: R has wrong shape");
}

std::size_t HopfAlgebra::index_of(const std::string& label) const {
    const auto& l = space().labels();
    for (std::size_t i = 0; i < l.size(); ++i)
        if (l[i] == label) return i;
    throw Error("no basis element named '" + label + "' in " + name);
}

Report check_algebra_axioms(const Algebra& a) {
    Report rep;
    const std::size_t d = a.dim();
    StructuredSpace s3 = StructuredSpace::tensor_power(a.space(), 3);
    rep.add(compare_indexed(
        "associativity", d * d * d, s3, a.space(),
        [&](std::size_t idx) {
            Vec out(d);
            for (const auto& t : a.product(idx / (d * d), (idx / d) % d))
                for (const auto& u : a.product(t.index, idx % d)) out[u.index].add_product(t.coeff, u.coeff);
            return out;
        },
        [&](std::size_t idx) {
            Vec out(d);
            for (const auto& t : a.product((idx / d) % d, idx % d))
                for (const auto& u : a.product(idx / (d * d), t.index)) out[u.index].add_product(t.coeff, u.coeff);
            return out;
        }));
    auto id = [&](std::size_t j) { return basis_vec(d, j); };
    rep.add(compare_indexed("unit (left)", d, a.space(), a.space(),
                            [&](std::size_t j) { return a.multiply(a.unit(), basis_vec(d, j)); }, id));
    rep.add(compare_indexed("unit (right)", d, a.space(), a.space(),
                            [&](std::size_t j) { return a.multiply(basis_vec(d, j), a.unit()); }, id));
    return rep;
}

Report check_coalgebra_axioms(const Coalgebra& c) {
    Report rep;
    const std::size_t d = c.dim();
    StructuredSpace s3 = StructuredSpace::tensor_power(c.space(), 3);
    Matrix eps = Matrix::from_rows(d, {c.counit()});
    rep.add(compare_indexed(
        "coassociativity", d, c.space(), s3, [&](std::size_t i) { return term_vec(c.coproduct3(i), d * d * d); },
        [&](std::size_t i) { return apply_leg(c.comult().column(i), {d, d}, 1, c.comult()); }));
    auto id = [&](std::size_t j) { return basis_vec(d, j); };
    rep.add(compare_indexed("counit (left)", d, c.space(), c.space(),
                            [&](std::size_t i) { return apply_leg(c.comult().column(i), {d, d}, 0, eps); }, id));
    rep.add(compare_indexed("counit (right)", d, c.space(), c.space(),
                            [&](std::size_t i) { return apply_leg(c.comult().column(i), {d, d}, 1, eps); }, id));
    return rep;
}

Report check_hopf_axioms(const HopfAlgebra& h) {
    Report rep;
    rep.append(check_algebra_axioms(h.algebra));
    rep.append(check_coalgebra_axioms(h.coalgebra));
    const std::size_t d = h.dim();
    const Algebra& a = h.algebra;
    const Coalgebra& c = h.coalgebra;
    Algebra hh = Algebra::tensor(a, a);
    StructuredSpace s2 = StructuredSpace::tensor(h.space(), h.space());
    rep.add(compare_indexed(
        "coproduct multiplicative", d * d, s2, s2,
        [&](std::size_t idx) { return c.comultiply(term_vec(a.product(idx / d, idx % d), d)); },
        [&](std::size_t idx) { return hh.multiply(c.comult().column(idx / d), c.comult().column(idx % d)); }));
    rep.add(compare_vectors("coproduct unital", "1", c.comultiply(a.unit()), kron(a.unit(), a.unit()), s2));
    StructuredSpace k = StructuredSpace::ground();
    rep.add(compare_indexed(
        "counit multiplicative", d * d, s2, k,
        [&](std::size_t idx) { return Vec{c.counit(term_vec(a.product(idx / d, idx % d), d))}; },
        [&](std::size_t idx) { return Vec{c.counit()[idx / d] * c.counit()[idx % d]}; }));
    rep.add(compare_vectors("counit unital", "1", Vec{c.counit(a.unit())}, Vec{Scalar(1)}, k));
    ConvolutionAlgebra conv = h.endomorphisms();
    Matrix id = Matrix::identity(d);
    rep.add(compare_maps("antipode (S*id)", conv.product(h.antipode, id), conv.unit(), h.space(), h.space()));
    rep.add(compare_maps("antipode (id*S)", conv.product(id, h.antipode), conv.unit(), h.space(), h.space()));
    return rep;
}

Matrix antipode_inverse(const HopfAlgebra& h) {
    try {
        return inverse(h.antipode);
    } catch (const NotInvertible&) {
        throw NotInvertible("antipode of " + h.name + " is not invertible");
    }
}

Matrix r_as_functional(const Matrix& r) {
    const std::size_t d = r.rows();
    Matrix f(1, d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) f(0, a * d + b) = r(a, b);
    return f;
}

namespace {

std::optional<Matrix> r_inverse(const HopfAlgebra& h, const Matrix& r) {
    ConvolutionAlgebra conv(Coalgebra::tensor(h.coalgebra, h.coalgebra), Algebra::ground());
    auto inv = conv.inverse(r_as_functional(r));
    if (!inv) return std::nullopt;
    const std::size_t d = h.dim();
    Matrix out(d, d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) out(a, b) = (*inv)(0, a * d + b);
    return out;
}

}  // namespace

DualQuasitriangular make_dqt(const HopfAlgebra& h, const Matrix& r) {
    auto inv = r_inverse(h, r);
    if (!inv) throw NotInvertible("R is not convolution-invertible on " + h.name);
    return DualQuasitriangular{h, r, *inv};
}

Report check_dqt(const HopfAlgebra& h, const Matrix& r) {
    Report rep;
    const std::size_t d = h.dim();
    const Algebra& a = h.algebra;
    const Coalgebra& c = h.coalgebra;
    StructuredSpace s3 = StructuredSpace::tensor_power(h.space(), 3);
    StructuredSpace s2 = StructuredSpace::tensor(h.space(), h.space());
    StructuredSpace k = StructuredSpace::ground();
    rep.add(compare_indexed(
        "bicharacter R(ab⊗c)=R(a⊗c1)R(b⊗c2)", d * d * d, s3, k,
        [&](std::size_t idx) {
            Scalar s;
            for (const auto& t : a.product(idx / (d * d), (idx / d) % d)) s.add_product(t.coeff, r(t.index, idx % d));
            return Vec{s};
        },
        [&](std::size_t idx) {
            Scalar s;
            for (const auto& t : c.coproduct(idx % d))
                s.add_product(t.coeff, r(idx / (d * d), t.index / d) * r((idx / d) % d, t.index % d));
            return Vec{s};
        }));
    rep.add(compare_indexed(
        "bicharacter R(a⊗bc)=R(a1⊗c)R(a2⊗b)", d * d * d, s3, k,
        [&](std::size_t idx) {
            Scalar s;
            for (const auto& t : a.product((idx / d) % d, idx % d)) s.add_product(t.coeff, r(idx / (d * d), t.index));
            return Vec{s};
        },
        [&](std::size_t idx) {
            Scalar s;
            for (const auto& t : c.coproduct(idx / (d * d)))
                s.add_product(t.coeff, r(t.index / d, idx % d) * r(t.index % d, (idx / d) % d));
            return Vec{s};
        }));
    auto inv = r_inverse(h, r);
    rep.add(check("R convolution-invertible", inv.has_value()));
    rep.add(compare_indexed(
        "quasi-commutativity b1a1R(a2⊗b2)=R(a1⊗b1)a2b2", d * d, s2, h.space(),
        [&](std::size_t idx) {
            Vec out(d);
            for (const auto& s : c.coproduct(idx / d))
                for (const auto& t : c.coproduct(idx % d)) {
                    Scalar w = s.coeff * t.coeff * r(s.index % d, t.index % d);
                    if (w.is_zero()) continue;
                    for (const auto& p : a.product(t.index / d, s.index / d)) out[p.index].add_product(w, p.coeff);
                }
            return out;
        },
        [&](std::size_t idx) {
            Vec out(d);
            for (const auto& s : c.coproduct(idx / d))
                for (const auto& t : c.coproduct(idx % d)) {
                    Scalar w = s.coeff * t.coeff * r(s.index / d, t.index / d);
                    if (w.is_zero()) continue;
                    for (const auto& p : a.product(s.index % d, t.index % d)) out[p.index].add_product(w, p.coeff);
                }
            return out;
        }));
    return rep;
}

HopfAlgebra dualize(const HopfAlgebra& h) {
    std::vector<std::string> labels;
    for (const auto& l : h.space().labels()) labels.push_back(l + "*");
    StructuredSpace s(std::move(labels));
    Algebra a(s, h.coalgebra.comult().transpose(), h.coalgebra.counit());
    Coalgebra c(s, h.algebra.mult().transpose(), h.algebra.unit());
    return HopfAlgebra(h.name + "*", a, c, h.antipode.transpose());
}

}  // namespace ncg
