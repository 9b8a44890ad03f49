#include "ncgauge/braided/braided.hpp"

#include "ncgauge/foundation/errors.hpp"
#include "ncgauge/hopf/presentation.hpp"

namespace ncg {

namespace {

StructuredSpace tensor3(const StructuredSpace& a, const StructuredSpace& b, const StructuredSpace& c) {
    return StructuredSpace::tensor(StructuredSpace::tensor(a, b), c);
}

Comodule ground_comodule(const HopfAlgebra& h) {
    return trivial_comodule(StructuredSpace::ground(), h.coalgebra, h.unit());
}

Scalar power(const Scalar& q, int k) {
    Scalar r(1);
    for (int i = 0; i < k; ++i) r *= q;
    return r;
}

// Ψ or Ψ⁻¹ built from the pairing `r` on the coaction legs.
Matrix braid_matrix(const HopfAlgebra& h, const Comodule& v, const Comodule& w, const Matrix& r, bool inverse_order) {
    const std::size_t dv = v.dim(), dw = w.dim(), dh = h.dim();
    Matrix m(dw * dv, dv * dw);
    if (inverse_order) m = Matrix(dv * dw, dw * dv);
    for (std::size_t i = 0; i < dv; ++i)
        for (std::size_t j = 0; j < dw; ++j)
            for (const auto& tv : v.coact(i))
                for (const auto& tw : w.coact(j)) {
                    const Scalar& rab = r(tv.index % dh, tw.index % dh);
                    if (rab.is_zero()) continue;
                    const std::size_t vi = tv.index / dh, wj = tw.index / dh;
                    const Scalar c = tv.coeff * tw.coeff;
                    if (inverse_order)
                        m(vi * dw + wj, j * dv + i).add_product(c, rab);
                    else
                        m(wj * dv + vi, i * dw + j).add_product(c, rab);
                }
    return m;
}

Matrix counit_row(const Coalgebra& c) { return Matrix::from_rows(c.dim(), {c.counit()}); }

// Value of f on every basis vector of a product space, as a matrix.
template <class Fn>
Matrix tabulate(std::size_t rows, std::size_t cols, Fn&& fn) {
    return matrix_from(rows, cols, [&](std::size_t j) { return fn(basis_vec(cols, j)); });
}

Comodule regular_b(const BraidedGroup& b) { return Comodule(b.space(), b.coalgebra, b.coalgebra.comult()); }

Vec coact_pp(const BraidedBundle& b, const std::vector<TermList>& psi_bp, const Vec& x) {
    const std::size_t dp = b.dim_p(), db = b.dim_b();
    Vec out(dp * dp * db);
    for (std::size_t idx = 0; idx < x.size(); ++idx) {
        if (x[idx].is_zero()) continue;
        for (const auto& t1 : b.rho.coact(idx / dp))
            for (const auto& t2 : b.rho.coact(idx % dp)) {
                const std::size_t u = t1.index / db, c = t1.index % db;
                const std::size_t v = t2.index / db, c2 = t2.index % db;
                const Scalar s = x[idx] * t1.coeff * t2.coeff;
                for (const auto& tp : psi_bp[c * dp + v]) {
                    const std::size_t v2 = tp.index / db, c1 = tp.index % db;
                    for (const auto& tm : b.fibre.algebra.product(c1, c2))
                        out[(u * dp + v2) * db + tm.index].add_product(s * tp.coeff, tm.coeff);
                }
            }
    }
    return out;
}

std::vector<TermList> psi_b_p(const BraidedBundle& b) {
    return sparse_columns(braiding(b.cat, b.fibre.coaction, b.total.comodule).psi);
}

}  // namespace

BraidedCategory braided_category(const HopfAlgebra& h, const Matrix& r) {
    Report rep = check_dqt(h, r);
    if (const CheckResult* f = rep.first_failure())
        throw InvariantFailure("not dual-quasitriangular: " + f->name, f->witness ? f->witness->element : "");
    return {h, make_dqt(h, r)};
}

BraidedCategory braided_category(const HopfAlgebra& h) {
    if (!h.r_form) throw InvariantFailure(h.name + " carries no dual-quasitriangular structure");
    return braided_category(h, *h.r_form);
}

BraidedCategory trivial_braided_category(const HopfAlgebra& h) {
    const Vec& e = h.counit();
    return braided_category(h, matrix_from(h.dim(), h.dim(), [&](std::size_t j) { return e[j] * e; }));
}

Comodule graded_comodule(const HopfAlgebra& h, const StructuredSpace& space, const std::vector<std::size_t>& grouplike) {
    if (grouplike.size() != space.dim()) throw DimensionMismatch("graded_comodule: one degree per basis vector");
    const std::size_t d = space.dim(), dh = h.dim();
    Matrix co(d * dh, d);
    for (std::size_t i = 0; i < d; ++i) co(i * dh + grouplike[i], i) = 1;
    Comodule v(space, h.coalgebra, std::move(co));
    require_passed(check_comodule(v), "graded_comodule");
    return v;
}

Braiding braiding(const BraidedCategory& cat, const Comodule& v, const Comodule& w) {
    Braiding out{braid_matrix(cat.h, v, w, cat.r.r, false), braid_matrix(cat.h, v, w, cat.r.r_inv, true)};
    if (out.psi * out.psi_inv != Matrix::identity(w.dim() * v.dim()) ||
        out.psi_inv * out.psi != Matrix::identity(v.dim() * w.dim()))
        throw InternalInconsistency("braiding built from R⁻¹ does not invert Ψ");
    return out;
}

Report check_hexagons(const BraidedCategory& cat, const Comodule& u, const Comodule& v, const Comodule& w) {
    Report rep;
    const HopfAlgebra& h = cat.h;
    const std::size_t du = u.dim(), dv = v.dim(), dw = w.dim();
    const Matrix iu = Matrix::identity(du), iv = Matrix::identity(dv), iw = Matrix::identity(dw);
    const Matrix uv = braiding(cat, u, v).psi, uw = braiding(cat, u, w).psi, vw = braiding(cat, v, w).psi;
    const StructuredSpace src = tensor3(u.space(), v.space(), w.space());
    rep.add(compare_maps("hexagon Ψ_{U⊗V,W}", braiding(cat, tensor_comodule(h, u, v), w).psi,
                         kron(uw, iv) * kron(iu, vw), src, tensor3(w.space(), u.space(), v.space())));
    rep.add(compare_maps("hexagon Ψ_{U,V⊗W}", braiding(cat, u, tensor_comodule(h, v, w)).psi,
                         kron(iv, uw) * kron(uv, iw), src, tensor3(v.space(), w.space(), u.space())));
    rep.add(compare_maps("Yang-Baxter", kron(vw, iu) * kron(iv, uw) * kron(uv, iw),
                         kron(iw, uv) * kron(uw, iv) * kron(iu, vw), src, tensor3(w.space(), v.space(), u.space())));
    rep.add(check_intertwiner("Ψ_{U,V} is a morphism", uv, tensor_comodule(h, u, v), tensor_comodule(h, v, u)));
    return rep;
}

Report check_naturality(const BraidedCategory& cat, const Matrix& f, const Comodule& v, const Comodule& v2,
                        const Comodule& w) {
    Report rep;
    const Matrix iw = Matrix::identity(w.dim());
    rep.add(check_intertwiner("f is a morphism", f, v, v2));
    rep.add(compare_maps("Ψ(f⊗id) = (id⊗f)Ψ", braiding(cat, v2, w).psi * kron(f, iw),
                         kron(iw, f) * braiding(cat, v, w).psi, StructuredSpace::tensor(v.space(), w.space()),
                         StructuredSpace::tensor(w.space(), v2.space())));
    rep.add(compare_maps("Ψ(id⊗f) = (f⊗id)Ψ", braiding(cat, w, v2).psi * kron(iw, f),
                         kron(f, iw) * braiding(cat, w, v).psi, StructuredSpace::tensor(w.space(), v.space()),
                         StructuredSpace::tensor(v2.space(), w.space())));
    return rep;
}

ComoduleAlgebra braided_tensor_algebra(const BraidedCategory& cat, const ComoduleAlgebra& a, const ComoduleAlgebra& b) {
    const std::size_t da = a.algebra.dim(), db = b.algebra.dim(), d = da * db;
    const std::vector<TermList> psi = sparse_columns(braiding(cat, b.comodule, a.comodule).psi);
    Matrix mult(d, d * d);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t k = 0; k < da; ++k)
                for (std::size_t l = 0; l < db; ++l) {
                    const std::size_t col = (i * db + j) * d + k * db + l;
                    for (const auto& t : psi[j * da + k]) {
                        const std::size_t k2 = t.index / db, j2 = t.index % db;
                        for (const auto& ta : a.algebra.product(i, k2))
                            for (const auto& tb : b.algebra.product(j2, l))
                                mult(ta.index * db + tb.index, col).add_product(t.coeff * ta.coeff, tb.coeff);
                    }
                }
    Algebra alg(StructuredSpace::tensor(a.algebra.space(), b.algebra.space()), std::move(mult),
                kron(a.algebra.unit(), b.algebra.unit()));
    Report rep = check_algebra_axioms(alg);
    if (const CheckResult* f = rep.first_failure())
        throw NotAssociative("braided tensor product: " + f->name, f->witness ? f->witness->element : "");
    return {alg, cat.h, tensor_comodule(cat.h, a.comodule, b.comodule)};
}

Report check_braided_group(const BraidedCategory& cat, const BraidedGroup& b) {
    Report rep;
    const HopfAlgebra& h = cat.h;
    const std::size_t d = b.dim();
    const StructuredSpace s2 = StructuredSpace::tensor(b.space(), b.space());
    rep.append(check_algebra_axioms(b.algebra), "B: ");
    rep.append(check_coalgebra_axioms(b.coalgebra), "B: ");
    rep.append(check_comodule(b.coaction), "coaction: ");
    const Comodule& v = b.coaction;
    const Comodule vv = tensor_comodule(h, v, v), k = ground_comodule(h);
    const Matrix& mult = b.algebra.mult();
    const Matrix& comult = b.coalgebra.comult();
    const Matrix eps = counit_row(b.coalgebra);
    rep.add(check_intertwiner("product is a morphism", mult, vv, v));
    rep.add(check_intertwiner("unit is a morphism", Matrix::column_matrix(b.algebra.unit()), k, v));
    rep.add(check_intertwiner("Δ̲ is a morphism", comult, v, vv));
    rep.add(check_intertwiner("ε is a morphism", eps, v, k));
    rep.add(check_intertwiner("S̲ is a morphism", b.antipode, v, v));
    try {
        const ComoduleAlgebra bb = braided_tensor_algebra(cat, b.as_comodule_algebra(cat), b.as_comodule_algebra(cat));
        rep.add(compare_maps("Δ̲ multiplicative into B⊗̲B", comult * mult, bb.algebra.mult() * kron(comult, comult), s2,
                             s2));
    } catch (const NotAssociative& e) {
        rep.add(fail("Δ̲ multiplicative into B⊗̲B", std::string("B⊗̲B not associative: ") + e.what()));
    }
    rep.add(compare_vectors("Δ̲ unital", "1", comult * b.algebra.unit(), kron(b.algebra.unit(), b.algebra.unit()), s2));
    const StructuredSpace kk = StructuredSpace::ground();
    rep.add(compare_maps("ε multiplicative", eps * mult, kron(eps, eps), s2, kk));
    rep.add(compare_vectors("ε unital", "1", eps * b.algebra.unit(), Vec{Scalar(1)}, kk));
    const ConvolutionAlgebra conv(b.coalgebra, b.algebra);
    const Matrix id = Matrix::identity(d);
    rep.add(compare_maps("antipode (S̲*id)", conv.product(b.antipode, id), conv.unit(), b.space(), b.space()));
    rep.add(compare_maps("antipode (id*S̲)", conv.product(id, b.antipode), conv.unit(), b.space(), b.space()));
    rep.add(compare_maps("S̲ braided anti-multiplicative", b.antipode * mult,
                         mult * braiding(cat, v, v).psi * kron(b.antipode, b.antipode), s2, b.space()));
    return rep;
}

Scalar zeta_binomial(const Scalar& q, int m, int k) {
    if (k < 0 || k > m) return Scalar(0);
    std::vector<Scalar> row{Scalar(1)};
    for (int i = 1; i <= m; ++i) {
        std::vector<Scalar> next(static_cast<std::size_t>(i) + 1);
        for (int j = 0; j <= i; ++j) {
            const auto u = static_cast<std::size_t>(j);
            if (j > 0) next[u] += row[u - 1];
            if (j < i) next[u] += power(q, j) * row[u];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

BraidedCategory braided_line_category(int n) { return braided_category(group_algebra(n)); }

BraidedGroup braided_line(int n) {
    if (n < 2) throw InvariantFailure("braided line needs n ≥ 2");
    const BraidedCategory cat = braided_line_category(n);
    const auto d = static_cast<std::size_t>(n);
    const Scalar q = cat.r(1, 1);
    std::vector<std::string> labels;
    std::vector<std::size_t> degrees;
    for (int m = 0; m < n; ++m) {
        labels.push_back(m == 0 ? "1" : m == 1 ? "x" : "x^" + std::to_string(m));
        degrees.push_back(static_cast<std::size_t>(m));
    }
    StructuredSpace s(labels);
    Algebra alg = algebra_from(s, [&](std::size_t i, std::size_t j) { return i + j < d ? basis_vec(d, i + j) : Vec(d); }, 0);
    Matrix comult(d * d, d), antipode(d, d);
    for (int m = 0; m < n; ++m) {
        const auto um = static_cast<std::size_t>(m);
        for (int k = 0; k <= m; ++k) comult(static_cast<std::size_t>(k) * d + um - static_cast<std::size_t>(k), um) = zeta_binomial(q, m, k);
        const Scalar sign = m % 2 == 0 ? Scalar(1) : Scalar(-1);
        antipode(um, um) = sign * power(q, m * (m - 1) / 2);
    }
    BraidedGroup b;
    b.name = "braided-line:" + std::to_string(n);
    b.algebra = alg;
    b.coalgebra = Coalgebra(s, std::move(comult), basis_vec(d, 0));
    b.antipode = std::move(antipode);
    b.coaction = graded_comodule(cat.h, s, degrees);
    return b;
}

BraidedGroup trivial_braided_group(const HopfAlgebra& h) {
    BraidedGroup b;
    b.name = "k";
    b.algebra = Algebra::ground();
    b.coalgebra = Coalgebra::ground();
    b.antipode = Matrix::identity(1);
    b.coaction = ground_comodule(h);
    return b;
}

BraidedBundle braided_trivial_bundle(const BraidedCategory& cat, const ComoduleAlgebra& m, const BraidedGroup& b,
                                     std::string name) {
    BraidedBundle out;
    out.name = std::move(name);
    out.cat = cat;
    out.fibre = b;
    out.base_factor = m;
    out.total = braided_tensor_algebra(cat, m, b.as_comodule_algebra(cat));
    out.rho = Comodule(out.total.algebra.space(), b.coalgebra,
                       kron(Matrix::identity(m.algebra.dim()), b.coalgebra.comult()));
    out.galois = galois_data(out.total.algebra, out.rho, b.algebra.unit());
    out.omega1 = universal_forms(out.total.algebra, 1).space;
    return out;
}

Report check_braided_bundle(const BraidedBundle& b) {
    Report rep;
    const HopfAlgebra& h = b.cat.h;
    const Algebra& p = b.p();
    const BraidedGroup& f = b.fibre;
    const Matrix& rho = b.rho.coaction();
    const StructuredSpace pb = StructuredSpace::tensor(p.space(), f.space());
    rep.append(check_comodule(b.rho), "ρ: ");
    rep.add(check_intertwiner("ρ is a morphism P → P⊗B", rho, b.total.comodule,
                              tensor_comodule(h, b.total.comodule, f.coaction)));
    const ComoduleAlgebra target = braided_tensor_algebra(b.cat, b.total, f.as_comodule_algebra(b.cat));
    rep.add(compare_maps("ρ multiplicative into P⊗̲B", rho * p.mult(), target.algebra.mult() * kron(rho, rho),
                         StructuredSpace::tensor(p.space(), p.space()), pb));
    rep.add(compare_vectors("ρ unital", "1", rho * p.unit(), kron(p.unit(), f.algebra.unit()), pb));
    rep.append(check_galois(b.galois));
    const Matrix base = kron(Matrix::identity(b.base_factor.algebra.dim()), Matrix::column_matrix(f.algebra.unit()));
    const Subspace expected = Subspace::span_columns(p.space(), base);
    rep.add(check("base is M⊗1", expected == b.galois.m.subspace));
    return rep;
}

BraidedTrivialisation tensor_trivialisation(const BraidedBundle& b) {
    const Matrix one = Matrix::column_matrix(b.base_factor.algebra.unit());
    return {kron(one, Matrix::identity(b.dim_b())), kron(one, b.fibre.antipode)};
}

Report check_braided_trivialisation(const BraidedBundle& b, const BraidedTrivialisation& t) {
    Report rep;
    const BraidedGroup& f = b.fibre;
    rep.add(compare_vectors("Φ(1) = 1", "1", t.phi * f.algebra.unit(), b.p().unit(), b.p().space()));
    rep.add(check_intertwiner("Φ intertwines Δ̲ and ρ", t.phi, regular_b(f), b.rho));
    rep.add(check_intertwiner("Φ is a morphism", t.phi, f.coaction, b.total.comodule));
    const ConvolutionAlgebra conv(f.coalgebra, b.p());
    rep.add(compare_maps("Φ⁻¹*Φ = ηε", conv.product(t.phi_inv, t.phi), conv.unit(), f.space(), b.p().space()));
    rep.add(compare_maps("Φ*Φ⁻¹ = ηε", conv.product(t.phi, t.phi_inv), conv.unit(), f.space(), b.p().space()));
    return rep;
}

Matrix braided_pp_coaction(const BraidedBundle& b) {
    const std::size_t dp = b.dim_p();
    const std::vector<TermList> psi = psi_b_p(b);
    return tabulate(dp * dp * b.dim_b(), dp * dp, [&](const Vec& x) { return coact_pp(b, psi, x); });
}

std::vector<Matrix> admissible_gauge_fields(const BraidedBundle& b) {
    const ComoduleAlgebra& m = b.base_factor;
    const std::size_t dm = m.algebra.dim(), db = b.dim_b();
    const Subspace s = intertwiner_space(b.fibre.coaction, tensor_comodule(b.cat.h, m.comodule, m.comodule));
    std::vector<Matrix> candidates;
    for (const Vec& v : s.vectors()) candidates.push_back(hom_matrix(v, dm * dm, db));
    // Values in Ω¹M = ker(mult), and A(1) = 0.
    Matrix constraints(dm * db + dm * dm, candidates.size());
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        Vec col = hom_vector(m.algebra.mult() * candidates[k]);
        const Vec at_one = candidates[k] * b.fibre.algebra.unit();
        col.insert(col.end(), at_one.begin(), at_one.end());
        constraints.set_column(k, col);
    }
    std::vector<Matrix> out;
    for (const Vec& c : kernel(constraints).vectors()) {
        Matrix a(dm * dm, db);
        for (std::size_t k = 0; k < candidates.size(); ++k)
            if (!c[k].is_zero()) a += c[k] * candidates[k];
        out.push_back(std::move(a));
    }
    return out;
}

Matrix tensor_connection(const BraidedBundle& b, const BraidedTrivialisation& t, const Matrix& a) {
    const Algebra& p = b.p();
    const Coalgebra& c = b.fibre.coalgebra;
    const Matrix inclusion =
        kron(Matrix::identity(b.base_factor.algebra.dim()), Matrix::column_matrix(b.fibre.algebra.unit()));
    const FormMap ap{embed_form_map(inclusion, a, 1), 1};
    const FormMap phi{t.phi, 0}, phi_inv{t.phi_inv, 0};
    return (convolve(c, p, phi_inv, differential(p, phi)) + convolve(c, p, convolve(c, p, phi_inv, ap), phi)).values;
}

Report check_braided_connection(const BraidedBundle& b, const Matrix& omega, const Comodule* adjoint) {
    Report rep;
    const BraidedGroup& f = b.fibre;
    const Algebra& p = b.p();
    const std::size_t db = b.dim_b();
    const StructuredSpace pp = StructuredSpace::tensor(p.space(), p.space());
    rep.add(check_values_in("values in Ω¹P", FormMap{omega, 1}, b.omega1, f.space()));
    rep.add(check("ω(1) = 0", is_zero(omega * f.algebra.unit())));
    const Vec one_one = kron(p.unit(), f.algebra.unit());
    const Matrix expected = matrix_from(p.dim() * db, db, [&](std::size_t j) {
        return kron(p.unit(), basis_vec(db, j)) - f.coalgebra.counit()[j] * one_one;
    });
    rep.add(compare_maps("χ̃∘ω(b) = 1⊗b − ε(b)1⊗1", b.galois.chi_tilde * omega, expected, f.space(), b.galois.pc()));
    rep.add(check_intertwiner("ω is a morphism B → P⊗P", omega, f.coaction,
                              tensor_comodule(b.cat.h, b.total.comodule, b.total.comodule)));
    if (adjoint) {
        rep.append(check_comodule(*adjoint), "Ad: ");
        const std::vector<TermList> psi = psi_b_p(b);
        const Matrix rhs = matrix_from(pp.dim() * db, db, [&](std::size_t j) { return coact_pp(b, psi, omega.column(j)); });
        rep.add(compare_maps("(ω⊗id)Ad = ρ_{P⊗P}ω", kron(omega, Matrix::identity(db)) * adjoint->coaction(), rhs,
                             f.space(), StructuredSpace::tensor(pp, f.space())));
    }
    return rep;
}

std::optional<Comodule> solve_adjoint_candidate(const BraidedBundle& b, const Matrix& omega) {
    const BraidedGroup& f = b.fibre;
    const std::size_t db = b.dim_b();
    const Matrix k = kron(omega, Matrix::identity(db));
    const std::vector<TermList> psi = psi_b_p(b);
    const Vec& eps = f.coalgebra.counit();
    const Vec& one = f.algebra.unit();
    Matrix ad(db * db, db);
    for (std::size_t j = 0; j < db; ++j) {
        auto y = solve(k, coact_pp(b, psi, omega.column(j)));
        if (!y) return std::nullopt;
        // ω kills 1, so y is fixed only up to 1⊗c; normalise by (ε⊗id)Ad = ηε.
        Vec left(db);
        for (std::size_t u = 0; u < db; ++u)
            for (std::size_t c = 0; c < db; ++c) left[c].add_product(eps[u], (*y)[u * db + c]);
        ad.set_column(j, *y - kron(one, left) + eps[j] * kron(one, one));
    }
    return Comodule(f.space(), f.coalgebra, std::move(ad));
}

Bosonisation bosonise(const BraidedCategory& cat, const BraidedGroup& b) {
    Bosonisation bos;
    bos.cat = cat;
    bos.b = b;
    bos.regular = regular_comodule_algebra(cat.h);
    const HopfAlgebra& h = cat.h;
    const ComoduleAlgebra alg = braided_tensor_algebra(cat, bos.regular, b.as_comodule_algebra(cat));
    const std::size_t dh = h.dim(), db = b.dim(), d = dh * db;
    Matrix comult(d * d, d);
    Vec counit(d);
    for (std::size_t x = 0; x < dh; ++x)
        for (std::size_t c = 0; c < db; ++c) {
            const std::size_t col = x * db + c;
            counit[col] = h.counit()[x] * b.coalgebra.counit()[c];
            for (const auto& th : h.coalgebra.coproduct(x))
                for (const auto& tc : b.coalgebra.coproduct(c))
                    for (const auto& tk : b.coaction.coact(tc.index / db)) {
                        const std::size_t c1 = tk.index / dh, c2 = tc.index % db;
                        const Scalar s = th.coeff * tc.coeff * tk.coeff;
                        for (const auto& tq : h.algebra.product(th.index % dh, tk.index % dh))
                            comult(((th.index / dh) * db + c1) * d + tq.index * db + c2, col).add_product(s, tq.coeff);
                    }
        }
    const std::string name = "bosonisation(" + h.name + "," + b.name + ")";
    Coalgebra coal(alg.algebra.space(), std::move(comult), std::move(counit));
    auto s = ConvolutionAlgebra(coal, alg.algebra).inverse(Matrix::identity(d));
    if (!s) throw HopfAxiomFailure("antipode: id has no convolution inverse", name);
    bos.hopf = HopfAlgebra(name, alg.algebra, coal, *s);
    bos.report = check_hopf_axioms(bos.hopf);
    if (const CheckResult* f = bos.report.first_failure())
        throw HopfAxiomFailure("bosonisation: " + f->name, f->witness ? f->witness->element : "");

    // Independent semidirect-product form: (x⊗c)(y⊗e) = xy₁⊗(c◁y₂)e with c◁y = c⁽¹⁾R(c⁽²⁾⊗y).
    Matrix semi(d, d * d);
    for (std::size_t x = 0; x < dh; ++x)
        for (std::size_t c = 0; c < db; ++c)
            for (std::size_t y = 0; y < dh; ++y)
                for (std::size_t e = 0; e < db; ++e) {
                    const std::size_t col = (x * db + c) * d + y * db + e;
                    for (const auto& ty : h.coalgebra.coproduct(y))
                        for (const auto& tc : b.coaction.coact(c)) {
                            const Scalar& r = cat.r(tc.index % dh, ty.index % dh);
                            if (r.is_zero()) continue;
                            const Scalar s0 = ty.coeff * tc.coeff * r;
                            for (const auto& th : h.algebra.product(x, ty.index / dh))
                                for (const auto& tb : b.algebra.product(tc.index / dh, e))
                                    semi(th.index * db + tb.index, col).add_product(s0 * th.coeff, tb.coeff);
                        }
                }
    const StructuredSpace& sp = alg.algebra.space();
    bos.report.add(compare_maps("product is the semidirect product for c◁h = c⁽¹⁾R(c⁽²⁾⊗h)", alg.algebra.mult(), semi,
                                StructuredSpace::tensor(sp, sp), sp));
    return bos;
}

BraidedBundle bosonisation_as_braided_bundle(const Bosonisation& bos) {
    return braided_trivial_bundle(bos.cat, bos.regular, bos.b, bos.hopf.name + " over " + bos.cat.h.name);
}

QuantumBosonisationBundle bosonisation_as_quantum_bundle(const Bosonisation& bos) {
    const HopfAlgebra& h = bos.cat.h;
    const std::size_t dh = h.dim(), db = bos.b.dim(), d = dh * db;
    const Matrix pi_h = kron(Matrix::identity(dh), counit_row(bos.b.coalgebra));
    const Comodule co(bos.hopf.space(), h.coalgebra, kron(Matrix::identity(d), pi_h) * bos.hopf.coalgebra.comult());
    PrincipalBundle pb = build_bundle(ComoduleAlgebra{bos.hopf.algebra, h, co}, bos.hopf.name + " with fibre " + h.name);
    Trivialisation t = make_trivialisation(pb, kron(Matrix::identity(dh), Matrix::column_matrix(bos.b.algebra.unit())));
    return {std::move(pb), std::move(t)};
}

Report check_entwining(const Entwining& e) {
    Report rep;
    const std::size_t dc = e.c.dim(), da = e.a.dim();
    const std::vector<TermList> psi = sparse_columns(e.psi), mult = sparse_columns(e.a.mult()),
                                comult = sparse_columns(e.c.comult()), eps = sparse_columns(counit_row(e.c));
    const StructuredSpace& sc = e.c.space();
    const StructuredSpace& sa = e.a.space();
    const StructuredSpace ac = StructuredSpace::tensor(sa, sc);
    const Dims caa{dc, da, da}, ca{dc, da};
    rep.add(compare_maps(
        "ψ(id⊗m) = (m⊗id)(id⊗ψ)(ψ⊗id)",
        tabulate(da * dc, dc * da * da,
                 [&](const Vec& x) { return apply_legs(apply_legs(x, caa, 1, 2, mult, da), ca, 0, 2, psi, da * dc); }),
        tabulate(da * dc, dc * da * da,
                 [&](const Vec& x) {
                     Vec y = apply_legs(x, caa, 0, 2, psi, da * dc);
                     y = apply_legs(y, {da, dc, da}, 1, 2, psi, da * dc);
                     return apply_legs(y, {da, da, dc}, 0, 2, mult, da);
                 }),
        tensor3(sc, sa, sa), ac));
    rep.add(compare_maps("ψ(c⊗1) = 1⊗c", e.psi * kron(Matrix::identity(dc), Matrix::column_matrix(e.a.unit())),
                         kron(Matrix::column_matrix(e.a.unit()), Matrix::identity(dc)), sc, ac));
    rep.add(compare_maps(
        "(id⊗Δ)ψ = (ψ⊗id)(id⊗ψ)(Δ⊗id)",
        tabulate(da * dc * dc, dc * da,
                 [&](const Vec& x) { return apply_legs(e.psi * x, {da, dc}, 1, 1, comult, dc * dc); }),
        tabulate(da * dc * dc, dc * da,
                 [&](const Vec& x) {
                     Vec y = apply_legs(x, ca, 0, 1, comult, dc * dc);
                     y = apply_legs(y, {dc, dc, da}, 1, 2, psi, da * dc);
                     return apply_legs(y, {dc, da, dc}, 0, 2, psi, da * dc);
                 }),
        StructuredSpace::tensor(sc, sa), tensor3(sa, sc, sc)));
    rep.add(compare_maps("(id⊗ε)ψ = ε⊗id",
                         tabulate(da, dc * da, [&](const Vec& x) { return apply_legs(e.psi * x, {da, dc}, 1, 1, eps, 1); }),
                         kron(counit_row(e.c), Matrix::identity(da)), StructuredSpace::tensor(sc, sa), sa));
    return rep;
}

BosonisationEntwining entwining_from_bosonisation(const Bosonisation& bos) {
    const HopfAlgebra& h = bos.cat.h;
    const BraidedGroup& b = bos.b;
    const std::size_t dh = h.dim(), db = b.dim(), d = dh * db;
    // ψ(c⊗(x⊗e)) = x₁⊗e₍₁₎⁽¹⁾⊗c⁽¹⁾e₍₂₎ R(c⁽²⁾⊗x₂e₍₁₎⁽²⁾)
    Matrix psi(d * db, db * d);
    for (std::size_t c = 0; c < db; ++c)
        for (std::size_t x = 0; x < dh; ++x)
            for (std::size_t e = 0; e < db; ++e) {
                const std::size_t col = c * d + x * db + e;
                for (const auto& tc : b.coaction.coact(c))
                    for (const auto& tx : h.coalgebra.coproduct(x))
                        for (const auto& te : b.coalgebra.coproduct(e))
                            for (const auto& tj : b.coaction.coact(te.index / db))
                                for (const auto& tq : h.algebra.product(tx.index % dh, tj.index % dh)) {
                                    const Scalar& r = bos.cat.r(tc.index % dh, tq.index);
                                    if (r.is_zero()) continue;
                                    const Scalar s = tc.coeff * tx.coeff * te.coeff * tj.coeff * tq.coeff * r;
                                    const std::size_t row0 = ((tx.index / dh) * db + tj.index / dh) * db;
                                    for (const auto& tm : b.algebra.product(tc.index / dh, te.index % db))
                                        psi(row0 + tm.index, col).add_product(s, tm.coeff);
                                }
            }
    BosonisationEntwining out;
    out.entwining = Entwining{b.coalgebra, bos.hopf.algebra, std::move(psi)};
    out.report = check_entwining(out.entwining);
    if (const CheckResult* f = out.report.first_failure())
        throw EntwiningAxiomFailure("entwining: " + f->name, f->witness ? f->witness->element : "");

    const Comodule p_h = tensor_comodule(h, bos.regular.comodule, b.coaction);
    const std::vector<TermList> braid = sparse_columns(braiding(bos.cat, b.coaction, p_h).psi);
    const std::vector<TermList> rho = sparse_columns(kron(Matrix::identity(dh), b.coalgebra.comult()));
    const std::vector<TermList> mult_b = sparse_columns(b.algebra.mult());
    out.braided_psi = tabulate(d * db, db * d, [&](const Vec& x) {
        Vec y = apply_legs(x, {db, d}, 1, 1, rho, d * db);
        y = apply_legs(y, {db, d, db}, 0, 2, braid, d * db);
        return apply_legs(y, {d, db, db}, 1, 2, mult_b, db);
    });
    const StructuredSpace& sp = bos.hopf.space();
    const StructuredSpace cp = StructuredSpace::tensor(b.space(), sp), pc = StructuredSpace::tensor(sp, b.space());
    out.report.add(compare_maps("ψ = Ψ(c⊗u⁽¹⁾)u⁽²⁾", out.entwining.psi, out.braided_psi, cp, pc));

    out.projection = kron(counit_row(h.coalgebra), Matrix::identity(db));
    const Matrix& pi = out.projection;
    const Matrix induced = out.entwining.psi * kron(Matrix::column_matrix(pi * bos.hopf.unit()), Matrix::identity(d));
    const Matrix rho_dense = kron(Matrix::identity(dh), b.coalgebra.comult());
    out.report.add(compare_vectors("π(1) = 1", "1", pi * bos.hopf.unit(), b.algebra.unit(), b.space()));
    out.report.add(compare_maps("ψ(π(1)⊗u) = (id⊗Δ̲)u", induced, rho_dense, sp, pc));
    out.report.add(compare_maps("ψ(π(1)⊗u) = (id⊗π)Δu", induced, kron(Matrix::identity(d), pi) * bos.hopf.coalgebra.comult(),
                                sp, pc));
    out.report.add(compare_maps("π is a coalgebra map", b.coalgebra.comult() * pi,
                                kron(pi, pi) * bos.hopf.coalgebra.comult(), sp, StructuredSpace::tensor(b.space(), b.space())));
    out.report.add(compare_maps("ε∘π = ε", counit_row(b.coalgebra) * pi, counit_row(bos.hopf.coalgebra), sp,
                                StructuredSpace::ground()));
    CheckResult ideal = pass("ker π is a right ideal");
    for (const Vec& k : kernel(pi).vectors()) {
        const Matrix right = bos.hopf.algebra.left_mult(k);
        const Matrix image_in_b = pi * right;
        if (!image_in_b.is_zero()) {
            ideal = fail(ideal.name, Witness{render(k, sp), "π(k·u)", "nonzero"});
            break;
        }
    }
    out.report.add(std::move(ideal));
    return out;
}

}  // namespace ncg
