#include "doctest.h"
#include "ncgauge/catalog/examples.hpp"
#include "ncgauge/comodule/comodule.hpp"
#include "ncgauge/foundation/errors.hpp"
#include "ncgauge/hopf/presentation.hpp"

using namespace ncg;

namespace {

ComoduleAlgebra regular(const HopfAlgebra& h) { return regular_comodule_algebra(h); }
ComoduleAlgebra double_cover() { return fn_z4_over_fn_z2(); }

}  // namespace

TEST_CASE("standard comodules satisfy the comodule axioms") {
    for (const auto& h : {group_algebra(2), group_algebra(3), sweedler(), taft_presented(3), function_algebra(3)}) {
        StandardComodules s = standard_comodules(h);
        CHECK(check_comodule(s.right).passed());
        CHECK(check_comodule(s.left).passed());
        CHECK(check_comodule(s.adjoint).passed());
    }
}

TEST_CASE("adjoint coaction examples") {
    HopfAlgebra z2 = group_algebra(2);
    StandardComodules s = standard_comodules(z2);
    CHECK(s.adjoint.apply(z2.element("g")) == kron(z2.element("g"), z2.element("1")));
    // on Sweedler: x2 ⊗ (S x1) x3 over Δ²x = x⊗1⊗1 + g⊗x⊗1 + g⊗g⊗x
    HopfAlgebra sw = sweedler();
    StandardComodules t = standard_comodules(sw);
    Vec x = sw.element("x"), g = sw.element("g"), one = sw.element("1"), gx = sw.element("gx");
    Vec expected = kron(one, sw.antipode * x) + kron(x, sw.algebra.multiply(g, one)) +
                   kron(g, sw.algebra.multiply(g, x));
    CHECK(t.adjoint.apply(x) == expected);
    CHECK(t.adjoint.apply(x) == kron(x, g) + kron(g, gx) - kron(one, gx));
}

TEST_CASE("comodule algebras") {
    CHECK(check_comodule_algebra(regular(sweedler())).passed());
    CHECK(check_comodule_algebra(regular(taft_presented(3))).passed());
    CHECK(check_comodule_algebra(double_cover()).passed());

    ComoduleAlgebra bad = double_cover();
    Matrix rho = bad.comodule.coaction();
    rho(0, 0) = -1;
    bad.comodule = Comodule(bad.algebra.space(), bad.host.coalgebra, rho);
    Report r = check_comodule_algebra(bad);
    const CheckResult* m = r.find("coaction multiplicative");
    REQUIRE(m);
    CHECK_FALSE(m->passed());
    REQUIRE(m->witness);
    CHECK(m->witness->element.find("⊗") != std::string::npos);
}

TEST_CASE("fixed subalgebras") {
    for (const auto& h : {group_algebra(2), sweedler(), taft_presented(3)}) {
        FixedSubalgebra m = fixed_subalgebra(regular(h));
        CHECK(m.dim() == 1);
        CHECK(m.subspace.contains(h.unit()));
    }
    ComoduleAlgebra p = double_cover();
    FixedSubalgebra m = fixed_subalgebra(p);
    CHECK(m.dim() == 2);
    CHECK(m.subspace.contains(p.algebra.space().dim() == 4 ? Vec{1, 0, 1, 0} : Vec{}));
    CHECK(check_algebra_axioms(m.algebra).passed());
    // M is commutative and two-dimensional with two idempotents: k(Z2)
    Vec e = m.coordinates(Vec{1, 0, 1, 0});
    CHECK(m.algebra.multiply(e, e) == e);
}

TEST_CASE("tensor comodules") {
    HopfAlgebra sw = sweedler();
    StandardComodules s = standard_comodules(sw);
    Comodule ra = tensor_comodule(sw, s.right, s.adjoint);
    CHECK(check_comodule(ra).passed());
    Comodule rr = tensor_comodule(sw, s.right, s.right);
    Vec one = sw.unit();
    CHECK(rr.apply(kron(one, one)) == kron(kron(one, one), one));
    Comodule triv = trivial_comodule(StructuredSpace({"v"}), sw.coalgebra, sw.unit());
    CHECK(tensor_comodule(sw, s.adjoint, triv).coaction() == s.adjoint.coaction());
}

TEST_CASE("intertwiner spaces") {
    HopfAlgebra z2 = group_algebra(2);
    StandardComodules s = standard_comodules(z2);
    Subspace rr = intertwiner_space(s.right, s.right);
    CHECK(rr.dim() == 2);
    CHECK(intertwiner_space(s.adjoint, s.adjoint).dim() == 4);
    // intertwiners from the trivial comodule are the invariant vectors
    Comodule triv = trivial_comodule(StructuredSpace({"v"}), z2.coalgebra, z2.unit());
    Subspace inv = intertwiner_space(triv, s.right);
    CHECK(inv.dim() == 1);
    CHECK(inv.contains(z2.unit()));

    HopfAlgebra sw = sweedler();
    StandardComodules t = standard_comodules(sw);
    for (const auto& [v, w] : {std::pair{t.right, t.right}, {t.adjoint, t.right}, {t.left, t.adjoint},
                               {t.adjoint, t.adjoint}}) {
        for (const Vec& f : intertwiner_space(v, w).vectors())
            CHECK(check_intertwiner("f", hom_matrix(f, w.dim(), v.dim()), v, w).passed());
    }
    // h ↦ φ(h1) h2 intertwines the regular coaction for every functional φ
    Subspace reg = intertwiner_space(t.right, t.right);
    CHECK(reg.dim() == 4);
    for (std::size_t k = 0; k < 4; ++k) {
        Matrix phi(1, 4);
        phi(0, k) = 1;
        Matrix f(4, 4);
        for (std::size_t i = 0; i < 4; ++i) f.set_column(i, apply_leg(sw.coalgebra.comult().column(i), {4, 4}, 0, phi));
        CHECK(reg.contains(hom_vector(f)));
    }
}

TEST_CASE("pointed comodules") {
    HopfAlgebra sw = sweedler();
    StandardComodules s = standard_comodules(sw);
    CHECK_NOTHROW(make_pointed(s.adjoint, sw.unit(), sw.unit()));
    CHECK_THROWS_AS(make_pointed(s.right, sw.element("g"), sw.unit()), InvariantFailure);
}
