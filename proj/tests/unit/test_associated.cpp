#include <random>

#include "doctest.h"
#include "ncgauge/bundle/associated.hpp"
#include "ncgauge/catalog/examples.hpp"
#include "ncgauge/hopf/presentation.hpp"
#include "support/random.hpp"

using namespace ncg;

namespace {

PointedComodule trivial_line(const HopfAlgebra& h) {
    return make_pointed(trivial_comodule(StructuredSpace({"v"}), h.coalgebra, h.unit()), Vec{Scalar(1)}, h.unit());
}

PointedComodule pointed_regular(const HopfAlgebra& h, const Comodule& c) { return make_pointed(c, h.unit(), h.unit()); }

Matrix sample(const AffineFamily& f, std::mt19937& rng) {
    Matrix x = f.base;
    for (const Matrix& d : f.directions) x = x + testing_support::random_scalar(rng) * d;
    return x;
}

void roundtrips(const PrincipalBundle& b, const AssociatedBundle& e, std::mt19937& rng) {
    auto sigmas = pseudotensorial_space(b, e);
    REQUIRE(sigmas);
    auto sections = section_space(b, e);
    REQUIRE(sections);
    for (int trial = 0; trial < 3; ++trial) {
        Report r = check_section_correspondence(b, e, sample(*sigmas, rng));
        CHECK_MESSAGE(r.passed(), r.summary());
        Matrix s = sample(*sections, rng);
        CHECK(check_section(b, e, s).passed());
        Matrix sigma = sigma_from_section(b, e, s);
        CHECK(check_pseudotensorial(b, e, sigma).passed());
        CHECK(section_from_sigma(b, e, sigma) == s);
    }
}

}  // namespace

TEST_CASE("associated bundle dimensions") {
    HopfAlgebra h = group_algebra(2);
    PrincipalBundle b = build_bundle(regular_comodule_algebra(h));
    AssociatedBundle line = associated_bundle(b, trivial_line(h));
    CHECK(line.report.passed());
    CHECK(line.dim() == b.m().dim());
    AssociatedBundle reg = associated_bundle(b, pointed_regular(h, b.h_comodules.right));
    CHECK(reg.dim() == h.dim());
    // adjoint coaction of a commutative cocommutative H is trivial, so E = M⊗H
    AssociatedBundle ad = associated_bundle(b, pointed_regular(h, b.h_comodules.adjoint));
    CHECK(ad.dim() == b.m().dim() * h.dim());
}

TEST_CASE("constant unit Σ on the trivial line gives the projection to M") {
    PrincipalBundle b = build_bundle(fn_z4_over_fn_z2());
    const HopfAlgebra& h = b.h();
    AssociatedBundle e = associated_bundle(b, trivial_line(h));
    Matrix sigma(b.dim_p(), 1);
    sigma.set_column(0, b.p().unit());
    Matrix s = section_from_sigma(b, e, sigma);
    for (std::size_t j = 0; j < e.dim(); ++j) {
        // u⊗v ↦ u, read in M coordinates
        Vec u(b.dim_p());
        for (std::size_t a = 0; a < b.dim_p(); ++a) u[a] = e.basis(a, j);
        CHECK(b.m().inclusion * s.column(j) == u);
    }
    CHECK(check_section_correspondence(b, e, sigma).passed());
}

TEST_CASE("section correspondence roundtrips") {
    std::mt19937 rng(99);
    std::vector<PrincipalBundle> bundles{build_bundle(regular_comodule_algebra(group_algebra(2))),
                                         build_bundle(regular_comodule_algebra(sweedler())),
                                         build_bundle(fn_z4_over_fn_z2()),
                                         cocycle_cross_product(crossprod_action()).bundle};
    for (const PrincipalBundle& b : bundles) {
        const HopfAlgebra& h = b.h();
        for (const PointedComodule& v :
             {trivial_line(h), pointed_regular(h, b.h_comodules.right), pointed_regular(h, b.h_comodules.adjoint)}) {
            AssociatedBundle e = associated_bundle(b, v);
            REQUIRE(e.report.passed());
            roundtrips(b, e, rng);
        }
    }
}

TEST_CASE("fibre trivialisation") {
    for (const auto& h : {sweedler(), group_algebra(3)}) {
        PrincipalBundle b = build_bundle(regular_comodule_algebra(h));
        Trivialisation t = make_trivialisation(b, Matrix::identity(h.dim()));
        for (const Comodule& c : {b.h_comodules.adjoint, b.h_comodules.right}) {
            AssociatedBundle e = associated_bundle(b, pointed_regular(h, c));
            Report r = check_fibre_trivialisation(b, e, t);
            CHECK_MESSAGE(r.passed(), r.summary());
        }
    }
    CrossProduct cp = cocycle_cross_product(crossprod_action());
    AssociatedBundle e = associated_bundle(cp.bundle, pointed_regular(cp.bundle.h(), cp.bundle.h_comodules.adjoint));
    CHECK(check_fibre_trivialisation(cp.bundle, e, cp.trivialisation).passed());
}
