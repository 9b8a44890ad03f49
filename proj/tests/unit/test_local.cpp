#include "doctest.h"
#include "ncgauge/foundation/errors.hpp"
#include "ncgauge/hopf/presentation.hpp"
#include "ncgauge/local/local.hpp"

using namespace ncg;

namespace {

struct Setting {
    HopfAlgebra b;
    Algebra m;
};

std::vector<Setting> settings() {
    return {{group_algebra(2), Algebra::ground()},
            {group_algebra(2), function_algebra(2).algebra},
            {sweedler(), function_algebra(2).algebra},
            {group_algebra(3), function_algebra(3).algebra}};
}

}  // namespace

TEST_CASE("zero gauge field is flat") {
    for (const auto& s : settings()) {
        FormMap a{Matrix(s.m.dim() * s.m.dim(), s.b.dim()), 1};
        FormMap f = curvature(s.m, s.b.coalgebra, a);
        CHECK(is_zero(f.values.data()));
    }
}

TEST_CASE("grouplike curvature and Bianchi on kZ2 over k(Z2)") {
    HopfAlgebra b = group_algebra(2);
    Algebra m = function_algebra(2).algebra;
    const std::size_t g = b.index_of("g");
    // A(g) = dδ_0
    Matrix av(4, 2);
    av.set_column(g, differential(m, basis_vec(2, 0), 0));
    FormMap a{av, 1};
    CHECK(check_gauge_field(m, b.coalgebra, b.unit(), a).passed());
    FormMap f = curvature(m, b.coalgebra, a);
    Vec ag = av.column(g);
    CHECK(f.values.column(g) == differential(m, ag, 1) + form_product(m, ag, 1, ag, 1));
    CHECK(is_zero(bianchi_residue(m, b.coalgebra, a, f).values.data()));
}

TEST_CASE("random gauge fields: Bianchi, nabla squared, covariance") {
    std::mt19937 rng(20261018);
    for (const auto& s : settings()) {
        const Coalgebra& c = s.b.coalgebra;
        Comodule reg(s.b.space(), c, c.comult());
        for (int trial = 0; trial < 3; ++trial) {
            FormMap a = sample_gauge_field(s.m, c, s.b.unit(), rng);
            CHECK(check_gauge_field(s.m, c, s.b.unit(), a).passed());
            FormMap f = curvature(s.m, c, a);
            CHECK(is_zero(bianchi_residue(s.m, c, a, f).values.data()));
            for (std::size_t n = 0; n < 2; ++n) {
                FormMap sigma = sample_matter_field(s.m, reg.dim(), n, rng);
                CHECK(check_nabla_squared(s.m, c, reg, a, sigma).passed());
            }
            Matrix gamma = sample_local_gauge(s.m, c, s.b.unit(), rng);
            FormMap sigma = sample_matter_field(s.m, reg.dim(), 0, rng);
            CHECK(check_local_covariance(s.m, c, reg, s.b.unit(), a, gamma, sigma).passed());
        }
    }
}

TEST_CASE("local gauge transforms compose") {
    std::mt19937 rng(7);
    HopfAlgebra b = group_algebra(2);
    Algebra m = function_algebra(2).algebra;
    const Coalgebra& c = b.coalgebra;
    ConvolutionAlgebra conv(c, m);
    for (int trial = 0; trial < 4; ++trial) {
        FormMap a = sample_gauge_field(m, c, b.unit(), rng);
        Matrix g1 = sample_local_gauge(m, c, b.unit(), rng), g2 = sample_local_gauge(m, c, b.unit(), rng);
        Matrix g12 = conv.product(g1, g2);
        FormMap lhs = local_gauge_transform(m, c, local_gauge_transform(m, c, a, g1, *conv.inverse(g1)), g2,
                                            *conv.inverse(g2));
        CHECK(lhs == local_gauge_transform(m, c, a, g12, *conv.inverse(g12)));
    }
    // identity transform and pure-gauge flatness
    Matrix e = conv.unit();
    FormMap a = sample_gauge_field(m, c, b.unit(), rng);
    CHECK(local_gauge_transform(m, c, a, e, e) == a);
    Matrix g = sample_local_gauge(m, c, b.unit(), rng);
    FormMap zero{Matrix(4, 2), 1};
    FormMap pure = local_gauge_transform(m, c, zero, g, *conv.inverse(g));
    CHECK(is_zero(curvature(m, c, pure).values.data()));
}

TEST_CASE("nabla sign flips with degree") {
    HopfAlgebra b = group_algebra(2);
    Algebra m = function_algebra(2).algebra;
    Comodule reg(b.space(), b.coalgebra, b.coalgebra.comult());
    std::mt19937 rng(3);
    FormMap a = sample_gauge_field(m, b.coalgebra, b.unit(), rng);
    for (std::size_t n = 0; n < 2; ++n) {
        FormMap sigma = sample_matter_field(m, 2, n, rng);
        FormMap expect = differential(m, sigma) - (n == 0 ? Scalar(1) : Scalar(-1)) * convolve(reg, m, sigma, a);
        CHECK(nabla(m, reg, a, sigma) == expect);
    }
}
