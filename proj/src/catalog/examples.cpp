#include "ncgauge/catalog/examples.hpp"

#include "ncgauge/hopf/presentation.hpp"

namespace ncg {

ComoduleAlgebra fn_z4_over_fn_z2() {
    HopfAlgebra p = function_algebra(4), h = function_algebra(2);
    Matrix rho(8, 4);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t s = 0; s < 2; ++s) rho(((a + 4 - 2 * s) % 4) * 2 + s, a) = 1;
    return {p.algebra, h, Comodule(p.space(), h.coalgebra, std::move(rho))};
}

CocycleData crossprod_mu(const Scalar& mu) {
    HopfAlgebra h = group_algebra(2);
    CocycleData d = trivial_cocycle_data(Algebra::ground(), h);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) d.c(0, a * 2 + b) = Scalar(1);
    const std::size_t g = h.index_of("g");
    d.c(0, g * 2 + g) = mu;
    return d;
}

CocycleData crossprod_action() {
    HopfAlgebra m = function_algebra(2), h = function_algebra(2);
    CocycleData d = trivial_cocycle_data(m.algebra, h);
    const Scalar half(Rational(1, 2));
    // α(δ_s⊗m) is the degree-s part of m: δ₀ = (1+f)/2, δ₁ = (1−f)/2 with f = δ₀−δ₁.
    for (std::size_t n = 0; n < 2; ++n) {
        d.alpha(0, 0 * 2 + n) = half;
        d.alpha(1, 0 * 2 + n) = half;
        const Scalar sign = n == 0 ? half : -half;
        d.alpha(0, 1 * 2 + n) = sign;
        d.alpha(1, 1 * 2 + n) = -sign;
    }
    return d;
}

ComoduleAlgebra m3_graded() {
    HopfAlgebra h = group_algebra(2);
    std::vector<std::string> labels;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) labels.push_back("E" + std::to_string(i) + std::to_string(j));
    StructuredSpace s(labels);
    Matrix mult(9, 81);
    Vec unit(9);
    for (std::size_t i = 0; i < 3; ++i) {
        unit[i * 3 + i] = Scalar(1);
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) mult(i * 3 + k, (i * 3 + j) * 9 + j * 3 + k) = Scalar(1);
    }
    const int deg[3] = {0, 0, 1};
    const std::size_t g = h.index_of("g"), e = h.index_of("1");
    Matrix rho(18, 9);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) rho((i * 3 + j) * 2 + ((deg[i] + deg[j]) % 2 ? g : e), i * 3 + j) = Scalar(1);
    return {Algebra(s, std::move(mult), std::move(unit)), h, Comodule(s, h.coalgebra, std::move(rho))};
}

ComoduleAlgebra fn_z2_sum_not_free() {
    HopfAlgebra p = function_algebra(4), h = function_algebra(2);
    Matrix rho(8, 4);
    // the dual of the action swapping points 0, 1 and fixing 2, 3: ρ(δ_a) = Σ_s δ_{s·a}⊗δ_s
    const std::size_t act[2][4] = {{0, 1, 2, 3}, {1, 0, 2, 3}};
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t s = 0; s < 2; ++s) rho(act[s][a] * 2 + s, a) = Scalar(1);
    return {p.algebra, h, Comodule(p.space(), h.coalgebra, std::move(rho))};
}

}  // namespace ncg
