#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ncgauge/hopf/hopf.hpp"

namespace ncg {

/// Algebra whose product of basis vectors is given by a callback.
Algebra algebra_from(const StructuredSpace& space, const std::function<Vec(std::size_t, std::size_t)>& product,
                     std::size_t unit_index);

struct GeneratorImages {
    Vec coproduct;  // in H⊗H
    Scalar counit;
    Vec antipode;  // in H
};

/// Extends coproduct, counit (multiplicatively) and antipode (anti-multiplicatively)
/// from generators to the basis. words[i] lists the generators whose product is e_i.
HopfAlgebra hopf_from_generators(std::string name, const Algebra& algebra, const std::vector<Vec>& generators,
                                 const std::vector<std::vector<std::size_t>>& words,
                                 const std::vector<GeneratorImages>& images);

/// Label for g^a x^b: "1", "g", "x", "g^2x^3", "gx".
std::string monomial_label(int a, int b);

/// kℤ_n on basis 1, g, ..., g^{n-1}; carries R(g^a⊗g^b) = ζ_n^{ab}.
HopfAlgebra group_algebra(int n);
/// k(ℤ_n) = (kℤ_n)*, basis of delta functions d0, ..., d{n-1}.
HopfAlgebra function_algebra(int n);
/// Taft algebra by generators: g^n = 1, x^n = 0, xg = q gx, Δx = x⊗1 + g⊗x, with q = ζ_n^k.
HopfAlgebra taft_presented(int n, long k = 1);
/// Sweedler's four-dimensional algebra on basis 1, g, x, gx.
HopfAlgebra sweedler();

}  // namespace ncg
