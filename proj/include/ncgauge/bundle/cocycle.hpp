#pragma once

#include "ncgauge/bundle/gauge.hpp"

namespace ncg {

/// c: H⊗H → M (column h*dim H + g) and α: H⊗M → M (column h*dim M + m).
struct CocycleData {
    Algebra m;
    HopfAlgebra h;
    Matrix c;
    Matrix alpha;
};
/// c = ε⊗ε·1, α = ε⊗id.
CocycleData trivial_cocycle_data(const Algebra& m, const HopfAlgebra& h);

/// Product table of M⊗H: (m⊗h)(n⊗g) = m α(h₁⊗n) c(h₂⊗g₁) ⊗ h₃g₂, basis index m*dim H + h.
Matrix cross_product_mult(const CocycleData& data);

struct CrossProduct {
    PrincipalBundle bundle;
    Trivialisation trivialisation;  // Φ(h) = 1⊗h
    Report report;                  // associativity, unit, Φ, and the closed form of Φ⁻¹
};
/// Throws NotAssociative with a witness triple when the data do not give an associative product.
CrossProduct cocycle_cross_product(const CocycleData& data, std::string name = {});

/// Reads c, α and M's product off a bundle laid out as M⊗H with coaction id⊗Δ, then checks the
/// whole product table against the cross-product formula. Throws NotCanonicalForm otherwise.
CocycleData extract_cocycle_data(const PrincipalBundle& b);

}  // namespace ncg
