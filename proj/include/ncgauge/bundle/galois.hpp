#pragma once

#include <string>

#include "ncgauge/calculus/forms.hpp"
#include "ncgauge/comodule/comodule.hpp"

namespace ncg {

/// The Galois package for an algebra P with a coaction ρ: P → P⊗C and grouplike e ∈ C.
/// Shared by quantum, braided and entwined bundles: only the product and coaction enter.
struct GaloisData {
    Algebra p;
    Comodule rho;
    Vec e;
    FixedSubalgebra m;
    Subspace relations;      // span{um⊗v − u⊗mv} = P(Ω¹M)P inside P⊗P
    QuotientSpace over_m;    // P⊗_M P
    Matrix chi_tilde;        // P⊗P → P⊗C, u⊗v ↦ u v⁽¹⁾⊗v⁽²⁾
    Matrix chi;              // P⊗_M P → P⊗C
    Matrix chi_inv;
    Matrix tau;              // C → P⊗_M P, τ(h) = χ⁻¹(1⊗h)
    Matrix tau_lift;         // C → P⊗P through the quotient section

    std::size_t dim_p() const { return p.dim(); }
    std::size_t dim_c() const { return rho.coalgebra().dim(); }
    StructuredSpace pp() const { return StructuredSpace::tensor(p.space(), p.space()); }
    StructuredSpace pc() const { return StructuredSpace::tensor(p.space(), rho.coalgebra().space()); }
};

/// χ̃ as a matrix.
Matrix galois_map(const Algebra& p, const Comodule& rho);
/// Builds M, P⊗_M P, χ and its inverse. Throws NotFree when χ̃ is not onto and NotGalois when
/// χ is not injective, each with a witness vector.
GaloisData galois_data(const Algebra& p, const Comodule& rho, const Vec& e);
/// χ∘χ⁻¹ = id, χ⁻¹∘χ = id, χ̃ kills the relations, and ker χ̃ = P(Ω¹M)P.
Report check_galois(const GaloisData& g);

/// Quantum principal bundle: a comodule algebra over a Hopf algebra with bijective χ.
struct PrincipalBundle {
    std::string name;
    ComoduleAlgebra total;
    GaloisData galois;
    StandardComodules h_comodules;
    Subspace omega1;      // Ω¹P
    Subspace horizontal;  // (Ω¹M)P

    const Algebra& p() const { return total.algebra; }
    const HopfAlgebra& h() const { return total.host; }
    const FixedSubalgebra& m() const { return galois.m; }
    const Comodule& rho() const { return total.comodule; }
    std::size_t dim_p() const { return total.algebra.dim(); }
    std::size_t dim_h() const { return total.host.dim(); }
    /// P⊗P with the tensor coaction of P_ρ⊗P_ρ.
    Comodule pp_comodule() const;
};

/// Checks the comodule-algebra axioms first (InvariantFailure on violation), then builds.
PrincipalBundle build_bundle(const ComoduleAlgebra& p, std::string name = {});
/// The three intertwining statements for χ̃ and the corresponding ones for χ⁻¹.
Report check_chi_covariance(const PrincipalBundle& b);

}  // namespace ncg
