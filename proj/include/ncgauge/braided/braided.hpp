#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncgauge/bundle/gauge.hpp"
#include "ncgauge/calculus/forms.hpp"
#include "ncgauge/comodule/comodule.hpp"

// Braided categories of right H-comodules over a dual-quasitriangular H, braided
// groups in them, and the bundle structures carried by a bosonisation.
namespace ncg {

struct BraidedCategory {
    HopfAlgebra h;
    DualQuasitriangular r;
};

/// Uses h.r_form; throws InvariantFailure when H carries none or it fails check_dqt.
BraidedCategory braided_category(const HopfAlgebra& h);
BraidedCategory braided_category(const HopfAlgebra& h, const Matrix& r);
/// R = ε⊗ε, so the braiding is the flip.
BraidedCategory trivial_braided_category(const HopfAlgebra& h);

/// e_i ↦ e_i⊗g_i for the grouplike basis element g_i = e_{grouplike[i]} of H.
Comodule graded_comodule(const HopfAlgebra& h, const StructuredSpace& space, const std::vector<std::size_t>& grouplike);

struct Braiding {
    Matrix psi;      // V⊗W → W⊗V
    Matrix psi_inv;  // W⊗V → V⊗W
};
/// Ψ(v⊗w) = w⁽¹⁾⊗v⁽¹⁾R(v⁽²⁾⊗w⁽²⁾); the inverse uses R⁻¹ and is checked against Ψ.
Braiding braiding(const BraidedCategory& cat, const Comodule& v, const Comodule& w);
/// Both hexagons, Yang-Baxter, and that Ψ is a morphism, on the triple U, V, W.
Report check_hexagons(const BraidedCategory& cat, const Comodule& u, const Comodule& v, const Comodule& w);
/// Ψ_{V',W}(f⊗id) = (id⊗f)Ψ_{V,W} and Ψ_{W,V'}(id⊗f) = (f⊗id)Ψ_{W,V} for a morphism f: V → V'.
Report check_naturality(const BraidedCategory& cat, const Matrix& f, const Comodule& v, const Comodule& v2,
                        const Comodule& w);

/// A⊗̲B with (a⊗b)(c⊗d) = aΨ(b⊗c)d and the tensor coaction. Throws NotAssociative.
ComoduleAlgebra braided_tensor_algebra(const BraidedCategory& cat, const ComoduleAlgebra& a, const ComoduleAlgebra& b);

/// Algebra and coalgebra in the category, with braided antipode.
struct BraidedGroup {
    std::string name;
    Algebra algebra;
    Coalgebra coalgebra;  // Δ̲ and ε
    Matrix antipode;      // S̲
    Comodule coaction;    // over the category's H

    std::size_t dim() const { return algebra.dim(); }
    const StructuredSpace& space() const { return algebra.space(); }
    ComoduleAlgebra as_comodule_algebra(const BraidedCategory& cat) const { return {algebra, cat.h, coaction}; }
};

/// Structure maps are morphisms, Δ̲ and ε are algebra maps (Δ̲ into B⊗̲B), antipode laws,
/// and S̲ is braided anti-multiplicative.
Report check_braided_group(const BraidedCategory& cat, const BraidedGroup& b);
/// Gaussian binomial via [m,k] = [m−1,k−1] + q^k[m−1,k].
Scalar zeta_binomial(const Scalar& q, int m, int k);
/// k[x]/(xⁿ) in the kℤ_n category with deg x = 1; q = R(g⊗g) = ζ_n.
BraidedGroup braided_line(int n);
BraidedCategory braided_line_category(int n);
/// The one-dimensional braided group k.
BraidedGroup trivial_braided_group(const HopfAlgebra& h);

/// P with a right B-coaction ρ: P → P⊗B that is a morphism and an algebra map into P⊗̲B.
struct BraidedBundle {
    std::string name;
    BraidedCategory cat;
    ComoduleAlgebra total;  // P with its H-coaction
    BraidedGroup fibre;
    Comodule rho;           // over fibre.coalgebra
    GaloisData galois;
    Subspace omega1;
    ComoduleAlgebra base_factor;  // M for the tensor construction

    const Algebra& p() const { return total.algebra; }
    std::size_t dim_p() const { return total.algebra.dim(); }
    std::size_t dim_b() const { return fibre.dim(); }
};

struct BraidedTrivialisation {
    Matrix phi;      // B → P
    Matrix phi_inv;  // braided-convolution inverse
};

/// P = M⊗̲B, ρ = id⊗Δ̲. Throws NotFree or NotGalois; the structural checks are in check_braided_bundle.
BraidedBundle braided_trivial_bundle(const BraidedCategory& cat, const ComoduleAlgebra& m, const BraidedGroup& b,
                                     std::string name = {});
/// ρ a comodule, a morphism and an algebra map into P⊗̲B; χ bijective; base equals M⊗1.
Report check_braided_bundle(const BraidedBundle& b);
/// Φ = η⊗id and Φ⁻¹ = η⊗S̲ for the tensor construction.
BraidedTrivialisation tensor_trivialisation(const BraidedBundle& b);
/// Φ(1) = 1, Φ intertwines Δ̲ with ρ, and Φ⁻¹*Φ = Φ*Φ⁻¹ = ηε.
Report check_braided_trivialisation(const BraidedBundle& b, const BraidedTrivialisation& t);

/// The B-coaction on P⊗P: (id⊗Ψ_{B,P}⊗id)(ρ⊗ρ) followed by multiplication of the B legs.
Matrix braided_pp_coaction(const BraidedBundle& b);
/// Basis of {A: B → Ω¹M morphism with A(1) = 0}, values in M⊗M.
std::vector<Matrix> admissible_gauge_fields(const BraidedBundle& b);
/// ω(b) = Φ⁻¹(b₍₁₎)A(b₍₂₎)Φ(b₍₃₎) + Φ⁻¹(b₍₁₎)dΦ(b₍₂₎), A taken in M⊗M and pushed along M → P.
Matrix tensor_connection(const BraidedBundle& b, const BraidedTrivialisation& t, const Matrix& a);
/// Values in Ω¹P, ω(1) = 0, χ̃ω(b) = 1⊗b − ε(b)1⊗1, ω a morphism B → P⊗P; with a candidate
/// adjoint coaction also its comodule axioms and (ω⊗id)Ad = ρ_{P⊗P}ω.
Report check_braided_connection(const BraidedBundle& b, const Matrix& omega, const Comodule* adjoint = nullptr);
/// Coaction Ad on B solving (ω⊗id)Ad = ρ_{P⊗P}ω for the given connection, with Ad(1) = 1⊗1;
/// nullopt when the constraints are inconsistent.
std::optional<Comodule> solve_adjoint_candidate(const BraidedBundle& b, const Matrix& omega);

struct Bosonisation {
    BraidedCategory cat;
    BraidedGroup b;
    HopfAlgebra hopf;        // on H⊗B, index h*dim B + c
    ComoduleAlgebra regular;  // H_R
    Report report;
};
/// Algebra H_R⊗̲B, coproduct Δ(h⊗c) = (h₁⊗c₍₁₎⁽¹⁾)⊗(h₂c₍₁₎⁽²⁾⊗c₍₂₎), antipode solved by
/// convolution. Throws HopfAxiomFailure; the report also compares with the semidirect
/// product (h⊗c)(g⊗d) = hg₁⊗(c◁g₂)d, c◁g = c⁽¹⁾R(c⁽²⁾⊗g).
Bosonisation bosonise(const BraidedCategory& cat, const BraidedGroup& b);
/// Fibre B over base H, built as the tensor bundle H_R⊗̲B.
BraidedBundle bosonisation_as_braided_bundle(const Bosonisation& bos);

struct QuantumBosonisationBundle {
    PrincipalBundle bundle;       // coaction (id⊗π_H)Δ
    Trivialisation trivialisation;  // h ↦ h⊗1
};
/// Structure group H; the base is the fixed subalgebra, isomorphic to B for braided lines.
QuantumBosonisationBundle bosonisation_as_quantum_bundle(const Bosonisation& bos);

struct Entwining {
    Coalgebra c;
    Algebra a;
    Matrix psi;  // C⊗A → A⊗C
};
Report check_entwining(const Entwining& e);

struct BosonisationEntwining {
    Entwining entwining;  // from the coalgebra and Hopf structure
    Matrix braided_psi;   // Ψ(c⊗u⁽¹⁾)u⁽²⁾
    Matrix projection;    // π(h⊗c) = ε(h)c
    Report report;
};
/// Throws EntwiningAxiomFailure; the report also covers agreement of the two ψ, the induced
/// coaction, π a coalgebra map, and ker π a right ideal.
BosonisationEntwining entwining_from_bosonisation(const Bosonisation& bos);

}  // namespace ncg
