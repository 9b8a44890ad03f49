#pragma once

#include <optional>

#include "ncgauge/bundle/gauge.hpp"

namespace ncg {

/// E = (P⊗V)^H for a pointed comodule V, with its left M-module structure.
struct AssociatedBundle {
    PointedComodule v;
    Comodule pv;                   // P_ρ⊗V
    Subspace e;                    // E ⊂ P⊗V
    Matrix basis;                  // dim(P⊗V) x dim E
    std::vector<Matrix> m_action;  // left multiplication by each basis element of M, in E coordinates
    Report report;                 // M⊗1 ⊆ E and closure under M

    std::size_t dim() const { return e.dim(); }
    std::size_t dim_v() const { return v.comodule.dim(); }
};
AssociatedBundle associated_bundle(const PrincipalBundle& b, const PointedComodule& v);

/// Cross sections s: E → M (dim M x dim E, M coordinates): unit-preserving left M-module maps.
Report check_section(const PrincipalBundle& b, const AssociatedBundle& e, const Matrix& s);
/// Σ: V → P_ρ intertwiners with Σ(1) = 1 (dim P x dim V).
Report check_pseudotensorial(const PrincipalBundle& b, const AssociatedBundle& e, const Matrix& sigma);

/// s(u⊗v) = uΣ(v).
Matrix section_from_sigma(const PrincipalBundle& b, const AssociatedBundle& e, const Matrix& sigma);
/// Σ(v) = τ⁽¹⁾(S⁻¹v⁽²⁾) s(τ⁽²⁾(S⁻¹v⁽²⁾)⊗v⁽¹⁾), evaluated by rewriting the lifted τ-term modulo
/// P(Ω¹M)P⊗V as an element of P⊗E.
Matrix sigma_from_section(const PrincipalBundle& b, const AssociatedBundle& e, const Matrix& s);

std::optional<AffineFamily> section_space(const PrincipalBundle& b, const AssociatedBundle& e);
std::optional<AffineFamily> pseudotensorial_space(const PrincipalBundle& b, const AssociatedBundle& e);

/// Both maps valid and both roundtrips exact, starting from Σ.
Report check_section_correspondence(const PrincipalBundle& b, const AssociatedBundle& e, const Matrix& sigma);

/// Φ_E(v) = Φ(S⁻¹v⁽²⁾)⊗v⁽¹⁾, shape dim(P⊗V) x dim V.
Matrix fibre_trivialisation(const PrincipalBundle& b, const AssociatedBundle& e, const Trivialisation& t);
/// Φ_E lands in E and m⊗v ↦ mΦ_E(v) is a bijection M⊗V → E.
Report check_fibre_trivialisation(const PrincipalBundle& b, const AssociatedBundle& e, const Trivialisation& t);

}  // namespace ncg
