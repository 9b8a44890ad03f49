#pragma once

#include <optional>
#include <vector>

#include "ncgauge/bundle/galois.hpp"

namespace ncg {

/// ω: H → Ω¹P ⊂ P⊗P, stored on all of H with ω(1) = 0. Shape dim P² x dim H.
struct ConnectionForm {
    Matrix omega;
};

/// Π on Ω¹P, stored as a matrix on P⊗P; only its restriction to Ω¹P is meaningful.
struct ConnectionProjection {
    Matrix pi;
};

/// Values in Ω¹P, χ̃ω(h) = 1⊗h − ε(h)1⊗1, ω(1) = 0, and ω: H_Ad → P_ρ⊗P_ρ.
Report check_connection(const PrincipalBundle& b, const Matrix& omega);
/// Validates; throws InvariantFailure naming the failed clause.
ConnectionForm make_connection(const PrincipalBundle& b, const Matrix& omega);

/// u⊗v ↦ u v⁽¹⁾ ω(v⁽²⁾), without validation.
Matrix projection_matrix(const PrincipalBundle& b, const Matrix& omega);
/// Π² = Π, left P-linearity, ker Π = P(Ω¹M)P, covariance and χ̃Π = χ̃, all on Ω¹P.
Report check_projection(const PrincipalBundle& b, const Matrix& pi);
ConnectionProjection projection_from_connection(const PrincipalBundle& b, const ConnectionForm& w);
/// ω(h) = Π τ̃(h − ε(h)1), with τ lifted through the quotient section.
ConnectionForm connection_from_projection(const PrincipalBundle& b, const ConnectionProjection& p);

/// The affine space of connections: base + span(directions). Solved densely, so meant for small P.
using ConnectionSpace = AffineFamily;
std::optional<ConnectionSpace> connection_space(const PrincipalBundle& b);

struct StrongVerdict {
    bool strong = false;
    Report report;  // one check per criterion, each with a witness when it fails
};
/// (id−Π)du ∈ (Ω¹M)P for all u, cross-checked against the coaction form of the same condition.
/// Throws InternalInconsistency if the two verdicts differ.
StrongVerdict is_strong(const PrincipalBundle& b, const ConnectionForm& w);

/// DΣ for Σ: V → (ΩⁿM)P ⊂ ΩⁿP. Writing Σ(v) = Σ_k θ_k p_k with θ_k ∈ ΩⁿM,
/// DΣ(v) = Σ_k dθ_k·p_k + (−1)ⁿ θ_k·(id−Π)dp_k, which is (id−Π)dΣ extended to n-forms.
FormMap covariant_derivative(const PrincipalBundle& b, const ConnectionForm& w, const FormMap& sigma);
/// D(id) for id: P_ρ → P_ρ, i.e. u ↦ (id−Π)du.
FormMap covariant_derivative_of_identity(const PrincipalBundle& b, const ConnectionForm& w);
/// Intertwines V → Ω^nP and lands in (Ω^nM)P.
Report check_strongly_tensorial(const PrincipalBundle& b, const Comodule& v, const FormMap& sigma);

}  // namespace ncg
