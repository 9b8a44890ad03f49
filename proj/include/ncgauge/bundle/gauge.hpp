#pragma once

#include <optional>
#include <vector>

#include "ncgauge/bundle/connection.hpp"

namespace ncg {

/// Γ: H → P, unit-preserving, H_Ad → P_ρ, with its convolution inverse.
struct GaugeTransform {
    Matrix gamma;
    Matrix gamma_inv;
};
Report check_gauge_transform(const PrincipalBundle& b, const Matrix& gamma);
GaugeTransform make_gauge_transform(const PrincipalBundle& b, const Matrix& gamma);
/// η∘ε as a gauge transform.
GaugeTransform identity_gauge(const PrincipalBundle& b);

/// Θ(1) = 1, Θ: P_ρ → P_ρ, left M-linear, invertible.
Report check_bundle_map(const PrincipalBundle& b, const Matrix& theta);
/// Θ(u) = u⁽¹⁾Γ(u⁽²⁾); the bundle-map properties are verified before returning.
Matrix theta_from_gamma(const PrincipalBundle& b, const GaugeTransform& g);
/// Γ(h) = τ⁽¹⁾(h)Θ(τ⁽²⁾(h)); verifies both roundtrips.
GaugeTransform gamma_from_theta(const PrincipalBundle& b, const Matrix& theta);

/// Φ: H_R → P_ρ, Φ(1) = 1, with its convolution inverse.
struct Trivialisation {
    Matrix phi;
    Matrix phi_inv;
};
Report check_trivialisation(const PrincipalBundle& b, const Matrix& phi);
Trivialisation make_trivialisation(const PrincipalBundle& b, const Matrix& phi);

/// P^Γ: the same comodule with product Θ(Θ⁻¹(u)Θ⁻¹(v)).
struct GaugedBundle {
    PrincipalBundle bundle;
    Matrix theta;
    Matrix theta_inv;
};
GaugedBundle bundle_gauge_transform(const PrincipalBundle& b, const GaugeTransform& g);

/// Φ⁻¹*dΦ + Φ⁻¹*A*Φ for A: H → Ω¹M, without validation.
Matrix gauge_field_connection(const PrincipalBundle& b, const Trivialisation& t, const FormMap& a);
/// As above; checks the connection axioms and strength, throwing InvariantFailure otherwise.
ConnectionForm connection_from_gauge_field(const PrincipalBundle& b, const Trivialisation& t, const FormMap& a);
/// Γ = Φ⁻¹*γ*Φ for γ: H → M.
GaugeTransform global_gauge_from_local(const PrincipalBundle& b, const Trivialisation& t, const Matrix& gamma);

/// Transformation laws of P^Γ: same base, connections map to connections with (Θ⊗Θ)∘Π = Π^Γ∘(Θ⊗Θ),
/// Φ^Γ = Θ∘Φ = Φ*Γ, and (ω_{A,P,Φ})^Γ = ω_{A,P^Γ,Φ^Γ} for each gauge field.
Report check_bundle_gauge_covariance(const PrincipalBundle& b, const GaugeTransform& g, const GaugedBundle& pg,
                                     const std::vector<ConnectionForm>& connections, const Trivialisation* t,
                                     const std::vector<FormMap>& fields);
/// For Γ built from a local γ: Φ^Γ = γ*Φ and (ω_{A,P,Φ})^Γ = ω_{A^γ,P^Γ,Φ}.
Report check_local_to_global(const PrincipalBundle& b, const Trivialisation& t, const Matrix& gamma,
                             const std::vector<FormMap>& fields);

/// Outcome of the search: Pass with a trivialisation, Fail when none exists, Undecided if the
/// evaluation grid exceeded the budget.
struct TrivialisationSearch {
    Status status = Status::Undecided;
    std::optional<Trivialisation> found;
    std::string detail;
};
TrivialisationSearch find_trivialisation(const PrincipalBundle& b, std::size_t max_points = 4096);

}  // namespace ncg
