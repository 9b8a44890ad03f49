#pragma once

#include <random>

#include "ncgauge/calculus/forms.hpp"

// Base-space gauge calculus. Only the coalgebra structure of B and the algebra M enter,
// so the same functions serve quantum and braided settings.
namespace ncg {

/// A: B → Ω¹M with A(one) = 0.
Report check_gauge_field(const Algebra& m, const Coalgebra& b, const Vec& one, const FormMap& a);

/// dF + A*F − F*A.
FormMap bianchi_residue(const Algebra& m, const Coalgebra& b, const FormMap& a, const FormMap& f);
/// F = dA + A*A; throws BianchiFailure if the Bianchi identity does not hold.
FormMap curvature(const Algebra& m, const Coalgebra& b, const FormMap& a);

/// ∇σ = dσ − (−1)ⁿσ*A, the convolution running over the coaction of V.
FormMap nabla(const Algebra& m, const Comodule& v, const FormMap& a, const FormMap& sigma);
/// ∇²σ = −σ*F, each side rendered in the report witness on failure.
CheckResult check_nabla_squared(const Algebra& m, const Coalgebra& b, const Comodule& v, const FormMap& a,
                                const FormMap& sigma);

/// γ: B → M convolution-invertible with γ(one) = 1; returns γ⁻¹ or throws InvariantFailure.
Matrix local_gauge_inverse(const Algebra& m, const Coalgebra& b, const Vec& one, const Matrix& gamma);
/// A^γ = γ⁻¹*A*γ + γ⁻¹*dγ.
FormMap local_gauge_transform(const Algebra& m, const Coalgebra& b, const FormMap& a, const Matrix& gamma,
                              const Matrix& gamma_inv);
/// σ^γ = σ*γ.
FormMap local_gauge_transform(const Algebra& m, const Comodule& v, const FormMap& sigma, const Matrix& gamma);
/// F^γ = γ⁻¹*F*γ and ∇^γ(σ^γ) = (∇σ)^γ.
Report check_local_covariance(const Algebra& m, const Coalgebra& b, const Comodule& v, const Vec& one,
                              const FormMap& a, const Matrix& gamma, const FormMap& sigma);

/// Seeded generic elements: a gauge field (A(one) = 0), a unit-preserving invertible γ, and σ: V → ΩⁿM.
FormMap sample_gauge_field(const Algebra& m, const Coalgebra& b, const Vec& one, std::mt19937& rng, int conductor = 1);
Matrix sample_local_gauge(const Algebra& m, const Coalgebra& b, const Vec& one, std::mt19937& rng, int conductor = 1);
FormMap sample_matter_field(const Algebra& m, std::size_t dim_v, std::size_t degree, std::mt19937& rng,
                            int conductor = 1);

}  // namespace ncg
