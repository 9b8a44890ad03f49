#pragma once

#include "ncgauge/bundle/cocycle.hpp"
#include "ncgauge/comodule/comodule.hpp"

namespace ncg {

/// k(ℤ₄) with the k(ℤ₂)-coaction dual to translation by 2: ρ(δ_a) = Σ_s δ_{a−2s}⊗δ_s.
ComoduleAlgebra fn_z4_over_fn_z2();

/// M = k, H = kℤ₂, c(g⊗g) = μ and c = 1 on the other basis pairs; α trivial.
CocycleData crossprod_mu(const Scalar& mu);

/// M = k(ℤ₂) graded by 1 ↦ 0, δ₀−δ₁ ↦ 1; H = k(ℤ₂) acting by projection onto graded parts; c trivial.
CocycleData crossprod_action();

/// M₃(k) graded over ℤ₂ by row degrees (0,0,1), as a kℤ₂-comodule algebra. Galois over M₂⊕k,
/// but no degree-one element is invertible, so it admits no trivialisation.
ComoduleAlgebra m3_graded();

/// k(ℤ₂)⊕k(ℤ₂) = k(ℤ₄ as a set) with k(ℤ₂) swapping δ₀, δ₁ and fixing δ₂, δ₃: not free.
ComoduleAlgebra fn_z2_sum_not_free();

}  // namespace ncg
