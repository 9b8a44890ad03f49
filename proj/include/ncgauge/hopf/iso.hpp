#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncgauge/hopf/hopf.hpp"

namespace ncg {

struct GrouplikeSearch {
    std::vector<Vec> grouplikes;
    /// True when the semisimple commutative quotient of H* split completely over the
    /// candidate eigenvalues, so the list is provably complete.
    bool complete = false;
};

/// Characters of a finite-dimensional algebra: each returned vector lists χ(e_i).
struct CharacterSearch {
    std::vector<Vec> characters;
    bool complete = false;
};
CharacterSearch algebra_characters(const Algebra& a);

/// Grouplike elements of H, found as the characters of H*.
GrouplikeSearch grouplikes(const HopfAlgebra& h);
/// {x : Δx = x⊗a + b⊗x}.
Subspace skew_primitives(const HopfAlgebra& h, const Vec& a, const Vec& b);

struct HopfIsomorphism {
    Matrix map;  // target basis x source basis
    std::string description;
};

/// Searches for a Hopf algebra isomorphism source → target generated by grouplikes and
/// skew-primitives; every candidate is verified on the full structure before being returned.
std::optional<HopfIsomorphism> find_isomorphism(const HopfAlgebra& source, const HopfAlgebra& target);
/// Checks that `map` preserves product, unit, coproduct, counit and antipode and is bijective.
Report check_hopf_morphism(const HopfAlgebra& source, const HopfAlgebra& target, const Matrix& map);

}  // namespace ncg
