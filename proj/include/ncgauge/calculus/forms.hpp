#pragma once

#include "ncgauge/comodule/comodule.hpp"

namespace ncg {

/// Ω^nP inside P^{⊗(n+1)}: the common kernel of multiplication at each adjacent pair of legs.
struct UniversalForms {
    Algebra algebra;
    std::size_t degree = 0;
    Subspace space;
};

/// Explicit basis; intended for small algebras or low degree (the ambient is dim P^{n+1}).
UniversalForms universal_forms(const Algebra& p, std::size_t n);
/// Membership in Ω^nP by contraction, without a basis.
bool is_form(const Algebra& p, const Vec& x, std::size_t n);
/// d(a0⊗…⊗an) = Σ_i (−1)^i a0⊗…⊗1⊗a_i⊗…⊗an. Throws NotAForm if x ∉ Ω^nP.
Vec differential(const Algebra& p, const Vec& x, std::size_t n);
/// Same without the membership test (d is defined on all of P^{⊗(n+1)}).
Vec differential_unchecked(const Algebra& p, const Vec& x, std::size_t n);
/// Concatenation product Ω^n × Ω^m → Ω^{n+m}: the touching legs are multiplied.
Vec form_product(const Algebra& p, const Vec& x, std::size_t n, const Vec& y, std::size_t m);
/// Image of an n-form of M under the inclusion M ⊂ P applied on every leg.
Vec embed_form(const Matrix& inclusion, const Vec& x, std::size_t n);
Matrix embed_form_map(const Matrix& inclusion, const Matrix& values, std::size_t n);

struct HorizontalSubspaces {
    Subspace p_dm_p;   // P(Ω¹M)P ⊂ P⊗P
    Subspace omega_m_p;  // (Ω^nM)P ⊂ P^{⊗(n+1)}
    std::size_t degree = 0;
};
/// P(Ω¹M)P = span{u⊗mv − um⊗v}.
Subspace p_omega1m_p(const Algebra& p, const FixedSubalgebra& m);
/// (Ω^nM)P = span{ξ·v : ξ ∈ Ω^nM, v ∈ P}.
Subspace omega_m_p(const Algebra& p, const FixedSubalgebra& m, std::size_t n);
HorizontalSubspaces horizontal_subspaces(const Algebra& p, const FixedSubalgebra& m, std::size_t n);

/// A linear map from some source space into Ω^nP ⊂ P^{⊗(n+1)}; column j is the value on e_j.
struct FormMap {
    Matrix values;
    std::size_t degree = 0;

    friend FormMap operator+(const FormMap& a, const FormMap& b);
    friend FormMap operator-(const FormMap& a, const FormMap& b);
    friend FormMap operator*(const Scalar& s, const FormMap& a);
    friend bool operator==(const FormMap& a, const FormMap& b) {
        return a.degree == b.degree && a.values == b.values;
    }
    friend bool operator!=(const FormMap& a, const FormMap& b) { return !(a == b); }
};

/// (f*g)(c) = f(c1)·g(c2), legs joined by the form product.
FormMap convolve(const Coalgebra& c, const Algebra& p, const FormMap& f, const FormMap& g);
/// (σ*A)(v) = σ(v⁽¹⁾)·A(v⁽²⁾) using the coaction of V.
FormMap convolve(const Comodule& v, const Algebra& p, const FormMap& sigma, const FormMap& a);
/// (Σ⊗id)ρ_V = ρ_{P^{⊗(n+1)}}∘Σ, checked on each basis vector of V.
CheckResult check_tensorial(std::string name, const HopfAlgebra& h, const Comodule& p_rho, const Comodule& v,
                            const FormMap& sigma);
/// Every value of Σ lies in the given subspace of P^{⊗(n+1)}.
CheckResult check_values_in(std::string name, const FormMap& sigma, const Subspace& s, const StructuredSpace& source);
/// d applied to every value.
FormMap differential(const Algebra& p, const FormMap& f);

}  // namespace ncg
