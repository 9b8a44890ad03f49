#pragma once

#include <memory>

#include "ncgauge/hopf/hopf.hpp"

namespace ncg {

/// Right comodule V → V⊗C. The coaction matrix has shape (dim V · dim C) x dim V.
class Comodule {
public:
    Comodule() = default;
    Comodule(StructuredSpace space, Coalgebra coalgebra, Matrix coaction);

    std::size_t dim() const { return impl_->space.dim(); }
    const StructuredSpace& space() const { return impl_->space; }
    const Coalgebra& coalgebra() const { return impl_->coalgebra; }
    const Matrix& coaction() const { return impl_->coaction; }
    /// Sparse ρ(e_i), indices v*dim C + c.
    const TermList& coact(std::size_t i) const { return impl_->table[i]; }
    Vec apply(const Vec& v) const { return impl_->coaction * v; }
    bool valid() const { return impl_ != nullptr; }

private:
    struct Impl {
        StructuredSpace space;
        Coalgebra coalgebra;
        Matrix coaction;
        std::vector<TermList> table;
    };
    std::shared_ptr<const Impl> impl_;
};

/// Coassociativity and counit law for the coaction.
Report check_comodule(const Comodule& v);

/// ρ(v) = v⊗e for a grouplike e.
Comodule trivial_comodule(const StructuredSpace& space, const Coalgebra& c, const Vec& e);

struct ComoduleAlgebra {
    Algebra algebra;
    HopfAlgebra host;
    Comodule comodule;
};

/// H coacting on itself by Δ.
ComoduleAlgebra regular_comodule_algebra(const HopfAlgebra& h);

/// Comodule axioms plus ρ(uv) = ρ(u)ρ(v) and ρ(1) = 1⊗1.
Report check_comodule_algebra(const ComoduleAlgebra& p);

struct FixedSubalgebra {
    Subspace subspace;  // inside P
    Matrix inclusion;   // dim P x dim M, columns are the echelon basis
    Algebra algebra;    // structure constants in the echelon basis

    std::size_t dim() const { return subspace.dim(); }
    /// Coordinates of an element of M in the echelon basis.
    Vec coordinates(const Vec& u) const;
};

/// {u | ρ(u) = u⊗e}, with the induced product; throws InvariantFailure if not a unital subalgebra.
FixedSubalgebra fixed_subalgebra(const Algebra& p, const Comodule& rho, const Vec& e);
FixedSubalgebra fixed_subalgebra(const ComoduleAlgebra& p);

struct StandardComodules {
    Comodule right;    // Δ
    Comodule left;     // h ↦ h2⊗Sh1
    Comodule adjoint;  // h ↦ h2⊗(Sh1)h3
};
StandardComodules standard_comodules(const HopfAlgebra& h);

/// v⊗w ↦ v⁽¹⁾⊗w⁽¹⁾⊗v⁽²⁾w⁽²⁾.
Comodule tensor_comodule(const HopfAlgebra& h, const Comodule& v, const Comodule& w);

/// Tensor coaction on V^{⊗legs}, evaluated sparsely on x; result indexed (v-tuple)*dim H + h.
Vec coact_tensor_power(const HopfAlgebra& h, const Comodule& v, const Vec& x, std::size_t legs);

/// Basis of {f : V→W | (f⊗id)ρ_V = ρ_W f}; f flattened row-major (w * dim V + v).
Subspace intertwiner_space(const Comodule& v, const Comodule& w);
Matrix hom_matrix(const Vec& flat, std::size_t rows, std::size_t cols);
Vec hom_vector(const Matrix& f);
/// Witnessed check that f intertwines the two coactions.
CheckResult check_intertwiner(std::string name, const Matrix& f, const Comodule& v, const Comodule& w);

struct PointedComodule {
    Comodule comodule;
    Vec one;
};
/// Throws InvariantFailure unless ρ(one) = one⊗e.
PointedComodule make_pointed(const Comodule& v, const Vec& one, const Vec& e);

}  // namespace ncg
