#pragma once

#include <optional>
#include <string>

#include "ncgauge/foundation/report.hpp"
#include "ncgauge/hopf/algebra.hpp"

namespace ncg {

struct HopfAlgebra {
    std::string name;
    Algebra algebra;
    Coalgebra coalgebra;
    Matrix antipode;
    /// Optional dual-quasitriangular functional, R(e_a⊗e_b) at (a, b).
    std::optional<Matrix> r_form;

    HopfAlgebra() = default;
    HopfAlgebra(std::string name, Algebra a, Coalgebra c, Matrix s, std::optional<Matrix> r = std::nullopt);

    std::size_t dim() const { return algebra.dim(); }
    const StructuredSpace& space() const { return algebra.space(); }
    const Vec& unit() const { return algebra.unit(); }
    const Vec& counit() const { return coalgebra.counit(); }
    ConvolutionAlgebra endomorphisms() const { return ConvolutionAlgebra(coalgebra, algebra); }
    /// Index of the basis label, throws if absent.
    std::size_t index_of(const std::string& label) const;
    Vec element(const std::string& label) const { return basis_vec(dim(), index_of(label)); }
};

/// Itemized axiom check: associativity, unit, coassociativity, counit, bialgebra, antipode.
Report check_hopf_axioms(const HopfAlgebra& h);
Report check_algebra_axioms(const Algebra& a);
Report check_coalgebra_axioms(const Coalgebra& c);

/// Throws NotInvertible.
Matrix antipode_inverse(const HopfAlgebra& h);

struct DualQuasitriangular {
    HopfAlgebra host;
    Matrix r;      // r(a, b) = R(e_a⊗e_b)
    Matrix r_inv;  // convolution inverse on H⊗H

    Scalar operator()(std::size_t a, std::size_t b) const { return r(a, b); }
};

/// Builds the structure from R, computing R⁻¹ by a convolution solve; throws NotInvertible.
DualQuasitriangular make_dqt(const HopfAlgebra& h, const Matrix& r);
/// Bicharacter identities, convolution invertibility, and quasi-commutativity
/// b1 a1 R(a2⊗b2) = R(a1⊗b1) a2 b2.
Report check_dqt(const HopfAlgebra& h, const Matrix& r);
/// R as a convolution element Hom(H⊗H, k), shape 1 x dim².
Matrix r_as_functional(const Matrix& r);

/// Dual Hopf algebra on the dual basis (labels suffixed with "*").
HopfAlgebra dualize(const HopfAlgebra& h);

}  // namespace ncg
