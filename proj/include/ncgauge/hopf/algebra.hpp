#pragma once

#include <memory>

#include "ncgauge/foundation/linalg.hpp"
#include "ncgauge/foundation/tensor.hpp"

namespace ncg {

/// Associative unital algebra given by structure constants. Immutable; copies share storage.
class Algebra {
public:
    Algebra() = default;
    /// mult is dim x dim², column i*dim+j holding e_i e_j.
    Algebra(StructuredSpace space, Matrix mult, Vec unit);

    static Algebra ground();
    /// Ordinary tensor product algebra A⊗B.
    static Algebra tensor(const Algebra& a, const Algebra& b);

    std::size_t dim() const { return impl_->space.dim(); }
    const StructuredSpace& space() const { return impl_->space; }
    const Matrix& mult() const { return impl_->mult; }
    const Vec& unit() const { return impl_->unit; }
    /// Sparse form of e_i e_j.
    const TermList& product(std::size_t i, std::size_t j) const { return impl_->table[i * dim() + j]; }
    const std::vector<TermList>& product_table() const { return impl_->table; }

    Vec multiply(const Vec& a, const Vec& b) const;
    Matrix left_mult(const Vec& a) const;
    Matrix right_mult(const Vec& a) const;
    bool valid() const { return impl_ != nullptr; }

private:
    struct Impl {
        StructuredSpace space;
        Matrix mult;
        Vec unit;
        std::vector<TermList> table;
    };
    std::shared_ptr<const Impl> impl_;
};

/// Product in A⊗B computed from the factors' tables, without building A⊗B's structure constants.
Vec tensor_multiply(const Algebra& a, const Algebra& b, const Vec& x, const Vec& y);

/// Coassociative counital coalgebra given by structure constants.
class Coalgebra {
public:
    Coalgebra() = default;
    /// comult is dim² x dim, column i holding Δe_i; counit has length dim.
    Coalgebra(StructuredSpace space, Matrix comult, Vec counit);

    static Coalgebra ground();
    /// Tensor product coalgebra: Δ(c⊗d) = c1⊗d1⊗c2⊗d2.
    static Coalgebra tensor(const Coalgebra& a, const Coalgebra& b);

    std::size_t dim() const { return impl_->space.dim(); }
    const StructuredSpace& space() const { return impl_->space; }
    const Matrix& comult() const { return impl_->comult; }
    const Vec& counit() const { return impl_->counit; }
    /// Sparse Δe_i over the basis of C⊗C.
    const TermList& coproduct(std::size_t i) const { return impl_->table[i]; }
    const std::vector<TermList>& coproduct_table() const { return impl_->table; }
    /// Sparse (Δ⊗id)Δe_i over the basis of C⊗C⊗C.
    const TermList& coproduct3(std::size_t i) const { return impl_->table3[i]; }

    Vec comultiply(const Vec& c) const;
    Scalar counit(const Vec& c) const;
    bool valid() const { return impl_ != nullptr; }

private:
    struct Impl {
        StructuredSpace space;
        Matrix comult;
        Vec counit;
        std::vector<TermList> table;
        std::vector<TermList> table3;
    };
    std::shared_ptr<const Impl> impl_;
};

/// Matrix of the linear map C → A^{⊗k}, convenient alias for convolution-algebra elements.
using ConvMap = Matrix;

/// Hom(C, A) with the convolution product (f*g)(c) = f(c1) g(c2).
class ConvolutionAlgebra {
public:
    ConvolutionAlgebra(Coalgebra c, Algebra a) : c_(std::move(c)), a_(std::move(a)) {}

    const Coalgebra& coalgebra() const { return c_; }
    const Algebra& algebra() const { return a_; }

    ConvMap product(const ConvMap& f, const ConvMap& g) const;
    /// η∘ε
    ConvMap unit() const;
    /// Single exact solve of f*g = g*f = η∘ε; nullopt when no inverse exists.
    std::optional<ConvMap> inverse(const ConvMap& f) const;
    /// Matrix of g ↦ f*g on Hom(C,A), with g flattened row-major (a*dimC + c).
    Matrix left_operator(const ConvMap& f) const;
    Matrix right_operator(const ConvMap& f) const;

private:
    Coalgebra c_;
    Algebra a_;
};

}  // namespace ncg
