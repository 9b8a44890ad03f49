#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncgauge/foundation/matrix.hpp"

namespace ncg {

/// Finite-dimensional space with named basis vectors. Copies share the label list.
class StructuredSpace {
public:
    StructuredSpace() : labels_(std::make_shared<const std::vector<std::string>>()) {}
    explicit StructuredSpace(std::vector<std::string> labels);
    /// Basis "prefix0", "prefix1", ...
    static StructuredSpace numbered(std::size_t dim, const std::string& prefix = "e");
    /// Tensor product, labels "a⊗b" in row-major order.
    static StructuredSpace tensor(const StructuredSpace& a, const StructuredSpace& b);
    static StructuredSpace tensor_power(const StructuredSpace& a, std::size_t n);
    static StructuredSpace ground();  // the field itself, basis "1"

    std::size_t dim() const { return labels_->size(); }
    const std::string& label(std::size_t i) const { return labels_->at(i); }
    const std::vector<std::string>& labels() const { return *labels_; }
    friend bool operator==(const StructuredSpace& a, const StructuredSpace& b) {
        return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> labels_;
};

/// Renders a vector as "2*a⊗b - 1/2*c", or "0".
std::string render(const Vec& v, const StructuredSpace& space);
std::string render(const Vec& v);

struct LinMap {
    StructuredSpace source;
    StructuredSpace target;
    Matrix matrix;  // dim(target) x dim(source)

    LinMap() = default;
    LinMap(StructuredSpace src, StructuredSpace tgt, Matrix m);
    static LinMap identity(const StructuredSpace& s);
    static LinMap zero(const StructuredSpace& src, const StructuredSpace& tgt);

    Vec operator()(const Vec& v) const { return matrix * v; }
    /// this ∘ g
    LinMap compose(const LinMap& g) const;
    friend bool operator==(const LinMap& a, const LinMap& b) { return a.matrix == b.matrix; }
};

/// Subspace of k^n held as a reduced row echelon basis (rows of `basis`).
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(StructuredSpace ambient);  // zero subspace
    static Subspace span(const StructuredSpace& ambient, const std::vector<Vec>& gens);
    static Subspace span_columns(const StructuredSpace& ambient, const Matrix& cols);
    static Subspace whole(const StructuredSpace& ambient);

    const StructuredSpace& ambient() const { return ambient_; }
    std::size_t ambient_dim() const { return ambient_.dim(); }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    Vec vector(std::size_t i) const { return basis_.row(i); }
    std::vector<Vec> vectors() const;
    /// ambient_dim x dim matrix whose columns are the basis vectors.
    Matrix columns() const;

    /// v minus its echelon reduction against the basis; zero iff v is in the subspace.
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const;
    bool contains(const Subspace& w) const;
    /// Coordinates in the echelon basis, if v is a member.
    std::optional<Vec> coordinates(const Vec& v) const;

    Subspace sum(const Subspace& w) const;
    Subspace intersect(const Subspace& w) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_dim() == b.ambient_dim() && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    StructuredSpace ambient_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// V / W, with coordinates on the non-pivot positions of W's echelon basis.
struct QuotientSpace {
    StructuredSpace ambient;
    Subspace relations;
    StructuredSpace space;  // labels "[x]" for the chosen representatives
    LinMap projection;      // ambient -> space
    LinMap section;         // space -> ambient
};

std::size_t rank(const Matrix& m);
Subspace kernel(const LinMap& f);
Subspace image(const LinMap& f);
Subspace kernel(const Matrix& m);
/// Kernel of a tall system given as `count` row blocks over `unknowns` variables. Each block is
/// applied to the kernel found so far, so the full system is never materialised.
Subspace kernel_by_blocks(const StructuredSpace& unknowns, std::size_t count,
                          const std::function<Matrix(std::size_t)>& block);
Subspace image(const Matrix& m);
/// Some x with f x = y, chosen by leftmost pivoting (free variables zero).
std::optional<Vec> solve(const Matrix& f, const Vec& y);
std::optional<Vec> solve(const LinMap& f, const Vec& y);
/// Solve F X = Y column by column; nullopt if any column is unsolvable.
std::optional<Matrix> solve(const Matrix& f, const Matrix& y);
/// Throws NotInvertible.
Matrix inverse(const Matrix& m);
LinMap inverse(const LinMap& f);
QuotientSpace quotient(const StructuredSpace& v, const Subspace& w);

/// base + span(directions), each element a rows x cols matrix.
struct AffineFamily {
    Matrix base;
    std::vector<Matrix> directions;
};
/// Solutions X = K c of A·vec(X) = rhs, where the columns of `k` span the admissible vec(X)
/// (row-major flattening). Empty when the system has no solution.
std::optional<AffineFamily> affine_family(const Matrix& k, const Matrix& a, const Vec& rhs, std::size_t rows,
                                          std::size_t cols);
LinMap tensor_map(const LinMap& f, const LinMap& g);

}  // namespace ncg
