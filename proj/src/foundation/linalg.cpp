#include "ncgauge/foundation/linalg.hpp"

#include <sstream>

#include "ncgauge/foundation/errors.hpp"
#include "ncgauge/foundation/kernels.hpp"

namespace ncg {

StructuredSpace::StructuredSpace(std::vector<std::string> labels)
    : labels_(std::make_shared<const std::vector<std::string>>(std::move(labels))) {}

StructuredSpace StructuredSpace::numbered(std::size_t dim, const std::string& prefix) {
    std::vector<std::string> l;
    l.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) l.push_back(prefix + std::to_string(i));
    return StructuredSpace(std::move(l));
}

StructuredSpace StructuredSpace::tensor(const StructuredSpace& a, const StructuredSpace& b) {
    std::vector<std::string> l;
    l.reserve(a.dim() * b.dim());
    for (const auto& x : a.labels())
        for (const auto& y : b.labels()) l.push_back(x + "⊗" + y);
    return StructuredSpace(std::move(l));
}

StructuredSpace StructuredSpace::tensor_power(const StructuredSpace& a, std::size_t n) {
    if (n == 0) return ground();
    StructuredSpace s = a;
    for (std::size_t i = 1; i < n; ++i) s = tensor(s, a);
    return s;
}

StructuredSpace StructuredSpace::ground() { return StructuredSpace(std::vector<std::string>{"1"}); }

namespace {

void render_terms(std::ostream& os, const Vec& v, const std::vector<std::string>* labels) {
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        std::string label = labels ? (*labels)[i] : "e" + std::to_string(i);
        std::string c = v[i].str();
        bool compound = c.find_first_of("+ ", 1) != std::string::npos;
        bool negative = !compound && c[0] == '-';
        if (negative) c.erase(0, 1);
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (compound)
            os << "(" << c << ")*" << label;
        else if (c == "1")
            os << label;
        else
            os << c << "*" << label;
    }
    if (first) os << "0";
}

}  // namespace

std::string render(const Vec& v, const StructuredSpace& space) {
    if (space.dim() != v.size()) return render(v);
    std::ostringstream os;
    render_terms(os, v, &space.labels());
    return os.str();
}

std::string render(const Vec& v) {
    std::ostringstream os;
    render_terms(os, v, nullptr);
    return os.str();
}

LinMap::LinMap(StructuredSpace src, StructuredSpace tgt, Matrix m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
    if (matrix.rows() != target.dim() || matrix.cols() != source.dim())
        throw DimensionMismatch("LinMap: matrix shape does not match spaces");
}

LinMap LinMap::identity(const StructuredSpace& s) { return LinMap(s, s, Matrix::identity(s.dim())); }

LinMap LinMap::zero(const StructuredSpace& src, const StructuredSpace& tgt) {
    return LinMap(src, tgt, Matrix(tgt.dim(), src.dim()));
}

LinMap LinMap::compose(const LinMap& g) const {
    if (!(g.target == source)) throw DimensionMismatch("compose: spaces do not match");
    return LinMap(g.source, target, matrix * g.matrix);
}

Subspace::Subspace(StructuredSpace ambient) : ambient_(std::move(ambient)), basis_(0, ambient_.dim()) {}

Subspace Subspace::span(const StructuredSpace& ambient, const std::vector<Vec>& gens) {
    Subspace s(ambient);
    if (gens.empty()) return s;
    auto e = kernels::rref(Matrix::from_rows(ambient.dim(), gens));
    s.basis_ = std::move(e.r);
    s.pivots_ = std::move(e.pivots);
    return s;
}

Subspace Subspace::span_columns(const StructuredSpace& ambient, const Matrix& cols) {
    if (cols.rows() != ambient.dim()) throw DimensionMismatch("span_columns: wrong ambient dimension");
    Subspace s(ambient);
    if (cols.cols() == 0) return s;
    auto e = kernels::rref(cols.transpose());
    s.basis_ = std::move(e.r);
    s.pivots_ = std::move(e.pivots);
    return s;
}

Subspace Subspace::whole(const StructuredSpace& ambient) {
    Subspace s(ambient);
    s.basis_ = Matrix::identity(ambient.dim());
    for (std::size_t i = 0; i < ambient.dim(); ++i) s.pivots_.push_back(i);
    return s;
}

std::vector<Vec> Subspace::vectors() const {
    std::vector<Vec> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(vector(i));
    return out;
}

Matrix Subspace::columns() const { return basis_.transpose(); }

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != ambient_dim()) throw DimensionMismatch("subspace reduce: length mismatch");
    Vec r = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if (r[p].is_zero()) continue;
        Scalar f = -r[p];
        for (std::size_t c = p; c < ambient_dim(); ++c)
            if (!basis_(i, c).is_zero()) r[c].add_product(f, basis_(i, c));
    }
    return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& w) const {
    for (std::size_t i = 0; i < w.dim(); ++i)
        if (!contains(w.vector(i))) return false;
    return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (!contains(v)) return std::nullopt;
    Vec c(dim());
    for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
}

Subspace Subspace::sum(const Subspace& w) const {
    auto gens = vectors();
    auto more = w.vectors();
    gens.insert(gens.end(), more.begin(), more.end());
    return span(ambient_, gens);
}

Subspace Subspace::intersect(const Subspace& w) const {
    if (dim() == 0 || w.dim() == 0) return Subspace(ambient_);
    Matrix sys = columns().hcat(Scalar(-1) * w.columns());
    Subspace ker = kernel(sys);
    std::vector<Vec> gens;
    for (std::size_t k = 0; k < ker.dim(); ++k) {
        Vec a = ker.vector(k);
        Vec x(ambient_dim());
        for (std::size_t i = 0; i < dim(); ++i)
            if (!a[i].is_zero()) axpy(x, a[i], vector(i));
        gens.push_back(std::move(x));
    }
    return span(ambient_, gens);
}

std::size_t rank(const Matrix& m) { return kernels::rref(m).pivots.size(); }

Subspace kernel_by_blocks(const StructuredSpace& unknowns, std::size_t count,
                          const std::function<Matrix(std::size_t)>& block) {
    Matrix k = Matrix::identity(unknowns.dim());
    for (std::size_t b = 0; b < count && k.cols() > 0; ++b) {
        Matrix rows = block(b);
        if (rows.rows() == 0) continue;
        Subspace local = kernel(rows * k);
        if (local.dim() == k.cols()) continue;
        k = k * local.columns();
    }
    return Subspace::span_columns(unknowns, k);
}

Subspace kernel(const Matrix& m) {
    auto e = kernels::rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> gens;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v(n);
        v[f] = Scalar(1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            if (!e.r(i, f).is_zero()) v[e.pivots[i]] = -e.r(i, f);
        gens.push_back(std::move(v));
    }
    return Subspace::span(StructuredSpace::numbered(n), gens);
}

Subspace image(const Matrix& m) { return Subspace::span_columns(StructuredSpace::numbered(m.rows()), m); }

Subspace kernel(const LinMap& f) {
    Subspace k = kernel(f.matrix);
    return Subspace::span(f.source, k.vectors());
}

Subspace image(const LinMap& f) { return Subspace::span_columns(f.target, f.matrix); }

std::optional<Matrix> solve(const Matrix& f, const Matrix& y) {
    if (f.rows() != y.rows()) throw DimensionMismatch("solve: right-hand side has wrong length");
    auto e = kernels::rref(f.hcat(y));
    Matrix x(f.cols(), y.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        const std::size_t p = e.pivots[i];
        if (p >= f.cols()) return std::nullopt;
        for (std::size_t j = 0; j < y.cols(); ++j) x(p, j) = e.r(i, f.cols() + j);
    }
    return x;
}

std::optional<Vec> solve(const Matrix& f, const Vec& y) {
    auto x = solve(f, Matrix::column_matrix(y));
    if (!x) return std::nullopt;
    return x->column(0);
}

std::optional<Vec> solve(const LinMap& f, const Vec& y) { return solve(f.matrix, y); }

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw NotInvertible("inverse: matrix is not square");
    const std::size_t n = m.rows();
    auto e = kernels::rref(m.hcat(Matrix::identity(n)));
    for (std::size_t i = 0; i < n; ++i)
        if (i >= e.pivots.size() || e.pivots[i] != i) throw NotInvertible("inverse: matrix is singular");
    return e.r.columns(n, n);
}

LinMap inverse(const LinMap& f) { return LinMap(f.target, f.source, inverse(f.matrix)); }

std::optional<AffineFamily> affine_family(const Matrix& k, const Matrix& a, const Vec& rhs, std::size_t rows,
                                          std::size_t cols) {
    const Matrix ak = a * k;
    auto c0 = solve(ak, rhs);
    if (!c0) return std::nullopt;
    auto shape = [&](const Vec& flat) {
        Matrix m(rows, cols);
        m.data() = flat;
        return m;
    };
    AffineFamily out{shape(k * *c0), {}};
    for (const Vec& v : kernel(ak).vectors()) out.directions.push_back(shape(k * v));
    return out;
}

QuotientSpace quotient(const StructuredSpace& v, const Subspace& w) {
    if (w.ambient_dim() != v.dim()) throw DimensionMismatch("quotient: subspace lives elsewhere");
    const std::size_t n = v.dim();
    std::vector<bool> is_pivot(n, false);
    for (auto p : w.pivots()) is_pivot[p] = true;
    std::vector<std::size_t> free;
    std::vector<std::size_t> slot(n, 0);
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) {
            slot[j] = free.size();
            free.push_back(j);
            labels.push_back("[" + v.label(j) + "]");
        }
    StructuredSpace q(std::move(labels));
    Matrix proj(free.size(), n);
    Matrix sec(n, free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        proj(k, free[k]) = Scalar(1);
        sec(free[k], k) = Scalar(1);
    }
    // A pivot basis vector e_p reduces to e_p - row, whose free part is -row.
    for (std::size_t i = 0; i < w.pivots().size(); ++i) {
        const std::size_t p = w.pivots()[i];
        for (std::size_t j : free)
            if (!w.basis()(i, j).is_zero()) proj(slot[j], p) = -w.basis()(i, j);
    }
    Subspace rel = Subspace::span(v, w.vectors());
    return QuotientSpace{v, std::move(rel), q, LinMap(v, q, std::move(proj)), LinMap(q, v, std::move(sec))};
}

LinMap tensor_map(const LinMap& f, const LinMap& g) {
    return LinMap(StructuredSpace::tensor(f.source, g.source), StructuredSpace::tensor(f.target, g.target),
                  kron(f.matrix, g.matrix));
}

}  // namespace ncg
