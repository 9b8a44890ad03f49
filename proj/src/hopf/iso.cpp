#include "ncgauge/hopf/iso.hpp"

#include <array>
#include <functional>
#include <numeric>

#include "ncgauge/foundation/errors.hpp"

namespace ncg {
namespace {

// Eigenvalue candidates tried when splitting a commutative semisimple algebra.
const std::vector<Scalar>& candidate_eigenvalues() {
    static const std::vector<Scalar> values = [] {
        std::vector<Scalar> v{Scalar(0)};
        for (int m = 1; m <= 12; ++m)
            for (int k = 0; k < m; ++k)
                if (std::gcd(k, m) == 1) v.push_back(Scalar::root_of_unity(m, k));
        for (long n : {2, 3, 4, 5})
            for (long s : {1, -1}) {
                v.emplace_back(s * n);
                v.emplace_back(Rational(s, n));
            }
        return v;
    }();
    return values;
}

// Structure constants of A/W for a two-sided ideal W.
struct QuotientAlgebra {
    Algebra algebra;
    Matrix projection;  // dim(A/W) x dim(A)
};

QuotientAlgebra quotient_algebra(const Algebra& a, const Subspace& ideal) {
    QuotientSpace q = quotient(a.space(), ideal);
    const std::size_t r = q.space.dim();
    const Matrix& p = q.projection.matrix;
    const Matrix& s = q.section.matrix;
    Matrix mult(r, r * r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) mult.set_column(i * r + j, p * a.multiply(s.column(i), s.column(j)));
    return {Algebra(q.space, std::move(mult), p * a.unit()), p};
}

Subspace commutator_ideal(const Algebra& a) {
    const std::size_t d = a.dim();
    std::vector<Vec> comm;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            Vec c = a.multiply(basis_vec(d, i), basis_vec(d, j)) - a.multiply(basis_vec(d, j), basis_vec(d, i));
            if (!is_zero(c)) comm.push_back(std::move(c));
        }
    Subspace c = Subspace::span(a.space(), comm);
    std::vector<Vec> gens;
    for (const Vec& v : c.vectors())
        for (std::size_t k = 0; k < d; ++k) {
            Vec left = a.multiply(basis_vec(d, k), v);
            for (std::size_t l = 0; l < d; ++l) gens.push_back(a.multiply(left, basis_vec(d, l)));
        }
    return Subspace::span(a.space(), gens);
}

// Nilradical of a commutative algebra in characteristic zero: the kernel of the trace form.
Subspace trace_radical(const Algebra& b) {
    const std::size_t r = b.dim();
    Vec tr(r);
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t m = 0; m < r; ++m)
            for (const auto& t : b.product(k, m))
                if (t.index == m) tr[k] += t.coeff;
    Matrix gram(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (const auto& t : b.product(i, j)) gram(i, j).add_product(t.coeff, tr[t.index]);
    return kernel(gram);
}

}  // namespace

CharacterSearch algebra_characters(const Algebra& a) {
    const std::size_t d = a.dim();
    QuotientAlgebra ab = quotient_algebra(a, commutator_ideal(a));
    QuotientAlgebra ss = quotient_algebra(ab.algebra, trace_radical(ab.algebra));
    const Algebra& s = ss.algebra;
    const std::size_t r = s.dim();
    const Matrix pi = ss.projection * ab.projection;

    CharacterSearch out;
    out.complete = true;
    if (r == 0) return out;  // only possible for the zero algebra
    std::vector<Subspace> pieces{Subspace::whole(s.space())};
    for (std::size_t k = 0; k < r; ++k) {
        Matrix lk = s.left_mult(basis_vec(r, k));
        std::vector<Subspace> next;
        for (const Subspace& w : pieces) {
            if (w.dim() == 1) {
                next.push_back(w);
                continue;
            }
            std::size_t found = 0;
            for (const Scalar& lam : candidate_eigenvalues()) {
                Matrix shifted = lk - lam * Matrix::identity(r);
                Subspace e = w.intersect(kernel(shifted));
                if (e.dim() == 0) continue;
                found += e.dim();
                next.push_back(std::move(e));
                if (found == w.dim()) break;
            }
            if (found < w.dim()) out.complete = false;
        }
        pieces = std::move(next);
    }
    for (const Subspace& w : pieces) {
        if (w.dim() != 1) {
            out.complete = false;
            continue;
        }
        const Vec v = w.vector(0);
        const std::size_t p = w.pivots()[0];
        Vec chi_s(r);
        for (std::size_t k = 0; k < r; ++k) chi_s[k] = s.multiply(basis_vec(r, k), v)[p] / v[p];
        Vec chi(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < r; ++k) chi[i].add_product(pi(k, i), chi_s[k]);
        out.characters.push_back(std::move(chi));
    }
    return out;
}

GrouplikeSearch grouplikes(const HopfAlgebra& h) {
    // A character χ of H* is the grouplike Σ χ(e_i*) e_i.
    HopfAlgebra dual = dualize(h);
    CharacterSearch cs = algebra_characters(dual.algebra);
    GrouplikeSearch out;
    out.complete = cs.complete;
    for (Vec& g : cs.characters) {
        if (h.coalgebra.comultiply(g) != kron(g, g) || !h.coalgebra.counit(g).is_one())
            throw InvariantFailure("character of the dual is not grouplike", render(g, h.space()));
        if (g == h.unit())
            out.grouplikes.insert(out.grouplikes.begin(), std::move(g));
        else
            out.grouplikes.push_back(std::move(g));
    }
    return out;
}

Subspace skew_primitives(const HopfAlgebra& h, const Vec& a, const Vec& b) {
    const std::size_t d = h.dim();
    Matrix m(d * d, d);
    for (std::size_t i = 0; i < d; ++i) {
        const Vec e = basis_vec(d, i);
        m.set_column(i, h.coalgebra.comultiply(e) - kron(e, a) - kron(b, e));
    }
    return kernel(m);
}

Report check_hopf_morphism(const HopfAlgebra& source, const HopfAlgebra& target, const Matrix& f) {
    Report rep;
    const std::size_t d = source.dim();
    if (f.rows() != target.dim() || f.cols() != d) throw DimensionMismatch("check_hopf_morphism: map has wrong shape");
    StructuredSpace s2 = StructuredSpace::tensor(source.space(), source.space());
    StructuredSpace t2 = StructuredSpace::tensor(target.space(), target.space());
    Matrix ff = kron(f, f);
    rep.add(compare_maps("multiplicative", f * source.algebra.mult(), target.algebra.mult() * ff, s2, target.space()));
    rep.add(compare_vectors("unital", "1", f * source.unit(), target.unit(), target.space()));
    rep.add(compare_maps("comultiplicative", ff * source.coalgebra.comult(), target.coalgebra.comult() * f,
                         source.space(), t2));
    rep.add(compare_maps("counital", Matrix::from_rows(target.dim(), {target.counit()}) * f,
                         Matrix::from_rows(d, {source.counit()}), source.space(), StructuredSpace::ground()));
    rep.add(compare_maps("antipode", f * source.antipode, target.antipode * f, source.space(), target.space()));
    rep.add(check("bijective", target.dim() == d && rank(f) == d));
    return rep;
}

namespace {

// Representatives for P(a,b) modulo k(a-b). Prefer the part moved by conjugation with
// grouplikes, which picks out x rather than x + c(1-g) in Taft-type algebras.
std::vector<std::vector<Vec>> nontrivial_skew(const HopfAlgebra& h, const std::vector<Vec>& g,
                                              const std::vector<std::size_t>& table) {
    const std::size_t n = g.size();
    std::vector<Vec> g_inv(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (table[i * n + j] == 0) g_inv[i] = g[j];
    std::vector<std::vector<Vec>> out;
    for (const Vec& a : g)
        for (const Vec& b : g) {
            Subspace p = skew_primitives(h, a, b);
            Subspace trivial = Subspace::span(h.space(), {a - b});
            std::vector<Vec> moved;
            for (const Vec& v : p.vectors())
                for (std::size_t i = 0; i < n; ++i)
                    moved.push_back(h.algebra.multiply(h.algebra.multiply(g[i], v), g_inv[i]) - v);
            Subspace m = Subspace::span(h.space(), moved);
            if (m.sum(trivial).dim() == p.dim() && m.intersect(trivial).dim() == 0) {
                out.push_back(m.vectors());
                continue;
            }
            Subspace acc = trivial;
            std::vector<Vec> reps;
            for (const Vec& v : p.vectors()) {
                if (acc.contains(v)) continue;
                acc = acc.sum(Subspace::span(h.space(), {v}));
                reps.push_back(trivial.reduce(v));
            }
            out.push_back(std::move(reps));
        }
    return out;
}

// Group table over the listed grouplikes, or nullopt if the list is not closed.
std::optional<std::vector<std::size_t>> group_table(const Algebra& a, const std::vector<Vec>& g) {
    const std::size_t n = g.size();
    std::vector<std::size_t> t(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec p = a.multiply(g[i], g[j]);
            std::size_t k = 0;
            while (k < n && g[k] != p) ++k;
            if (k == n) return std::nullopt;
            t[i * n + j] = k;
        }
    return t;
}

}  // namespace

std::optional<HopfIsomorphism> find_isomorphism(const HopfAlgebra& source, const HopfAlgebra& target) {
    const std::size_t d = source.dim();
    if (target.dim() != d) return std::nullopt;
    GrouplikeSearch g1 = grouplikes(source), g2 = grouplikes(target);
    const std::size_t n = g1.grouplikes.size();
    if (g2.grouplikes.size() != n || n == 0) return std::nullopt;
    auto t1 = group_table(source.algebra, g1.grouplikes), t2 = group_table(target.algebra, g2.grouplikes);
    if (!t1 || !t2) return std::nullopt;
    auto sk1 = nontrivial_skew(source, g1.grouplikes, *t1), sk2 = nontrivial_skew(target, g2.grouplikes, *t2);

    // Words in the generators spanning the subalgebra they generate.
    struct Spanning {
        std::vector<Vec> vecs;
        std::vector<std::vector<std::size_t>> words;
    };
    auto generate = [&](const std::vector<Vec>& gens) {
        Spanning sp{{source.unit()}, {{}}};
        Subspace acc = Subspace::span(source.space(), sp.vecs);
        for (std::size_t w = 0; w < sp.vecs.size() && acc.dim() < d; ++w)
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                Vec v = source.algebra.multiply(sp.vecs[w], gens[gi]);
                if (acc.contains(v)) continue;
                acc = acc.sum(Subspace::span(source.space(), {v}));
                sp.vecs.push_back(v);
                auto word = sp.words[w];
                word.push_back(gi);
                sp.words.push_back(std::move(word));
            }
        return sp;
    };
    // Grouplikes, then only those skew-primitives that enlarge the generated subalgebra,
    // so each independent direction carries a single generator.
    std::vector<Vec> gens = g1.grouplikes;
    std::vector<std::array<std::size_t, 3>> origin;  // (a, b, k) for skew generators; a = n for grouplikes
    for (std::size_t i = 0; i < n; ++i) origin.push_back({n, i, 0});
    std::size_t reached = generate(gens).vecs.size();
    for (std::size_t p = 0; p < n * n && reached < d; ++p)
        for (std::size_t k = 0; k < sk1[p].size(); ++k) {
            gens.push_back(sk1[p][k]);
            std::size_t now = generate(gens).vecs.size();
            if (now == reached) {
                gens.pop_back();
                continue;
            }
            reached = now;
            origin.push_back({p / n, p % n, k});
        }
    if (reached < d) return std::nullopt;
    Spanning span = generate(gens);
    const auto& words = span.words;
    const Matrix w1_inv = inverse(Matrix::from_columns(d, span.vecs));

    std::vector<std::size_t> sigma(n, n);
    std::vector<bool> used(n, false);
    std::optional<HopfIsomorphism> found;
    auto try_sigma = [&]() -> bool {
        std::vector<Vec> images;
        for (const auto& o : origin) {
            if (o[0] == n) {
                images.push_back(g2.grouplikes[sigma[o[1]]]);
                continue;
            }
            const auto& tgt = sk2[sigma[o[0]] * n + sigma[o[1]]];
            if (tgt.size() != sk1[o[0] * n + o[1]].size()) return false;
            images.push_back(tgt[o[2]]);
        }
        std::vector<Vec> w2;
        for (const auto& word : words) {
            Vec v = target.unit();
            for (std::size_t gi : word) v = target.algebra.multiply(v, images[gi]);
            w2.push_back(std::move(v));
        }
        Matrix f = Matrix::from_columns(d, w2) * w1_inv;
        if (!check_hopf_morphism(source, target, f).passed()) return false;
        std::string desc;
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            if (!desc.empty()) desc += ", ";
            desc += render(gens[gi], source.space()) + " -> " + render(images[gi], target.space());
        }
        found = HopfIsomorphism{std::move(f), std::move(desc)};
        return true;
    };
    // Backtrack over group isomorphisms fixing the identity.
    std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
        if (i == n) return try_sigma();
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j] || (i == 0) != (j == 0)) continue;
            sigma[i] = j;
            bool ok = true;
            for (std::size_t a = 0; a <= i && ok; ++a)
                for (std::size_t b = 0; b <= i && ok; ++b) {
                    std::size_t p = (*t1)[a * n + b];
                    if (sigma[p] != n && sigma[p] != (*t2)[sigma[a] * n + sigma[b]]) ok = false;
                }
            if (!ok) continue;
            used[j] = true;
            if (assign(i + 1)) return true;
            used[j] = false;
        }
        sigma[i] = n;
        return false;
    };
    assign(0);
    return found;
}

}  // namespace ncg
