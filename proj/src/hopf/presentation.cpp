#include "ncgauge/hopf/presentation.hpp"

#include "ncgauge/foundation/errors.hpp"

namespace ncg {

Algebra algebra_from(const StructuredSpace& space, const std::function<Vec(std::size_t, std::size_t)>& product,
                     std::size_t unit_index) {
    const std::size_t d = space.dim();
    Matrix m(d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m.set_column(i * d + j, product(i, j));
    return Algebra(space, std::move(m), basis_vec(d, unit_index));
}

HopfAlgebra hopf_from_generators(std::string name, const Algebra& algebra, const std::vector<Vec>& generators,
                                 const std::vector<std::vector<std::size_t>>& words,
                                 const std::vector<GeneratorImages>& images) {
    const std::size_t d = algebra.dim();
    if (words.size() != d) throw DimensionMismatch("hopf_from_generators: one word per basis element required");
    Algebra hh = Algebra::tensor(algebra, algebra);
    Matrix comult(d * d, d), antipode(d, d);
    Vec counit(d);
    for (std::size_t i = 0; i < d; ++i) {
        Vec e = algebra.unit(), delta = hh.unit(), s = algebra.unit();
        Scalar eps(1);
        for (std::size_t g : words[i]) {
            e = algebra.multiply(e, generators.at(g));
            delta = hh.multiply(delta, images.at(g).coproduct);
            eps *= images.at(g).counit;
            s = algebra.multiply(images.at(g).antipode, s);
        }
        if (e != basis_vec(d, i))
            throw InvariantFailure("word for basis element does not multiply out to it", algebra.space().label(i));
        comult.set_column(i, delta);
        counit[i] = eps;
        antipode.set_column(i, s);
    }
    Coalgebra c(algebra.space(), std::move(comult), std::move(counit));
    return HopfAlgebra(std::move(name), algebra, c, std::move(antipode));
}

std::string monomial_label(int a, int b) {
    auto part = [](const char* sym, int e) -> std::string {
        if (e == 0) return "";
        if (e == 1) return sym;
        return std::string(sym) + "^" + std::to_string(e);
    };
    std::string s = part("g", a) + part("x", b);
    return s.empty() ? "1" : s;
}

HopfAlgebra group_algebra(int n) {
    const auto d = static_cast<std::size_t>(n);
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a) labels.push_back(monomial_label(a, 0));
    StructuredSpace s(labels);
    Algebra alg = algebra_from(s, [&](std::size_t i, std::size_t j) { return basis_vec(d, (i + j) % d); }, 0);
    Matrix comult(d * d, d), antipode(d, d), r(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        comult(i * d + i, i) = 1;
        antipode((d - i) % d, i) = 1;
        for (std::size_t j = 0; j < d; ++j) r(i, j) = Scalar::root_of_unity(n, static_cast<long>(i * j));
    }
    Coalgebra c(s, std::move(comult), Vec(d, Scalar(1)));
    return HopfAlgebra("kZ" + std::to_string(n), alg, c, std::move(antipode), std::move(r));
}

HopfAlgebra function_algebra(int n) {
    HopfAlgebra dual = dualize(group_algebra(n));
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a) labels.push_back("d" + std::to_string(a));
    StructuredSpace s(labels);
    Algebra a(s, dual.algebra.mult(), dual.algebra.unit());
    Coalgebra c(s, dual.coalgebra.comult(), dual.coalgebra.counit());
    return HopfAlgebra("k(Z" + std::to_string(n) + ")", a, c, dual.antipode);
}

HopfAlgebra taft_presented(int n, long k) {
    const auto d = static_cast<std::size_t>(n * n);
    auto index = [n](int a, int b) { return static_cast<std::size_t>(b * n + a); };
    std::vector<std::string> labels(d);
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) labels[index(a, b)] = monomial_label(a, b);
    StructuredSpace s(labels);
    Algebra alg = algebra_from(
        s,
        [&](std::size_t i, std::size_t j) {
            const int a = static_cast<int>(i) % n, b = static_cast<int>(i) / n;
            const int c = static_cast<int>(j) % n, e = static_cast<int>(j) / n;
            Vec v(d);
            if (b + e < n) v[index((a + c) % n, b + e)] = Scalar::root_of_unity(n, k * static_cast<long>(b) * c);
            return v;
        },
        0);
    const Vec g = basis_vec(d, index(1, 0)), x = basis_vec(d, index(0, 1));
    const Vec one = basis_vec(d, 0);
    GeneratorImages gi{kron(g, g), Scalar(1), basis_vec(d, index(n - 1, 0))};
    GeneratorImages xi{kron(x, one) + kron(g, x), Scalar(0), Scalar(-1) * basis_vec(d, index(n - 1, 1))};
    std::vector<std::vector<std::size_t>> words(d);
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) {
            auto& w = words[index(a, b)];
            w.assign(static_cast<std::size_t>(a), 0);
            w.insert(w.end(), static_cast<std::size_t>(b), 1);
        }
    std::string name = n == 2 ? "sweedler" : "taft-presented:" + std::to_string(n);
    if (((k % n) + n) % n != 1) name = "taft-presented:" + std::to_string(n) + "^" + std::to_string(k);
    return hopf_from_generators(name, alg, {g, x}, words,
                                {gi, xi});
}

HopfAlgebra sweedler() { return taft_presented(2); }

}  // namespace ncg
