#pragma once

#include <random>
#include <vector>

#include "ncgauge/foundation/matrix.hpp"

// Seeded generation of small exact elements, shared by the CLI suites and the tests.
namespace ncg::sampling {

/// Element of Q(ζ_conductor) with coefficients a/b, |a| ≤ 4, 1 ≤ b ≤ 3.
inline Scalar random_scalar(std::mt19937& rng, int conductor = 1, bool allow_zero = true) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    for (;;) {
        const int phi = euler_phi(conductor);
        std::vector<Rational> c;
        for (int i = 0; i < phi; ++i) c.emplace_back(num(rng), den(rng));
        Scalar s(conductor, c);
        if (allow_zero || !s.is_zero()) return s;
    }
}

inline Vec random_vec(std::mt19937& rng, std::size_t n, int conductor = 1) {
    Vec v(n);
    for (auto& x : v) x = random_scalar(rng, conductor);
    return v;
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int conductor = 1, double density = 1.0) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (coin(rng) < density) m(i, j) = random_scalar(rng, conductor);
    return m;
}

/// Random linear combination of the given vectors (all of length n).
inline Vec random_combination(std::mt19937& rng, const std::vector<Vec>& vs, std::size_t n, int conductor = 1) {
    Vec out(n);
    for (const Vec& v : vs) axpy(out, random_scalar(rng, conductor), v);
    return out;
}

}  // namespace ncg::sampling
