#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "ncgauge/foundation/errors.hpp"
#include "ncgauge/foundation/kernels.hpp"
#include "ncgauge/foundation/linalg.hpp"
#include "support/random.hpp"

using namespace ncg;
using testing_support::random_matrix;
using testing_support::random_scalar;

namespace {

// Independent numeric evaluation of a cyclotomic scalar at exp(2*pi*i/n).
std::complex<double> evaluate(const Scalar& s) {
    const double pi = std::acos(-1.0);
    std::complex<double> z = std::polar(1.0, 2 * pi / s.conductor());
    std::complex<double> acc = 0, p = 1;
    for (const auto& c : s.coeffs()) {
        acc += c.to_mpq().get_d() * p;
        p *= z;
    }
    return acc;
}

}  // namespace

TEST_CASE("rational canonical form and overflow promotion") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(1, -2).str() == "-1/2");
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    Rational big(std::int64_t{1} << 62);
    Rational sq = big * big * big;
    CHECK(sq / big / big == big);
    CHECK(Rational::parse("6/-4") == Rational(-3, 2));
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
}

TEST_CASE("scalar arithmetic examples") {
    Scalar i = Scalar::root_of_unity(4);
    CHECK(i * i == Scalar(-1));
    Scalar w = Scalar::root_of_unity(3);
    CHECK((Scalar(1) + w + w * w).is_zero());
    CHECK(Scalar(2).inverse() == Scalar(Rational(1, 2)));
    CHECK(pow(Scalar::root_of_unity(5), 5) == Scalar(1));
    CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
    CHECK_THROWS_AS(Scalar(3) / Scalar(0), DivisionByZero);
}

TEST_CASE("mixed conductors embed into the lcm") {
    Scalar i = Scalar::root_of_unity(4);
    Scalar w = Scalar::root_of_unity(3);
    Scalar z12 = Scalar::root_of_unity(12);
    CHECK(i * w == pow(z12, 7));
    CHECK(Scalar::root_of_unity(6, 2) == w);
    CHECK((i * w).conductor() == 12);
    CHECK(std::abs(evaluate(i + w) - (evaluate(i) + evaluate(w))) < 1e-12);
}

TEST_CASE("scalar field axioms on random inputs agree with numeric evaluation") {
    std::mt19937 rng(7);
    for (int conductor : {1, 3, 4, 5, 8, 12}) {
        for (int trial = 0; trial < 20; ++trial) {
            Scalar a = random_scalar(rng, conductor), b = random_scalar(rng, conductor),
                   c = random_scalar(rng, conductor);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK(a - a == Scalar(0));
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == Scalar(1));
                CHECK(std::abs(evaluate(a.inverse()) * evaluate(a) - 1.0) < 1e-9);
            }
            CHECK(std::abs(evaluate(a * b) - evaluate(a) * evaluate(b)) < 1e-9);
        }
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
    CHECK(cyclotomic_polynomial(105).size() == 49);
    CHECK(euler_phi(240) == 64);
}

TEST_CASE("scalar rendering") {
    CHECK(Scalar(Rational(-1, 2)).str() == "-1/2");
    Scalar w = Scalar::root_of_unity(3);
    CHECK((Scalar(1) + Scalar(2) * w).str() == "1 + 2*z3");
    CHECK((w * w).str() == "-1 - z3");
}

TEST_CASE("solve examples") {
    auto x = solve(Matrix::identity(2), Vec{Scalar(1), Scalar(0)});
    REQUIRE(x);
    CHECK(*x == Vec{Scalar(1), Scalar(0)});
    CHECK_FALSE(solve(Matrix(1, 1), Vec{Scalar(1)}));
    Matrix a(2, 2);
    a(0, 0) = 1;
    a(0, 1) = 1;
    a(1, 1) = 1;
    // back substitution: x1 = 1, x0 = 3 - x1
    Scalar x1 = Scalar(1), x0 = Scalar(3) - x1;
    auto y = solve(a, Vec{Scalar(3), Scalar(1)});
    REQUIRE(y);
    CHECK(*y == Vec{x0, x1});
}

TEST_CASE("kernel, image and quotient examples") {
    CHECK(kernel(Matrix::identity(3)).dim() == 0);
    CHECK(image(Matrix(2, 3)).dim() == 0);
    StructuredSpace k2({"a", "b"});
    Subspace w = Subspace::span(k2, {Vec{Scalar(1), Scalar(1)}});
    QuotientSpace q = quotient(k2, w);
    CHECK(q.space.dim() == 1);
    // (a,b) -> a - b up to sign convention: the quotient map kills (1,1) and not (1,0).
    CHECK(is_zero(q.projection(Vec{Scalar(1), Scalar(1)})));
    Vec pa = q.projection(Vec{Scalar(1), Scalar(0)});
    Vec pb = q.projection(Vec{Scalar(0), Scalar(1)});
    CHECK(pa[0] == -pb[0]);
    CHECK(q.projection.compose(q.section).matrix == Matrix::identity(1));
    CHECK(kernel(q.projection) == q.relations);
}

TEST_CASE("rank-nullity and quotient laws on random matrices") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<int> dim(1, 7);
        const std::size_t r = dim(rng), c = dim(rng);
        Matrix m = random_matrix(rng, r, c, trial % 2 ? 4 : 1, 0.5);
        CHECK(kernel(m).dim() + image(m).dim() == c);
        Subspace ker = kernel(m);
        for (const auto& v : ker.vectors()) CHECK(is_zero(m * v));
        StructuredSpace amb = StructuredSpace::numbered(c);
        QuotientSpace q = quotient(amb, Subspace::span(amb, ker.vectors()));
        CHECK(q.projection.compose(q.section).matrix == Matrix::identity(q.space.dim()));
        CHECK(kernel(q.projection).dim() == ker.dim());
        CHECK(Subspace::span(amb, kernel(q.projection).vectors()) == Subspace::span(amb, ker.vectors()));
        if (r == c && rank(m) == r) CHECK(m * inverse(m) == Matrix::identity(r));
    }
}

TEST_CASE("tensor maps") {
    StructuredSpace s2 = StructuredSpace::numbered(2), s3 = StructuredSpace::numbered(3);
    CHECK(tensor_map(LinMap::identity(s2), LinMap::identity(s3)).matrix == Matrix::identity(6));
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix f = random_matrix(rng, 2, 2), g = random_matrix(rng, 2, 2);
        Matrix f2 = random_matrix(rng, 2, 2), g2 = random_matrix(rng, 2, 2);
        CHECK(kron(f, g) * kron(f2, g2) == kron(f * f2, g * g2));
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                CHECK(kron(f, g).column(i * 2 + j) == kron(f.column(i), g.column(j)));
    }
}

TEST_CASE("subspace intersection and sum") {
    StructuredSpace s = StructuredSpace::numbered(3);
    Subspace u = Subspace::span(s, {basis_vec(3, 0), basis_vec(3, 1)});
    Subspace w = Subspace::span(s, {basis_vec(3, 1), basis_vec(3, 2)});
    CHECK(u.intersect(w) == Subspace::span(s, {basis_vec(3, 1)}));
    CHECK(u.sum(w).dim() == 3);
}

TEST_CASE("parallel kernels match serial reference") {
    std::mt19937 rng(5);
    kernels::set_thread_count(4);
    for (int trial = 0; trial < 5; ++trial) {
        Matrix a = random_matrix(rng, 40, 30, 3, 0.3);
        Matrix b = random_matrix(rng, 30, 50, 3, 0.3);
        CHECK(kernels::matmul(a, b) == kernels::serial::matmul(a, b));
        CHECK(kernels::matvec(a, Vec(a.cols(), Scalar(1))) == kernels::serial::matvec(a, Vec(a.cols(), Scalar(1))));
        CHECK(kernels::kron(a.columns(0, 5), b.columns(0, 3)) == kernels::serial::kron(a.columns(0, 5), b.columns(0, 3)));
        auto e1 = kernels::rref(a), e2 = kernels::serial::rref(a);
        CHECK(e1.r == e2.r);
        CHECK(e1.pivots == e2.pivots);
    }
    kernels::set_thread_count(1);
}
