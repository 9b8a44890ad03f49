#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "ncgauge/foundation/rational.hpp"

namespace ncg {

/// Largest conductor n for which Q(zeta_n) is supported.
inline constexpr int kMaxConductor = 240;

int euler_phi(int n);
/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(int n);

/// Element of the cyclotomic field Q(zeta_n), stored in the power basis
/// 1, zeta, ..., zeta^(phi(n)-1) modulo the n-th cyclotomic polynomial.
///
/// Zero is the empty coefficient list at conductor 1. A value whose only
/// nonzero coefficient is the constant term is demoted to conductor 1, so
/// rationals always live at conductor 1. Operands of different conductor are
/// embedded into Q(zeta_lcm) first; equality compares after the same
/// embedding.
class Scalar {
public:
    using Coeffs = boost::container::small_vector<Rational, 2>;

    Scalar() = default;
    Scalar(std::int64_t n) : Scalar(Rational(n)) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational r);                                // NOLINT(google-explicit-constructor)
    /// Coefficients in the power basis of Q(zeta_conductor); any length, reduced on entry.
    Scalar(int conductor, const std::vector<Rational>& coeffs);

    /// zeta_n^k.
    static Scalar root_of_unity(int n, long k = 1);

    int conductor() const { return conductor_; }
    /// Coefficients in the power basis of the current conductor (empty for zero).
    const Coeffs& coeffs() const { return c_; }
    /// Coefficients after embedding into Q(zeta_n); `n` must be a multiple of conductor().
    std::vector<Rational> coeffs_in(int n) const;

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return conductor_ == 1 && c_.size() == 1 && c_[0].is_one(); }
    bool is_rational() const { return conductor_ == 1; }
    /// Only valid when is_rational() or is_zero().
    Rational as_rational() const;

    Scalar operator-() const;
    Scalar inverse() const;  // throws DivisionByZero

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b);
    Scalar& operator-=(const Scalar& b);
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    /// this += a * b, without materialising the temporary when possible.
    void add_product(const Scalar& a, const Scalar& b);

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Compact text such as "-1", "1/2", "2*z3 + 1".
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
    /// Reduce a raw polynomial modulo Phi_n and store it in canonical form.
    void assign_reduced(int n, std::vector<Rational> poly);
    void canonicalize();

    int conductor_ = 1;
    Coeffs c_;
};

Scalar pow(const Scalar& s, long e);

}  // namespace ncg
