#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace ncg {

/// Exact rational number.
///
/// Values whose reduced numerator and denominator fit in int64 are stored
/// inline; anything larger is promoted to a GMP rational. The representation
/// is canonical (reduced, positive denominator, inline whenever it fits), so
/// equality is a field-wise comparison.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);
    explicit Rational(const mpq_class& q);

    Rational(const Rational& other);
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&&) noexcept = default;
    ~Rational() = default;

    /// Parses "n" or "n/d".
    static Rational parse(const std::string& text);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;

    mpq_class to_mpq() const;
    /// Numerator and denominator as decimal strings.
    std::string num_str() const;
    std::string den_str() const;
    std::string str() const;

    Rational operator-() const;
    Rational inverse() const;  // throws DivisionByZero

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    static Rational from_mpq(mpq_class q);
    static Rational from_i128(__int128 n, __int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

}  // namespace ncg
