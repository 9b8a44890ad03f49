#include "ncgauge/foundation/rational.hpp"

#include <limits>
#include <ostream>

#include "ncgauge/foundation/errors.hpp"

namespace ncg {
namespace {

using u128 = unsigned __int128;

u128 uabs(__int128 x) { return x < 0 ? static_cast<u128>(-x) : static_cast<u128>(x); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();
constexpr __int128 kMin = std::numeric_limits<std::int64_t>::min();

bool fits(__int128 v) { return v <= kMax && v >= kMin; }

mpz_class to_mpz(__int128 v) {
    const bool neg = v < 0;
    u128 m = uabs(v);
    mpz_class z = static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64));
    z <<= 64;
    z += static_cast<unsigned long>(static_cast<std::uint64_t>(m));
    return neg ? mpz_class(-z) : z;
}

}  // namespace

Rational::Rational(std::int64_t n) : num_(n), den_(1) {}

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw DivisionByZero();
    *this = from_i128(n, d);
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
    if (this == &other) return *this;
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    return *this;
}

Rational Rational::parse(const std::string& text) {
    try {
        mpq_class q(text, 10);
        if (q.get_den() == 0) throw DivisionByZero();
        q.canonicalize();
        return from_mpq(q);
    } catch (const std::invalid_argument&) {
        throw ParseError("not a rational number: '" + text + "'");
    }
}

Rational Rational::from_mpq(mpq_class q) {
    Rational r;
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
        r.num_ = q.get_num().get_si();
        r.den_ = q.get_den().get_si();
    } else {
        r.big_ = std::make_unique<mpq_class>(std::move(q));
    }
    return r;
}

Rational Rational::from_i128(__int128 n, __int128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) return Rational();
    u128 g = gcd128(uabs(n), static_cast<u128>(d));
    n /= static_cast<__int128>(g);
    d /= static_cast<__int128>(g);
    if (fits(n) && fits(d)) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }
    mpq_class q(to_mpz(n), to_mpz(d));
    return from_mpq(std::move(q));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::num_str() const { return big_ ? big_->get_num().get_str() : std::to_string(num_); }
std::string Rational::den_str() const { return big_ ? big_->get_den().get_str() : std::to_string(den_); }

std::string Rational::str() const {
    if (is_integer()) return num_str();
    return num_str() + "/" + den_str();
}

Rational Rational::operator-() const {
    if (big_ || num_ == std::numeric_limits<std::int64_t>::min()) return from_mpq(-to_mpq());
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (big_) return from_mpq(1 / *big_);
    return from_i128(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return Rational::from_mpq(a.to_mpq() + b.to_mpq());
    if (b.num_ == 0) return a;
    if (a.num_ == 0) return b;
    if (a.den_ == 1 && b.den_ == 1) {
        __int128 s = static_cast<__int128>(a.num_) + b.num_;
        if (fits(s)) return Rational(static_cast<std::int64_t>(s));
    }
    __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Rational::from_i128(n, d);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return Rational::from_mpq(a.to_mpq() * b.to_mpq());
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && b.den_ == 1) {
        __int128 p = static_cast<__int128>(a.num_) * b.num_;
        if (fits(p)) return Rational(static_cast<std::int64_t>(p));
    }
    __int128 n = static_cast<__int128>(a.num_) * b.num_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Rational::from_i128(n, d);
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) {
        if (!a.big_ || !b.big_) return false;
        return *a.big_ == *b.big_;
    }
    return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return a.to_mpq() < b.to_mpq();
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ncg
