#include "ncgauge/foundation/scalar.hpp"

#include <array>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ncgauge/foundation/errors.hpp"

namespace ncg {
namespace {

using Poly = std::vector<long>;

// Exact division by a monic integer polynomial.
Poly divide_monic(Poly num, const Poly& den) {
    const std::size_t dn = den.size() - 1;
    Poly q(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        long c = num[i];
        q[i - dn] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    return q;
}

const std::array<Poly, kMaxConductor + 1>& cyclotomic_table() {
    static const std::array<Poly, kMaxConductor + 1> table = [] {
        std::array<Poly, kMaxConductor + 1> t;
        for (int n = 1; n <= kMaxConductor; ++n) {
            Poly p(n + 1, 0);
            p[0] = -1;
            p[n] = 1;
            for (int d = 1; d < n; ++d)
                if (n % d == 0) p = divide_monic(p, t[d]);
            t[n] = p;
        }
        return t;
    }();
    return table;
}

void check_conductor(int n) {
    if (n < 1 || n > kMaxConductor)
        throw std::out_of_range("cyclotomic conductor out of range: " + std::to_string(n));
}

// Reduce poly modulo Phi_n in place; result has length phi(n).
std::vector<Rational> reduce(int n, std::vector<Rational> poly) {
    const Poly& phi = cyclotomic_polynomial(n);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = poly.size(); i-- > deg;) {
        if (poly[i].is_zero()) continue;
        Rational c = poly[i];
        for (std::size_t j = 0; j < deg; ++j)
            if (phi[j] != 0) poly[i - deg + j] -= c * Rational(phi[j]);
        poly[i] = Rational();
    }
    poly.resize(deg);
    return poly;
}

}  // namespace

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<long>& cyclotomic_polynomial(int n) {
    check_conductor(n);
    return cyclotomic_table()[n];
}

Scalar::Scalar(Rational r) {
    if (!r.is_zero()) c_.push_back(std::move(r));
}

Scalar::Scalar(int conductor, const std::vector<Rational>& coeffs) {
    check_conductor(conductor);
    assign_reduced(conductor, coeffs);
}

Scalar Scalar::root_of_unity(int n, long k) {
    check_conductor(n);
    k %= n;
    if (k < 0) k += n;
    std::vector<Rational> poly(static_cast<std::size_t>(k) + 1);
    poly[k] = Rational(1);
    Scalar s;
    s.assign_reduced(n, std::move(poly));
    return s;
}

void Scalar::assign_reduced(int n, std::vector<Rational> poly) {
    conductor_ = n;
    auto red = reduce(n, std::move(poly));
    c_.assign(std::make_move_iterator(red.begin()), std::make_move_iterator(red.end()));
    canonicalize();
}

void Scalar::canonicalize() {
    bool higher = false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) {
            higher = true;
            break;
        }
    if (higher) return;
    if (c_.empty() || c_[0].is_zero()) {
        c_.clear();
    } else {
        c_.resize(1);
    }
    conductor_ = 1;
}

std::vector<Rational> Scalar::coeffs_in(int n) const {
    if (n % conductor_ != 0) throw std::invalid_argument("conductor does not divide target");
    const std::size_t phin = static_cast<std::size_t>(euler_phi(n));
    if (c_.empty()) return std::vector<Rational>(phin);
    const std::size_t step = static_cast<std::size_t>(n / conductor_);
    std::vector<Rational> poly((c_.size() - 1) * step + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) poly[i * step] = c_[i];
    auto red = reduce(n, std::move(poly));
    red.resize(phin);
    return red;
}

Rational Scalar::as_rational() const {
    if (c_.empty()) return Rational();
    if (conductor_ != 1) throw std::logic_error("scalar is not rational: " + str());
    return c_[0];
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (conductor_ == 1) return Scalar(c_[0].inverse());
    // Solve (multiplication by *this) * b = 1 over Q.
    const std::size_t m = c_.size();
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Rational> shifted(j + m);
        for (std::size_t i = 0; i < m; ++i) shifted[i + j] = c_[i];
        auto col = reduce(conductor_, std::move(shifted));
        for (std::size_t i = 0; i < m; ++i) a[i][j] = col[i];
    }
    a[0][m] = Rational(1);
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        while (piv < m && a[piv][col].is_zero()) ++piv;
        if (piv == m) throw DivisionByZero();
        std::swap(a[piv], a[col]);
        Rational inv = a[col][col].inverse();
        for (auto& x : a[col]) x *= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Rational f = a[r][col];
            for (std::size_t k = col; k <= m; ++k) a[r][k] -= f * a[col][k];
        }
    }
    std::vector<Rational> b(m);
    for (std::size_t i = 0; i < m; ++i) b[i] = a[i][m];
    return Scalar(conductor_, b);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar r = a;
    r += b;
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar r = a;
    r -= b;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& b) {
    if (b.is_zero()) return *this;
    if (is_zero()) return *this = b;
    if (conductor_ == b.conductor_) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
        canonicalize();
        return *this;
    }
    const int n = std::lcm(conductor_, b.conductor_);
    check_conductor(n);
    auto x = coeffs_in(n);
    auto y = b.coeffs_in(n);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    conductor_ = n;
    c_.assign(x.begin(), x.end());
    canonicalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) { return *this += -b; }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    if (a.conductor_ == 1 && b.conductor_ == 1) return Scalar(a.c_[0] * b.c_[0]);
    if (a.conductor_ == 1 || b.conductor_ == 1) {
        const Scalar& r = a.conductor_ == 1 ? a : b;
        const Scalar& p = a.conductor_ == 1 ? b : a;
        Scalar out = p;
        for (auto& c : out.c_) c *= r.c_[0];
        return out;
    }
    const int n = a.conductor_ == b.conductor_ ? a.conductor_ : std::lcm(a.conductor_, b.conductor_);
    check_conductor(n);
    std::vector<Rational> x, y;
    if (n == a.conductor_) x.assign(a.c_.begin(), a.c_.end()); else x = a.coeffs_in(n);
    if (n == b.conductor_) y.assign(b.c_.begin(), b.c_.end()); else y = b.coeffs_in(n);
    std::vector<Rational> prod(x.size() + y.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (!y[j].is_zero()) prod[i + j] += x[i] * y[j];
    }
    Scalar out;
    out.assign_reduced(n, std::move(prod));
    return out;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

void Scalar::add_product(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return;
    if (conductor_ == 1 && a.conductor_ == 1 && b.conductor_ == 1) {
        if (c_.empty()) {
            c_.push_back(a.c_[0] * b.c_[0]);
        } else {
            c_[0] += a.c_[0] * b.c_[0];
            if (c_[0].is_zero()) c_.clear();
        }
        return;
    }
    *this += a * b;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.conductor_ == b.conductor_) return a.c_ == b.c_;
    if (a.is_zero() || b.is_zero()) return false;
    if (a.conductor_ == 1 || b.conductor_ == 1) return false;
    const int n = std::lcm(a.conductor_, b.conductor_);
    if (n > kMaxConductor) return false;
    return a.coeffs_in(n) == b.coeffs_in(n);
}

std::string Scalar::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (!mag.is_one()) os << mag << "*";
        os << "z" << conductor_;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar pow(const Scalar& s, long e) {
    if (e < 0) return pow(s.inverse(), -e);
    Scalar result(1);
    Scalar base = s;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

}  // namespace ncg
