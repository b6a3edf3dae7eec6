#include "esw/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace esw {

Rational::Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

void Rational::normalize() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (den_.signum() < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (g != BigInt(1)) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::from_string(std::string_view s) {
    size_t slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(BigInt::from_string(s), BigInt(1));
    }
    BigInt n = BigInt::from_string(s.substr(0, slash));
    BigInt d = BigInt::from_string(s.substr(slash + 1));
    return Rational(std::move(n), std::move(d));
}

Rational Rational::operator-() const {
    Rational out = *this;
    out.num_ = -out.num_;
    return out;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_.is_zero()) throw std::domain_error("Rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

int Rational::compare(const Rational& o) const {
    BigInt lhs = num_ * o.den_;
    BigInt rhs = o.num_ * den_;
    return lhs.compare(rhs);
}

Rational Rational::abs() const { return signum() < 0 ? -*this : *this; }

Rational Rational::pow(long long e) const {
    if (e == 0) return Rational(1);
    bool invert = e < 0;
    unsigned long long k = invert ? static_cast<unsigned long long>(-(e + 1)) + 1ull
                                  : static_cast<unsigned long long>(e);
    Rational base = *this;
    Rational out(1);
    while (k != 0) {
        if (k & 1ull) out *= base;
        base *= base;
        k >>= 1;
    }
    if (invert) return Rational(1) / out;
    return out;
}

std::optional<Rational> Rational::sqrt_exact() const {
    if (signum() < 0) return std::nullopt;
    BigInt rn, rd;
    if (!num_.is_perfect_square(rn)) return std::nullopt;
    if (!den_.is_perfect_square(rd)) return std::nullopt;
    return Rational(std::move(rn), std::move(rd));
}

double Rational::to_double() const {
    long en, ed;
    double mn = num_.to_double_scaled(en);
    double md = den_.to_double_scaled(ed);
    if (md == 0.0) throw std::domain_error("Rational: zero denominator");
    return std::ldexp(mn / md, static_cast<int>(en - ed));
}

std::string Rational::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

}  // namespace esw
