#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "esw/bigint.hpp"

namespace esw {

/// Exact rational number, always normalized: denominator > 0 and
/// gcd(|num|, den) == 1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d);
    Rational(BigInt n, BigInt d);

    /// Parses "p", "-p", or "p/q". Whitespace is not accepted.
    static Rational from_string(std::string_view s);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_ == BigInt(1) && num_ == BigInt(1); }
    bool is_integer() const { return den_ == BigInt(1); }
    int signum() const { return num_.signum(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    int compare(const Rational& o) const;
    friend bool operator==(const Rational& a, const Rational& b) { return a.compare(b) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.compare(b) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.compare(b) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.compare(b) > 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.compare(b) <= 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.compare(b) >= 0; }

    Rational abs() const;
    Rational pow(long long e) const;  // negative exponents invert; 0^negative throws
    std::optional<Rational> sqrt_exact() const;

    double to_double() const;
    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

private:
    BigInt num_;
    BigInt den_;
    void normalize();
};

}  // namespace esw
