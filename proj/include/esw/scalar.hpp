#pragma once

#include <stdexcept>
#include <string>

#include "esw/rational.hpp"

namespace esw {

/// Number carrier for everything the library computes: either an exact
/// Rational or a Float64. Arithmetic among exact values stays exact; as soon
/// as one operand is approximate the result is approximate.
class Scalar {
public:
    Scalar() : exact_(true), rat_(0), flt_(0.0) {}
    Scalar(long long v) : exact_(true), rat_(v), flt_(0.0) {}
    Scalar(Rational r) : exact_(true), rat_(std::move(r)), flt_(0.0) {}
    static Scalar approx(double v) {
        Scalar s;
        s.exact_ = false;
        s.flt_ = v;
        return s;
    }
    static Scalar ratio(long long n, long long d) { return Scalar(Rational(n, d)); }

    bool is_exact() const { return exact_; }
    bool is_zero() const { return exact_ ? rat_.is_zero() : flt_ == 0.0; }
    const Rational& rational() const {
        if (!exact_) throw std::logic_error("Scalar: approximate value has no rational form");
        return rat_;
    }
    double to_double() const { return exact_ ? rat_.to_double() : flt_; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// Exact-exact comparisons are rational; anything else compares doubles.
    int compare(const Scalar& o) const;
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.compare(b) == 0; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.compare(b) != 0; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.compare(b) < 0; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return a.compare(b) > 0; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return a.compare(b) <= 0; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return a.compare(b) >= 0; }

    int signum() const { return exact_ ? rat_.signum() : (flt_ > 0) - (flt_ < 0); }
    Scalar abs() const { return signum() < 0 ? -*this : *this; }

    /// Stays exact when the operand is a perfect square of a rational.
    Scalar sqrt() const;
    Scalar pow_int(long long e) const;

    /// "p/q" for exact values, shortest round-trip decimal otherwise.
    std::string to_string() const;

private:
    bool exact_;
    Rational rat_;
    double flt_;
};

}  // namespace esw
