#include "esw/scalar.hpp"

#include <cmath>
#include <cstdio>

namespace esw {

Scalar Scalar::operator-() const {
    Scalar out = *this;
    if (out.exact_)
        out.rat_ = -out.rat_;
    else
        out.flt_ = -out.flt_;
    return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (exact_ && o.exact_) {
        rat_ += o.rat_;
    } else {
        flt_ = to_double() + o.to_double();
        exact_ = false;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (exact_ && o.exact_) {
        rat_ -= o.rat_;
    } else {
        flt_ = to_double() - o.to_double();
        exact_ = false;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (exact_ && o.exact_) {
        rat_ *= o.rat_;
    } else {
        flt_ = to_double() * o.to_double();
        exact_ = false;
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (exact_ && o.exact_) {
        rat_ /= o.rat_;
    } else {
        double d = o.to_double();
        if (d == 0.0) throw std::domain_error("Scalar: division by zero");
        flt_ = to_double() / d;
        exact_ = false;
    }
    return *this;
}

int Scalar::compare(const Scalar& o) const {
    if (exact_ && o.exact_) return rat_.compare(o.rat_);
    double a = to_double(), b = o.to_double();
    if (a < b) return -1;
    if (a > b) return 1;
    return 0;
}

Scalar Scalar::sqrt() const {
    if (signum() < 0) throw std::domain_error("Scalar: sqrt of negative value");
    if (exact_) {
        if (auto r = rat_.sqrt_exact()) return Scalar(*r);
    }
    return Scalar::approx(std::sqrt(to_double()));
}

Scalar Scalar::pow_int(long long e) const {
    if (exact_) return Scalar(rat_.pow(e));
    return Scalar::approx(std::pow(flt_, static_cast<double>(e)));
}

std::string Scalar::to_string() const {
    if (exact_) return rat_.to_string();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", flt_);
    return buf;
}

}  // namespace esw
