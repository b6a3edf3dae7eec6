#include "esw/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace esw {

namespace {
constexpr uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // careful with LLONG_MIN
    unsigned long long u = v < 0 ? ~static_cast<unsigned long long>(v) + 1ull
                                 : static_cast<unsigned long long>(v);
    while (u != 0) {
        mag_.push_back(static_cast<uint32_t>(u & 0xffffffffull));
        u >>= 32;
    }
}

BigInt BigInt::from_string(std::string_view s) {
    size_t pos = 0;
    int sign = 1;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        if (s[pos] == '-') sign = -1;
        ++pos;
    }
    if (pos >= s.size()) throw std::invalid_argument("BigInt: empty numeral");
    BigInt out;
    BigInt ten(10);
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit in numeral");
        out *= ten;
        out += BigInt(c - '0');
    }
    if (sign < 0 && !out.is_zero()) out.sign_ = -1;
    return out;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const std::vector<uint32_t>& lo = a.size() >= b.size() ? b : a;
    const std::vector<uint32_t>& hi = a.size() >= b.size() ? a : b;
    std::vector<uint32_t> out(hi.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        out[i] = static_cast<uint32_t>(s & 0xffffffffull);
        carry = s >> 32;
    }
    out[hi.size()] = static_cast<uint32_t>(carry);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = static_cast<int64_t>(a[i]) - (i < b.size() ? b[i] : 0) - borrow;
        if (d < 0) {
            d += static_cast<int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<uint32_t>(d);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> out(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        uint64_t ai = a[i];
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = out[i + j] + ai * b[j] + carry;
            out[i + j] = static_cast<uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry != 0) {
            uint64_t cur = out[k] + carry;
            out[k] = static_cast<uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    q.assign(a.size(), 0);
    r.clear();
    if (compare_mag(a, b) < 0) {
        r = a;
        q.clear();
        return;
    }
    // Single-limb fast path.
    if (b.size() == 1) {
        uint64_t d = b[0];
        uint64_t rem = 0;
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem != 0) r.push_back(static_cast<uint32_t>(rem));
        return;
    }
    // Binary long division; operand sizes in this project stay small.
    size_t bits = a.size() * 32;
    std::vector<uint32_t> rem;
    for (size_t i = bits; i-- > 0;) {
        // rem = rem << 1 | bit_i(a)
        uint32_t carry = (a[i / 32] >> (i % 32)) & 1u;
        for (size_t j = 0; j < rem.size(); ++j) {
            uint32_t nc = rem[j] >> 31;
            rem[j] = (rem[j] << 1) | carry;
            carry = nc;
        }
        if (carry) rem.push_back(carry);
        if (compare_mag(rem, b) >= 0) {
            rem = sub_mag(rem, b);
            q[i / 32] |= (1u << (i % 32));
        }
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    r = rem;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    if (out.sign_ < 0) out.sign_ = 1;
    return out;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) {
        *this = o;
        return *this;
    }
    if (sign_ == o.sign_) {
        mag_ = add_mag(mag_, o.mag_);
    } else {
        int c = compare_mag(mag_, o.mag_);
        if (c == 0) {
            mag_.clear();
            sign_ = 0;
        } else if (c > 0) {
            mag_ = sub_mag(mag_, o.mag_);
        } else {
            mag_ = sub_mag(o.mag_, mag_);
            sign_ = o.sign_;
        }
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) {
    if (sign_ == 0 || o.sign_ == 0) {
        mag_.clear();
        sign_ = 0;
        return *this;
    }
    mag_ = mul_mag(mag_, o.mag_);
    sign_ = sign_ * o.sign_;
    trim();
    return *this;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q.mag_ = std::move(qm);
    r.mag_ = std::move(rm);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

int BigInt::compare(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
    if (sign_ == 0) return 0;
    int c = compare_mag(mag_, o.mag_);
    return sign_ > 0 ? c : -c;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt BigInt::isqrt(const BigInt& n) {
    if (n.sign_ < 0) throw std::domain_error("BigInt::isqrt of negative value");
    if (n.is_zero()) return BigInt();
    size_t bl = n.bit_length();
    // Initial guess >= sqrt(n): 2^ceil(bl/2)
    BigInt x(1);
    {
        size_t half = (bl + 1) / 2;
        BigInt two(2);
        for (size_t i = 0; i < half; ++i) x *= two;
    }
    BigInt two(2);
    while (true) {
        BigInt y = (x + n / x) / two;
        if (y >= x) break;
        x = std::move(y);
    }
    return x;
}

bool BigInt::is_perfect_square(BigInt& root) const {
    if (sign_ < 0) return false;
    BigInt r = isqrt(*this);
    if (r * r == *this) {
        root = std::move(r);
        return true;
    }
    return false;
}

size_t BigInt::bit_length() const {
    if (mag_.empty()) return 0;
    uint32_t top = mag_.back();
    size_t bits = (mag_.size() - 1) * 32;
    while (top != 0) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<uint32_t> rest = mag_;
    std::string digits;
    const std::vector<uint32_t> billion = {1000000000u};
    while (!rest.empty()) {
        std::vector<uint32_t> q, r;
        divmod_mag(rest, billion, q, r);
        uint32_t chunk = r.empty() ? 0 : r[0];
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
        rest = std::move(q);
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
}

double BigInt::to_double_scaled(long& exp2) const {
    exp2 = 0;
    if (is_zero()) return 0.0;
    size_t bl = bit_length();
    // collect the top 62 bits
    uint64_t m = 0;
    int need = 62;
    long shift = static_cast<long>(bl) - need;
    if (shift < 0) shift = 0;
    for (long bit = static_cast<long>(bl) - 1; bit >= shift; --bit) {
        m <<= 1;
        m |= (mag_[bit / 32] >> (bit % 32)) & 1u;
    }
    exp2 = shift;
    double d = static_cast<double>(m);
    return sign_ < 0 ? -d : d;
}

double BigInt::to_double() const {
    long e;
    double m = to_double_scaled(e);
    return std::ldexp(m, static_cast<int>(e));
}

bool BigInt::fits_longlong() const { return bit_length() <= 62; }

long long BigInt::to_longlong() const {
    if (!fits_longlong()) throw std::overflow_error("BigInt: value does not fit in long long");
    long long v = 0;
    for (size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
    return sign_ < 0 ? -v : v;
}

}  // namespace esw
