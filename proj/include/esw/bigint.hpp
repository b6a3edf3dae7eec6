#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace esw {

/// Arbitrary-precision signed integer.
///
/// Magnitude is stored little-endian in 32-bit limbs. There is no size
/// limit, so products of structural constants and characteristic-polynomial
/// minors never wrap around.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    static BigInt from_string(std::string_view s);

    bool is_zero() const { return sign_ == 0; }
    int signum() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

    // Truncated division: quotient rounds toward zero, remainder has the
    // sign of the dividend.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    int compare(const BigInt& o) const;
    friend bool operator==(const BigInt& a, const BigInt& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return a.compare(b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return a.compare(b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return a.compare(b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return a.compare(b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return a.compare(b) >= 0; }

    static BigInt gcd(BigInt a, BigInt b);

    /// Floor of the square root; requires a nonnegative value.
    static BigInt isqrt(const BigInt& n);
    bool is_perfect_square(BigInt& root) const;

    size_t bit_length() const;
    std::string to_string() const;
    double to_double() const;
    /// Mantissa/exponent split: value == mantissa * 2^exp2 with
    /// mantissa in [2^52, 2^62) as a double (0 for zero).
    double to_double_scaled(long& exp2) const;

    bool fits_longlong() const;
    long long to_longlong() const;  // throws std::overflow_error if too wide

private:
    int sign_ = 0;                 // -1, 0, +1
    std::vector<uint32_t> mag_;    // little-endian, no leading zero limbs

    void trim();
    static int compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // Requires |a| >= |b|.
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

}  // namespace esw
