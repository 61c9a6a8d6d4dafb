#pragma once

// Arbitrary-precision signed integers, sign-magnitude over 32-bit limbs.
// Small and self-contained; sized for numbers up to a few thousand bits
// (deep continued-fraction convergents, iterated matrix powers).

#include <cstdint>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace ccx {

class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    BigInt(long v) : BigInt(static_cast<long long>(v)) {}
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}
    BigInt(unsigned v) : BigInt(static_cast<long long>(v)) {}
    BigInt(size_t v) : BigInt(static_cast<long long>(v)) {}
    explicit BigInt(std::string_view decimal);

    bool is_zero() const { return limbs_.empty(); }
    bool is_one() const { return !neg_ && limbs_.size() == 1 && limbs_[0] == 1; }
    bool is_neg() const { return neg_; }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }
    int sign() const { return limbs_.empty() ? 0 : (neg_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);
    BigInt& operator/=(const BigInt& o);  // truncated toward zero
    BigInt& operator%=(const BigInt& o);  // sign follows dividend

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
    friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }

    // quotient/remainder in one pass (trunc toward zero, rem sign = dividend)
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    // floor division: q = floor(a/b), 0 <= r < |b|·sign(b)... r has sign of b
    static void fdivmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    bool operator==(const BigInt& o) const { return neg_ == o.neg_ && limbs_ == o.limbs_; }
    std::strong_ordering operator<=>(const BigInt& o) const;

    static BigInt gcd(BigInt a, BigInt b);      // nonnegative
    static BigInt isqrt(const BigInt& a);       // floor sqrt, a >= 0
    static BigInt pow(BigInt base, unsigned long long e);

    bool fits_ll() const;
    long long to_ll() const;  // valid only when fits_ll()
    double to_double() const; // approximate; for reporting only
    std::string to_string() const;

    size_t bit_length() const;
    size_t hash() const;

private:
    // little-endian limbs, no trailing zeros; empty == 0; neg_ false for 0
    std::vector<uint32_t> limbs_;
    bool neg_ = false;

    void trim();
    static int cmp_mag(const BigInt& a, const BigInt& b);
    static void add_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void sub_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b); // a >= b
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

inline BigInt gcd(const BigInt& a, const BigInt& b) { return BigInt::gcd(a, b); }
std::string to_string(const BigInt& v);

} // namespace ccx
