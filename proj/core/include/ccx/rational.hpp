#pragma once

// Exact rationals over BigInt. Always reduced, denominator positive,
// zero represented as 0/1. No floating point anywhere on computation paths.

#include "ccx/bigint.hpp"

#include <compare>
#include <string>

namespace ccx {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d);
    explicit Rational(std::string_view text);  // "p/q" or "p"

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational reciprocal() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const;

    BigInt floor() const;
    std::string to_string() const;   // "p/q", integers printed bare
    double to_double() const { return num_.to_double() / den_.to_double(); }

private:
    BigInt num_, den_;
    void reduce();
};

std::string to_string(const Rational& r);

} // namespace ccx
