#pragma once

// Integer 2x2 matrices of determinant 1 acting on slopes by fractional
// linear maps. m and -m act identically; apply_sl2 works with either lift.

#include "ccx/bigint.hpp"
#include "ccx/slope.hpp"

#include <string>

namespace ccx {

struct SL2Matrix {
    BigInt a, b, c, d;

    SL2Matrix() : a(1), b(0), c(0), d(1) {}
    SL2Matrix(BigInt a_, BigInt b_, BigInt c_, BigInt d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
    SL2Matrix(long long a_, long long b_, long long c_, long long d_)
        : a(a_), b(b_), c(c_), d(d_) {}

    static SL2Matrix identity() { return SL2Matrix(); }
    static SL2Matrix parse(std::string_view text);  // "[[a,b],[c,d]]"

    BigInt det() const { return a * d - b * c; }
    BigInt trace() const { return a + d; }
    SL2Matrix inverse() const { return SL2Matrix(d, -b, -c, a); }  // det 1 only

    bool operator==(const SL2Matrix& o) const = default;
    bool is_identity() const { return a.is_one() && b.is_zero() && c.is_zero() && d.is_one(); }
    bool is_pm_identity() const;

    std::string to_string() const;
};

SL2Matrix operator*(const SL2Matrix& x, const SL2Matrix& y);

// p/q -> (a p + b q)/(c p + d q), reduced. Rejects det != 1.
Slope apply_sl2(const SL2Matrix& m, const Slope& v);

// Some determinant-1 matrix sending v to 1/0 (used to conjugate local
// questions at v to the integer fan at infinity).
SL2Matrix send_to_infinity(const Slope& v);

} // namespace ccx
