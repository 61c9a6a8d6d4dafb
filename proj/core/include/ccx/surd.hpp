#pragma once

// Exact quadratic irrationals (p + sqrt(d))/q with integer p, q != 0 and
// d > 0 not a perfect square. Negative sqrt coefficients are folded into
// the sign of p and q. Supports exact comparison against rationals and
// other surds, floor, Moebius maps, and the (eventually periodic)
// continued-fraction expansion.

#include "ccx/bigint.hpp"
#include "ccx/rational.hpp"
#include "ccx/sl2.hpp"

#include <string>
#include <vector>

namespace ccx {

// sign of a + b*sqrt(d), d > 0 nonsquare
int sign_of_surd_sum(const BigInt& a, const BigInt& b, const BigInt& d);

class QuadSurd {
public:
    // (p + sqrt(d))/q
    QuadSurd(BigInt p, BigInt d, BigInt q);
    // (u + v*sqrt(d))/w, v != 0
    static QuadSurd from_coeffs(const BigInt& u, const BigInt& v, const BigInt& d,
                                const BigInt& w);
    static QuadSurd parse(std::string_view text);  // "(u+v*sqrt(d))/w"

    const BigInt& p() const { return p_; }
    const BigInt& d() const { return d_; }
    const BigInt& q() const { return q_; }

    int sign() const;
    int cmp(const Rational& r) const;       // sign(*this - r)
    int cmp(const QuadSurd& o) const;       // sign(*this - o), any discriminants
    bool operator==(const QuadSurd& o) const { return cmp(o) == 0; }

    BigInt floor() const;
    QuadSurd conjugate() const;              // (p - sqrt(d))/q
    QuadSurd apply(const SL2Matrix& m) const;

    // continued fraction [a0; a1, a2, ...]: preperiod then repeating period
    struct CF {
        BigInt head;
        std::vector<BigInt> pre;     // terms after head, before the cycle
        std::vector<BigInt> period;  // nonempty
    };
    CF continued_fraction() const;

    std::string to_string() const;            // "(p+1*sqrt(d))/q"
    double to_double() const;

private:
    BigInt p_, d_, q_;
    void normalize();
};

} // namespace ccx
