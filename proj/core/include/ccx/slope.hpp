#pragma once

// Slopes p/q on the circle (vertices of the Farey graph), including 1/0.
// Canonical form: gcd(|p|, q) = 1, q >= 0, and q = 0 only for p = 1.

#include "ccx/bigint.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace ccx {

class Slope {
public:
    Slope() : num_(0), den_(1) {}  // 0/1
    Slope(long long p, long long q) : Slope(BigInt(p), BigInt(q)) {}
    Slope(BigInt p, BigInt q);     // reduces; rejects (0,0)
    explicit Slope(std::string_view text);  // "p/q", "p", "1/0"

    static Slope infinity() { return Slope(1, 0); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_infinity() const { return den_.is_zero(); }

    // p·s − q·r for this = p/q, other = r/s. |cross| is the geometric
    // intersection number on the once-punctured torus model.
    BigInt cross(const Slope& o) const { return num_ * o.den_ - den_ * o.num_; }

    bool operator==(const Slope& o) const { return num_ == o.num_ && den_ == o.den_; }
    // Linear order on the circle with 1/0 as the maximum; finite slopes by value.
    std::strong_ordering operator<=>(const Slope& o) const;

    std::string to_string() const;  // always "p/q" (so "3/1", "1/0")
    double to_double() const { return num_.to_double() / den_.to_double(); }
    size_t hash() const { return num_.hash() * 16777619u ^ den_.hash(); }

private:
    BigInt num_, den_;
};

BigInt intersection_number(const Slope& a, const Slope& b);
// four-holed-sphere convention: twice the determinant, same graph
BigInt intersection_number_four_holed(const Slope& a, const Slope& b);
bool adjacent(const Slope& a, const Slope& b);
Slope mediant(const Slope& a, const Slope& b);

// An edge of the Farey graph: unordered pair of slopes with |cross| = 1.
class FareyEdge {
public:
    FareyEdge(Slope a, Slope b);  // validates adjacency, stores endpoints sorted

    const Slope& a() const { return a_; }
    const Slope& b() const { return b_; }
    bool has_endpoint(const Slope& v) const { return v == a_ || v == b_; }
    const Slope& other(const Slope& v) const;

    bool operator==(const FareyEdge& o) const { return a_ == o.a_ && b_ == o.b_; }
    std::strong_ordering operator<=>(const FareyEdge& o) const;

    std::string to_string() const;  // "(p/q,r/s)"

private:
    Slope a_, b_;  // a_ < b_
};

struct PivotRecord {
    Slope vertex;
    int weight = 0;  // number of incident separating edges, always >= 2
};

std::string to_string(const Slope& s);
std::string to_string(const FareyEdge& e);

} // namespace ccx
