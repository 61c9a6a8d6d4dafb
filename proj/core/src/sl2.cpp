#include "ccx/sl2.hpp"

#include "ccx/errors.hpp"

namespace ccx {

namespace {

// g = a x + b y with g = gcd(|a|,|b|)
void ext_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& x, BigInt& y) {
    BigInt r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (!r1.is_zero()) {
        BigInt q, r;
        BigInt::divmod(r0, r1, q, r);
        r0 = std::move(r1);
        r1 = std::move(r);
        BigInt xt = x0 - q * x1;
        x0 = std::move(x1);
        x1 = std::move(xt);
        BigInt yt = y0 - q * y1;
        y0 = std::move(y1);
        y1 = std::move(yt);
    }
    if (r0.is_neg()) {
        r0 = -r0;
        x0 = -x0;
        y0 = -y0;
    }
    g = std::move(r0);
    x = std::move(x0);
    y = std::move(y0);
}

}  // namespace

SL2Matrix SL2Matrix::parse(std::string_view text) {
    // "[[a,b],[c,d]]", whitespace tolerated
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.size() < 9 || s.substr(0, 2) != "[[" || s.substr(s.size() - 2) != "]]")
        throw PreconditionError("SL2Matrix: expected [[a,b],[c,d]]");
    std::string inner = s.substr(2, s.size() - 4);
    auto mid = inner.find("],[");
    if (mid == std::string::npos) throw PreconditionError("SL2Matrix: expected [[a,b],[c,d]]");
    auto row = [](std::string_view r) {
        auto comma = r.find(',');
        if (comma == std::string_view::npos)
            throw PreconditionError("SL2Matrix: expected two entries per row");
        return std::pair<BigInt, BigInt>(BigInt(r.substr(0, comma)), BigInt(r.substr(comma + 1)));
    };
    auto [a, b] = row(std::string_view(inner).substr(0, mid));
    auto [c, d] = row(std::string_view(inner).substr(mid + 3));
    return SL2Matrix(std::move(a), std::move(b), std::move(c), std::move(d));
}

bool SL2Matrix::is_pm_identity() const {
    if (!b.is_zero() || !c.is_zero()) return false;
    return (a.is_one() && d.is_one()) || (a == BigInt(-1) && d == BigInt(-1));
}

std::string SL2Matrix::to_string() const {
    return "[[" + a.to_string() + "," + b.to_string() + "],[" + c.to_string() + "," +
           d.to_string() + "]]";
}

SL2Matrix operator*(const SL2Matrix& x, const SL2Matrix& y) {
    return SL2Matrix(x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                     x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d);
}

Slope apply_sl2(const SL2Matrix& m, const Slope& v) {
    if (!m.det().is_one()) throw PreconditionError("apply_sl2: determinant must be 1");
    return Slope(m.a * v.num() + m.b * v.den(), m.c * v.num() + m.d * v.den());
}

SL2Matrix send_to_infinity(const Slope& v) {
    // [[s,-r],[-q,p]] with p s - q r = 1 sends p/q to 1/0
    BigInt g, s, r;
    ext_gcd(v.num(), v.den(), g, s, r);
    r = -r;
    // primitivity of (p,q) gives g = 1
    return SL2Matrix(s, -r, -v.den(), v.num());
}

} // namespace ccx
