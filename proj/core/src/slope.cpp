#include "ccx/slope.hpp"

#include "ccx/errors.hpp"

namespace ccx {

Slope::Slope(BigInt p, BigInt q) : num_(std::move(p)), den_(std::move(q)) {
    if (num_.is_zero() && den_.is_zero())
        throw PreconditionError("Slope: (0,0) is not a slope");
    if (den_.is_zero()) {
        num_ = 1;
        return;
    }
    if (den_.is_neg()) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ /= g;
        den_ /= g;
    }
}

Slope::Slope(std::string_view text) : num_(0), den_(1) {
    auto slash = text.find('/');
    BigInt p, q;
    if (slash == std::string_view::npos) {
        p = BigInt(text);
        q = 1;
    } else {
        p = BigInt(text.substr(0, slash));
        q = BigInt(text.substr(slash + 1));
    }
    *this = Slope(std::move(p), std::move(q));
}

std::strong_ordering Slope::operator<=>(const Slope& o) const {
    if (is_infinity() && o.is_infinity()) return std::strong_ordering::equal;
    if (is_infinity()) return std::strong_ordering::greater;
    if (o.is_infinity()) return std::strong_ordering::less;
    return num_ * o.den_ <=> o.num_ * den_;
}

std::string Slope::to_string() const { return num_.to_string() + "/" + den_.to_string(); }

BigInt intersection_number(const Slope& a, const Slope& b) { return a.cross(b).abs(); }

BigInt intersection_number_four_holed(const Slope& a, const Slope& b) {
    return BigInt(2) * intersection_number(a, b);
}

bool adjacent(const Slope& a, const Slope& b) { return intersection_number(a, b).is_one(); }

Slope mediant(const Slope& a, const Slope& b) {
    return Slope(a.num() + b.num(), a.den() + b.den());
}

FareyEdge::FareyEdge(Slope a, Slope b) : a_(std::move(a)), b_(std::move(b)) {
    if (!adjacent(a_, b_))
        throw PreconditionError("FareyEdge: endpoints " + a_.to_string() + "," +
                                b_.to_string() + " are not adjacent");
    if (b_ < a_) std::swap(a_, b_);
}

const Slope& FareyEdge::other(const Slope& v) const {
    if (v == a_) return b_;
    if (v == b_) return a_;
    throw PreconditionError("FareyEdge: " + v.to_string() + " is not an endpoint");
}

std::strong_ordering FareyEdge::operator<=>(const FareyEdge& o) const {
    if (auto c = a_ <=> o.a_; c != 0) return c;
    return b_ <=> o.b_;
}

std::string FareyEdge::to_string() const {
    return "(" + a_.to_string() + "," + b_.to_string() + ")";
}

std::string to_string(const Slope& s) { return s.to_string(); }
std::string to_string(const FareyEdge& e) { return e.to_string(); }

} // namespace ccx
