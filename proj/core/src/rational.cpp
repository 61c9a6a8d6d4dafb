#include "ccx/rational.hpp"

#include <stdexcept>

namespace ccx {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

Rational::Rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        num_ = BigInt(text);
        den_ = 1;
    } else {
        num_ = BigInt(text.substr(0, slash));
        den_ = BigInt(text.substr(slash + 1));
        reduce();
    }
}

void Rational::reduce() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (num_.is_zero()) {
        den_ = 1;
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

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::reciprocal() const {
    if (num_.is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    Rational r;
    r.num_ = num_.is_neg() ? -den_ : den_;
    r.den_ = num_.abs();
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_.is_zero()) throw std::domain_error("Rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    return num_ * o.den_ <=> o.num_ * den_;
}

BigInt Rational::floor() const {
    BigInt q, r;
    BigInt::fdivmod(num_, den_, q, r);
    return q;
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

std::string to_string(const Rational& r) { return r.to_string(); }

} // namespace ccx
