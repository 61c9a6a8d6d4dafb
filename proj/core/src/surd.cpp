#include "ccx/surd.hpp"

#include "ccx/errors.hpp"

#include <cmath>
#include <map>

namespace ccx {

int sign_of_surd_sum(const BigInt& a, const BigInt& b, const BigInt& d) {
    if (b.is_zero()) return a.sign();
    if (a.is_zero()) return b.sign();
    if (a.sign() == b.sign()) return a.sign();
    // opposite signs: compare a^2 against b^2 d
    BigInt lhs = a * a, rhs = b * b * d;
    if (lhs == rhs) return 0;  // only possible when d is a perfect square
    bool amag = lhs > rhs;
    return amag ? a.sign() : b.sign();
}

QuadSurd::QuadSurd(BigInt p, BigInt d, BigInt q)
    : p_(std::move(p)), d_(std::move(d)), q_(std::move(q)) {
    normalize();
}

void QuadSurd::normalize() {
    if (q_.is_zero()) throw PreconditionError("QuadSurd: zero denominator");
    if (d_.sign() <= 0) throw PreconditionError("QuadSurd: discriminant must be positive");
    BigInt r = BigInt::isqrt(d_);
    if (r * r == d_) throw PreconditionError("QuadSurd: discriminant is a perfect square");
}

QuadSurd QuadSurd::from_coeffs(const BigInt& u, const BigInt& v, const BigInt& d,
                               const BigInt& w) {
    if (v.is_zero()) throw PreconditionError("QuadSurd: zero sqrt coefficient is rational");
    // (u + v sqrt(d))/w = (u + sgn(v) sqrt(v^2 d))/w; fold sgn(v) into p, q
    BigInt d2 = v * v * d;
    if (v.sign() > 0) return QuadSurd(u, d2, w);
    return QuadSurd(-u, d2, -w);
}

QuadSurd QuadSurd::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
    // (u+v*sqrt(d))/w
    auto bad = [&] { return PreconditionError("QuadSurd: expected (u+v*sqrt(d))/w"); };
    if (s.empty() || s.front() != '(') throw bad();
    auto close = s.find(")/");
    if (close == std::string::npos) throw bad();
    std::string inner = s.substr(1, close - 1);
    BigInt w(std::string_view(s).substr(close + 2));
    auto sq = inner.find("*sqrt(");
    if (sq == std::string::npos || inner.back() != ')') throw bad();
    // split "u+v" at the sign introducing v (search backwards from sq)
    size_t split = std::string::npos;
    for (size_t i = sq; i-- > 1;) {
        if ((inner[i] == '+' || inner[i] == '-') && inner[i - 1] != '+' && inner[i - 1] != '-') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) throw bad();
    BigInt u(std::string_view(inner).substr(0, split));
    BigInt v(std::string_view(inner).substr(split, sq - split));
    BigInt d(std::string_view(inner).substr(sq + 6, inner.size() - 1 - (sq + 6)));
    return from_coeffs(u, v, d, w);
}

int QuadSurd::sign() const { return sign_of_surd_sum(p_, BigInt(1), d_) * q_.sign(); }

int QuadSurd::cmp(const Rational& r) const {
    // (p + sqrt(d))/q - n/m: sign of (p m - n q) + m sqrt(d), times sign(q m)
    BigInt a = p_ * r.den() - r.num() * q_;
    BigInt b = r.den();
    return sign_of_surd_sum(a, b, d_) * q_.sign();
}

int QuadSurd::cmp(const QuadSurd& o) const {
    // sign of (p1 + sqrt(d1))/q1 - (p2 + sqrt(d2))/q2
    // = sign(A + B sqrt(d1) + C sqrt(d2)) * sign(q1 q2),
    //   A = p1 q2 - p2 q1, B = q2, C = -q1
    BigInt A = p_ * o.q_ - o.p_ * q_;
    BigInt B = o.q_, C = -q_;
    int outer = (q_ * o.q_).sign();
    // L = A + B sqrt(d1), R = -C sqrt(d2)
    int sl = sign_of_surd_sum(A, B, d_);
    int sr = (-C).sign();
    int inner;
    if (sl != sr) {
        inner = sl > sr ? 1 : -1;
    } else if (sl == 0) {
        inner = 0;
    } else {
        // same nonzero sign: compare squares, L^2 - R^2 = (A^2 + B^2 d1 - C^2 d2) + 2AB sqrt(d1)
        int sq = sign_of_surd_sum(A * A + B * B * d_ - C * C * o.d_, BigInt(2) * A * B, d_);
        inner = sl > 0 ? sq : -sq;
    }
    return inner * outer;
}

BigInt QuadSurd::floor() const {
    BigInt r = BigInt::isqrt(d_);
    BigInt approx_num = p_ + r;
    BigInt k, rem;
    BigInt::fdivmod(approx_num, q_, k, rem);
    // value is irrational, so floor is k-1, k, or k+1; test exactly
    for (BigInt cand = k - 1;; cand += 1) {
        // cand <= value < cand+1  <=>  sign(value - cand) > 0 or == is impossible
        Rational lo(cand), hi(cand + 1);
        if (cmp(lo) >= 0 && cmp(hi) < 0) return cand;
        if (cand > k + 1) throw InvariantError("QuadSurd::floor: no candidate matched");
    }
}

QuadSurd QuadSurd::conjugate() const { return QuadSurd(-p_, d_, -q_); }

QuadSurd QuadSurd::apply(const SL2Matrix& m) const {
    // Fractional linear map with any nonzero determinant:
    // m . (p+sqrt(d))/q = ((aP+bQ)(cP+dQ) - ac d + det(m) Q sqrt(d)) / ((cP+dQ)^2 - c^2 d)
    BigInt det = m.det();
    if (det.is_zero()) throw PreconditionError("QuadSurd::apply: singular matrix");
    BigInt n1 = m.a * p_ + m.b * q_;
    BigInt n2 = m.c * p_ + m.d * q_;
    BigInt u = n1 * n2 - m.a * m.c * d_;
    BigInt w = n2 * n2 - m.c * m.c * d_;
    return from_coeffs(u, det * q_, d_, w);
}

QuadSurd::CF QuadSurd::continued_fraction() const {
    // normalize to q | (d - p^2) so the classical recursion stays integral
    BigInt P = p_, D = d_, Q = q_;
    if (!((D - P * P) % Q).is_zero()) {
        P = P * Q.abs();
        D = D * Q * Q;
        Q = Q * Q.abs();
    }
    CF out;
    std::map<std::pair<std::string, std::string>, size_t> seen;
    std::vector<BigInt> terms;
    while (true) {
        auto key = std::make_pair(P.to_string(), Q.to_string());
        auto it = seen.find(key);
        if (it != seen.end()) {
            size_t start = it->second;
            out.head = terms.at(0);
            out.pre.assign(terms.begin() + 1, terms.begin() + static_cast<long>(std::max<size_t>(start, 1)));
            out.period.assign(terms.begin() + static_cast<long>(std::max<size_t>(start, 1)), terms.end());
            if (start == 0) {
                // the whole expansion including a0 repeats; period starts at term 1
                // only possible when a0 equals the last repeating term
                out.period.assign(terms.begin() + 1, terms.end());
                out.period.push_back(terms.at(0));
            }
            if (out.period.empty()) throw InvariantError("QuadSurd: empty period");
            return out;
        }
        seen.emplace(key, terms.size());
        BigInt a = QuadSurd(P, D, Q).floor();
        terms.push_back(a);
        BigInt P2 = a * Q - P;
        BigInt Q2 = (D - P2 * P2) / Q;
        if (Q2.is_zero()) throw InvariantError("QuadSurd: rational tail");
        P = std::move(P2);
        Q = std::move(Q2);
    }
}

std::string QuadSurd::to_string() const {
    return "(" + p_.to_string() + "+1*sqrt(" + d_.to_string() + "))/" + q_.to_string();
}

double QuadSurd::to_double() const {
    return (p_.to_double() + std::sqrt(d_.to_double())) / q_.to_double();
}

} // namespace ccx
