#include "ccx/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ccx {

namespace {
constexpr uint64_t BASE = 1ull << 32;
}

BigInt::BigInt(long long v) {
    unsigned long long m;
    if (v < 0) {
        neg_ = true;
        m = static_cast<unsigned long long>(-(v + 1)) + 1ull;
    } else {
        m = static_cast<unsigned long long>(v);
    }
    while (m) {
        limbs_.push_back(static_cast<uint32_t>(m & 0xffffffffu));
        m >>= 32;
    }
}

BigInt::BigInt(std::string_view s) {
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
        // *this = *this*10 + digit
        uint64_t carry = static_cast<uint64_t>(c - '0');
        for (auto& L : limbs_) {
            uint64_t cur = static_cast<uint64_t>(L) * 10 + carry;
            L = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        while (carry) {
            limbs_.push_back(static_cast<uint32_t>(carry));
            carry >>= 32;
        }
    }
    trim();
    neg_ = neg && !limbs_.empty();
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
    if (neg_ != o.neg_) return neg_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = cmp_mag(*this, o);
    if (neg_) c = -c;
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
}

void BigInt::add_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t cur = carry + a[i] + (i < b.size() ? b[i] : 0u);
        a[i] = static_cast<uint32_t>(cur);
        carry = cur >> 32;
    }
    if (carry) a.push_back(static_cast<uint32_t>(carry));
}

void BigInt::sub_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t cur = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
        if (cur < 0) {
            cur += static_cast<int64_t>(BASE);
            borrow = 1;
        } else {
            borrow = 0;
        }
        a[i] = static_cast<uint32_t>(cur);
    }
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (neg_ == o.neg_) {
        add_mag(limbs_, o.limbs_);
    } else if (cmp_mag(*this, o) >= 0) {
        sub_mag(limbs_, o.limbs_);
    } else {
        auto tmp = o.limbs_;
        sub_mag(tmp, limbs_);
        limbs_ = std::move(tmp);
        neg_ = o.neg_;
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) {
    neg_ = !neg_;
    *this += o;
    if (!limbs_.empty()) neg_ = !neg_;
    return *this;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.limbs_.empty()) r.neg_ = !r.neg_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.neg_ = false;
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        uint64_t ai = a[i];
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = static_cast<uint64_t>(r[i + j]) + ai * b[j] + carry;
            r[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = static_cast<uint64_t>(r[k]) + carry;
            r[k] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt& BigInt::operator*=(const BigInt& o) {
    bool neg = neg_ != o.neg_;
    limbs_ = mul_mag(limbs_, o.limbs_);
    neg_ = neg && !limbs_.empty();
    return *this;
}

// Knuth algorithm D on normalized limbs.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    q.clear();
    r.clear();
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    if (a.size() < b.size()) {
        r = a;
        return;
    }
    if (b.size() == 1) {
        uint64_t d = b[0], rem = 0;
        q.assign(a.size(), 0);
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(static_cast<uint32_t>(rem));
        return;
    }
    // normalize so the divisor's top limb has its high bit set
    int shift = 0;
    {
        uint32_t top = b.back();
        while (!(top & 0x80000000u)) {
            top <<= 1;
            ++shift;
        }
    }
    const size_t n = b.size(), m = a.size() - n;
    std::vector<uint32_t> u(a.size() + 1, 0), v(n, 0);
    for (size_t i = a.size(); i-- > 0;) {
        u[i] = a[i] << shift;
        if (shift && i > 0) u[i] |= static_cast<uint32_t>(a[i - 1] >> (32 - shift));
    }
    if (shift) u[a.size()] = static_cast<uint32_t>(a.back() >> (32 - shift));
    for (size_t i = n; i-- > 0;) {
        v[i] = b[i] << shift;
        if (shift && i > 0) v[i] |= static_cast<uint32_t>(b[i - 1] >> (32 - shift));
    }
    q.assign(m + 1, 0);
    const uint64_t vtop = v[n - 1], vsec = v[n - 2];
    for (size_t j = m + 1; j-- > 0;) {
        uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        uint64_t qh = num / vtop, rh = num % vtop;
        while (qh >= BASE || qh * vsec > ((rh << 32) | u[j + n - 2])) {
            --qh;
            rh += vtop;
            if (rh >= BASE) break;
        }
        // u[j..j+n] -= qh * v
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t p = qh * v[i] + carry;
            carry = p >> 32;
            int64_t cur = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffu) - borrow;
            if (cur < 0) {
                cur += static_cast<int64_t>(BASE);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<uint32_t>(cur);
        }
        int64_t cur = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
        if (cur < 0) {
            // qh was one too large; add v back
            cur += static_cast<int64_t>(BASE);
            --qh;
            uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<uint32_t>(s);
                c2 = s >> 32;
            }
            cur += static_cast<int64_t>(c2);
            cur &= 0xffffffff;
        }
        u[j + n] = static_cast<uint32_t>(cur);
        q[j] = static_cast<uint32_t>(qh);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    r.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
        r[i] = u[i] >> shift;
        if (shift && i + 1 < u.size()) r[i] |= static_cast<uint32_t>(static_cast<uint64_t>(u[i + 1]) << (32 - shift));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.limbs_, b.limbs_, qm, rm);
    q.limbs_ = std::move(qm);
    r.limbs_ = std::move(rm);
    q.neg_ = (a.neg_ != b.neg_) && !q.limbs_.empty();
    r.neg_ = a.neg_ && !r.limbs_.empty();
}

void BigInt::fdivmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    divmod(a, b, q, r);
    if (!r.is_zero() && (r.neg_ != b.neg_)) {
        q -= 1;
        r += b;
    }
}

BigInt& BigInt::operator/=(const BigInt& o) {
    BigInt q, r;
    divmod(*this, o, q, r);
    *this = std::move(q);
    return *this;
}

BigInt& BigInt::operator%=(const BigInt& o) {
    BigInt q, r;
    divmod(*this, o, q, r);
    *this = std::move(r);
    return *this;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.neg_ = false;
    b.neg_ = false;
    while (!b.is_zero()) {
        BigInt q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt BigInt::isqrt(const BigInt& a) {
    if (a.sign() < 0) throw std::domain_error("BigInt: isqrt of negative");
    if (a.is_zero()) return 0;
    // initial guess from bit length, then Newton iterations
    size_t bits = a.bit_length();
    BigInt x = BigInt(1);
    for (size_t i = 0; i < (bits + 1) / 2; ++i) x += x;  // 2^ceil(bits/2) >= sqrt(a)
    while (true) {
        BigInt y = (x + a / x) / 2;
        if (y >= x) break;
        x = std::move(y);
    }
    return x;
}

BigInt BigInt::pow(BigInt base, unsigned long long e) {
    BigInt r(1);
    while (e) {
        if (e & 1ull) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

bool BigInt::fits_ll() const {
    if (limbs_.size() > 2) return false;
    if (limbs_.size() < 2) return true;
    uint64_t m = (static_cast<uint64_t>(limbs_[1]) << 32) | limbs_[0];
    return neg_ ? m <= (1ull << 63) : m < (1ull << 63);
}

long long BigInt::to_ll() const {
    uint64_t m = 0;
    if (limbs_.size() >= 1) m |= limbs_[0];
    if (limbs_.size() >= 2) m |= static_cast<uint64_t>(limbs_[1]) << 32;
    return neg_ ? -static_cast<long long>(m) : static_cast<long long>(m);
}

double BigInt::to_double() const {
    double r = 0;
    for (size_t i = limbs_.size(); i-- > 0;) r = r * 4294967296.0 + limbs_[i];
    return neg_ ? -r : r;
}

std::string BigInt::to_string() const {
    if (limbs_.empty()) return "0";
    std::vector<uint32_t> tmp = limbs_;
    std::string digits;
    while (!tmp.empty()) {
        uint64_t rem = 0;
        for (size_t i = tmp.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | tmp[i];
            tmp[i] = static_cast<uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (neg_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    uint32_t top = limbs_.back();
    size_t b = (limbs_.size() - 1) * 32;
    while (top) {
        ++b;
        top >>= 1;
    }
    return b;
}

size_t BigInt::hash() const {
    size_t h = neg_ ? 0x9e3779b97f4a7c15ull : 0;
    for (uint32_t L : limbs_) h = h * 1000003u + L;
    return h;
}

std::string to_string(const BigInt& v) { return v.to_string(); }

} // namespace ccx
