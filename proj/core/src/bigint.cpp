#include "lowop/bigint.hpp"

#include <algorithm>
#include <stdexcept>

#include "lowop/errors.hpp"

namespace lowop {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    negative_ = v < 0;
    unsigned long long m = negative_ ? (~static_cast<unsigned long long>(v) + 1ULL)
                                     : static_cast<unsigned long long>(v);
    while (m != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(m & 0xffffffffULL));
        m >>= 32;
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t t = a.limbs_.size(); t-- > 0;) {
        if (a.limbs_[t] != b.limbs_[t]) return a.limbs_[t] < b.limbs_[t] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (std::size_t t = 0; t < std::max(a.size(), b.size()); ++t) {
        std::uint64_t s = carry;
        if (t < a.size()) s += a[t];
        if (t < b.size()) s += b[t];
        out.push_back(static_cast<std::uint32_t>(s & 0xffffffffULL));
        carry = s >> 32;
    }
    if (carry) out.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t t = 0; t < a.size(); ++t) {
        std::int64_t s = static_cast<std::int64_t>(a[t]) - borrow -
                         (t < b.size() ? static_cast<std::int64_t>(b[t]) : 0);
        if (s < 0) {
            s += (1LL << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(s));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.limbs_.empty()) r.negative_ = !r.negative_;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (negative_ == o.negative_) {
        limbs_ = add_mag(limbs_, o.limbs_);
    } else {
        int c = cmp_mag(*this, o);
        if (c == 0) {
            limbs_.clear();
            negative_ = false;
        } else if (c > 0) {
            limbs_ = sub_mag(limbs_, o.limbs_);
        } else {
            limbs_ = sub_mag(o.limbs_, limbs_);
            negative_ = o.negative_;
        }
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt out;
    if (a.is_zero() || b.is_zero()) return out;
    out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t t = 0; t < a.limbs_.size(); ++t) {
        std::uint64_t carry = 0;
        for (std::size_t u = 0; u < b.limbs_.size(); ++u) {
            std::uint64_t cur = out.limbs_[t + u] + carry +
                                static_cast<std::uint64_t>(a.limbs_[t]) * b.limbs_[u];
            out.limbs_[t + u] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        std::size_t u = t + b.limbs_.size();
        while (carry) {
            std::uint64_t cur = out.limbs_[u] + carry;
            out.limbs_[u] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
            ++u;
        }
    }
    out.negative_ = a.negative_ != b.negative_;
    out.trim();
    return out;
}

void BigInt::divmod(const BigInt& num, const BigInt& den, BigInt& q, BigInt& r) {
    if (den.is_zero()) throw std::domain_error("BigInt: division by zero");
    q = BigInt();
    r = BigInt();
    if (num.is_zero()) return;
    // binary long division on magnitudes
    std::size_t bits = num.limbs_.size() * 32;
    q.limbs_.assign(num.limbs_.size(), 0);
    for (std::size_t b = bits; b-- > 0;) {
        // r = 2r + bit b of |num|
        std::uint64_t carry = (num.limbs_[b / 32] >> (b % 32)) & 1u;
        for (std::size_t t = 0; t < r.limbs_.size(); ++t) {
            std::uint64_t cur = (static_cast<std::uint64_t>(r.limbs_[t]) << 1) | carry;
            r.limbs_[t] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        if (carry) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
        if (cmp_mag(r, den) >= 0) {
            r.limbs_ = sub_mag(r.limbs_, den.limbs_);
            q.limbs_[b / 32] |= (1u << (b % 32));
        }
    }
    q.negative_ = num.negative_ != den.negative_;
    r.negative_ = num.negative_;
    q.trim();
    r.trim();
}

BigInt BigInt::divide_exact(const BigInt& den) const {
    BigInt q, r;
    divmod(*this, den, q, r);
    if (!r.is_zero())
        throw internal_error("BigInt: non-exact division (" + str() + " / " + den.str() + ")");
    return q;
}

long long BigInt::mod_canonical(long long p) const {
    if (p < 1) throw std::domain_error("BigInt::mod_canonical: modulus must be positive");
    unsigned long long rem = 0;
    for (std::size_t t = limbs_.size(); t-- > 0;) {
        rem = ((rem << 32) | limbs_[t]) % static_cast<unsigned long long>(p);
    }
    long long r = static_cast<long long>(rem);
    if (negative_ && r != 0) r = p - r;
    return r;
}

bool BigInt::operator==(const BigInt& o) const {
    return negative_ == o.negative_ && limbs_ == o.limbs_;
}

bool BigInt::operator<(const BigInt& o) const {
    if (negative_ != o.negative_) return negative_;
    int c = cmp_mag(*this, o);
    return negative_ ? c > 0 : c < 0;
}

std::string BigInt::str() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> mag = limbs_;
    std::string digits;
    while (!mag.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t t = mag.size(); t-- > 0;) {
            std::uint64_t cur = (rem << 32) | mag[t];
            mag[t] = static_cast<std::uint32_t>(cur / 1000000000ULL);
            rem = cur % 1000000000ULL;
        }
        while (!mag.empty() && mag.back() == 0) mag.pop_back();
        for (int d = 0; d < 9; ++d) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (negative_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace lowop
