#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lowop {

// Signed arbitrary-precision integer. Magnitude is base-2^32 little-endian
// with no trailing zero limbs; zero has an empty magnitude and positive sign.
// Only the operations the exact polynomial kernel needs are provided.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);  // NOLINT: implicit by design, mirrors integer literals

    bool is_zero() const { return limbs_.empty(); }
    int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    // Truncated division: q rounds toward zero, r keeps the dividend's sign,
    // num == q*den + r with |r| < |den|. Throws std::domain_error on den == 0.
    static void divmod(const BigInt& num, const BigInt& den, BigInt& q, BigInt& r);

    // Quotient when the division is exact; throws internal_error otherwise.
    BigInt divide_exact(const BigInt& den) const;

    // Canonical representative of *this mod p, in [0..p). Requires p >= 1.
    long long mod_canonical(long long p) const;

    bool operator==(const BigInt& o) const;
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator<=(const BigInt& o) const { return !(o < *this); }
    bool operator>=(const BigInt& o) const { return !(*this < o); }

    std::string str() const;  // decimal

private:
    bool negative_ = false;
    std::vector<std::uint32_t> limbs_;

    void trim();
    static int cmp_mag(const BigInt& a, const BigInt& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
};

}  // namespace lowop
