#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace plancherel {

// Arbitrary-precision unsigned integer, base 2^32 little-endian limbs.
// Covers the exact-combinatorics range needed here (dimensions of diagrams
// with up to a few hundred boxes, factorials, cross-multiplied rationals).
class BigInt {
public:
    BigInt() = default;
    BigInt(std::uint64_t value);

    bool is_zero() const { return limbs_.empty(); }

    static int compare(const BigInt& a, const BigInt& b);
    friend bool operator==(const BigInt& a, const BigInt& b) { return compare(a, b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return compare(a, b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return compare(a, b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return compare(a, b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return compare(a, b) >= 0; }

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);  // requires *this >= rhs
    BigInt operator+(const BigInt& rhs) const { BigInt r = *this; r += rhs; return r; }
    BigInt operator-(const BigInt& rhs) const { BigInt r = *this; r -= rhs; return r; }
    BigInt operator*(const BigInt& rhs) const;
    BigInt& operator*=(const BigInt& rhs) { *this = *this * rhs; return *this; }
    BigInt& mul_small(std::uint32_t factor);

    struct DivMod;
    static DivMod divmod(const BigInt& num, const BigInt& den);  // den != 0
    BigInt operator/(const BigInt& rhs) const;
    BigInt operator%(const BigInt& rhs) const;

    // In-place divide by a single limb, returns remainder.
    std::uint32_t divmod_small(std::uint32_t den);

    static BigInt gcd(BigInt a, BigInt b);
    static BigInt factorial(unsigned n);
    static BigInt pow(const BigInt& base, unsigned exp);

    std::string to_string() const;
    double to_double() const;  // may overflow to inf for huge values
    double log() const;        // natural log; log(0) = -inf
    std::uint64_t to_u64() const;  // throws if it does not fit

private:
    std::vector<std::uint32_t> limbs_;  // no trailing zero limbs; empty == 0
    void trim();
    friend class Rational;
};

struct BigInt::DivMod {
    BigInt quotient;
    BigInt remainder;
};

inline BigInt BigInt::operator/(const BigInt& rhs) const { return divmod(*this, rhs).quotient; }
inline BigInt BigInt::operator%(const BigInt& rhs) const { return divmod(*this, rhs).remainder; }

// Nonnegative rational with reduced representation. Enough for the exact
// coherence/balance identities; subtraction is intentionally absent.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::uint64_t value) : num_(value), den_(1) {}
    Rational(BigInt num, BigInt den);  // den != 0; reduces

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    Rational operator+(const Rational& rhs) const;
    Rational operator*(const Rational& rhs) const;
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    bool is_one() const { return num_ == den_; }
    double to_double() const;
    std::string to_string() const;

private:
    BigInt num_, den_;
};

}  // namespace plancherel
