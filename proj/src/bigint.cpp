#include "plancherel/bigint.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace plancherel {

namespace {
constexpr std::uint64_t kBase = std::uint64_t{1} << 32;
}

BigInt::BigInt(std::uint64_t value) {
    if (value != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(value & 0xffffffffu));
        if (value >> 32) limbs_.push_back(static_cast<std::uint32_t>(value >> 32));
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

int BigInt::compare(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t sum = carry + limbs_[i];
        if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(sum & 0xffffffffu);
        carry = sum >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
    if (compare(*this, rhs) < 0)
        throw std::invalid_argument("BigInt subtraction would be negative");
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(limbs_[i]) - borrow -
                            (i < rhs.limbs_.size() ? static_cast<std::int64_t>(rhs.limbs_[i]) : 0);
        if (diff < 0) {
            diff += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        limbs_[i] = static_cast<std::uint32_t>(diff);
    }
    trim();
    return *this;
}

BigInt BigInt::operator*(const BigInt& rhs) const {
    if (is_zero() || rhs.is_zero()) return BigInt{};
    BigInt out;
    out.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t a = limbs_[i];
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            std::uint64_t cur = out.limbs_[i + j] + a * rhs.limbs_[j] + carry;
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + rhs.limbs_.size();
        while (carry) {
            std::uint64_t cur = out.limbs_[k] + carry;
            out.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    out.trim();
    return out;
}

BigInt& BigInt::mul_small(std::uint32_t factor) {
    if (factor == 0 || is_zero()) {
        limbs_.clear();
        return *this;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        std::uint64_t cur = static_cast<std::uint64_t>(limb) * factor + carry;
        limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
        carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

std::uint32_t BigInt::divmod_small(std::uint32_t den) {
    if (den == 0) throw std::invalid_argument("BigInt division by zero");
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / den);
        rem = cur % den;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

// Schoolbook long division (Knuth D with a 64-bit trial quotient).
BigInt::DivMod BigInt::divmod(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw std::invalid_argument("BigInt division by zero");
    if (compare(num, den) < 0) return {BigInt{}, num};
    if (den.limbs_.size() == 1) {
        BigInt q = num;
        std::uint32_t r = q.divmod_small(den.limbs_[0]);
        return {std::move(q), BigInt{r}};
    }

    // Normalize so the top limb of the divisor has its high bit set.
    int shift = 0;
    for (std::uint32_t top = den.limbs_.back(); !(top & 0x80000000u); top <<= 1) ++shift;
    auto shl = [&](const BigInt& x) {
        BigInt r;
        if (shift == 0) { r = x; return r; }
        r.limbs_.assign(x.limbs_.size() + 1, 0);
        std::uint32_t carry = 0;
        for (std::size_t i = 0; i < x.limbs_.size(); ++i) {
            r.limbs_[i] = (x.limbs_[i] << shift) | carry;
            carry = static_cast<std::uint32_t>(x.limbs_[i] >> (32 - shift));
        }
        r.limbs_[x.limbs_.size()] = carry;
        r.trim();
        return r;
    };

    BigInt u = shl(num), v = shl(den);
    const std::size_t n = v.limbs_.size();
    const std::size_t m = u.limbs_.size() - n;
    u.limbs_.push_back(0);

    BigInt q;
    q.limbs_.assign(m + 1, 0);
    const std::uint64_t vtop = v.limbs_[n - 1];
    const std::uint64_t vsec = v.limbs_[n - 2];

    for (std::size_t j = m + 1; j-- > 0;) {
        std::uint64_t u2 = (static_cast<std::uint64_t>(u.limbs_[j + n]) << 32) | u.limbs_[j + n - 1];
        std::uint64_t qhat = u2 / vtop;
        std::uint64_t rhat = u2 % vtop;
        if (qhat >= kBase) { qhat = kBase - 1; rhat = u2 - qhat * vtop; }
        while (rhat < kBase && qhat * vsec > ((rhat << 32) | u.limbs_[j + n - 2])) {
            --qhat;
            rhat += vtop;
        }
        // Multiply-subtract qhat*v from u starting at limb j.
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t prod = qhat * v.limbs_[i] + carry;
            carry = prod >> 32;
            std::int64_t diff = static_cast<std::int64_t>(u.limbs_[i + j]) -
                                static_cast<std::int64_t>(prod & 0xffffffffu) - borrow;
            if (diff < 0) { diff += static_cast<std::int64_t>(kBase); borrow = 1; }
            else borrow = 0;
            u.limbs_[i + j] = static_cast<std::uint32_t>(diff);
        }
        std::int64_t diff = static_cast<std::int64_t>(u.limbs_[j + n]) -
                            static_cast<std::int64_t>(carry) - borrow;
        if (diff < 0) {
            // qhat was one too large; add v back.
            diff += static_cast<std::int64_t>(kBase);
            --qhat;
            std::uint64_t c2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t sum = static_cast<std::uint64_t>(u.limbs_[i + j]) + v.limbs_[i] + c2;
                u.limbs_[i + j] = static_cast<std::uint32_t>(sum & 0xffffffffu);
                c2 = sum >> 32;
            }
            diff += static_cast<std::int64_t>(c2);
        }
        u.limbs_[j + n] = static_cast<std::uint32_t>(diff);
        q.limbs_[j] = static_cast<std::uint32_t>(qhat);
    }
    q.trim();

    u.limbs_.resize(n);
    u.trim();
    if (shift) {
        std::uint32_t carry = 0;
        for (std::size_t i = u.limbs_.size(); i-- > 0;) {
            std::uint32_t cur = u.limbs_[i];
            u.limbs_[i] = (cur >> shift) | carry;
            carry = static_cast<std::uint32_t>(cur << (32 - shift));
        }
        u.trim();
    }
    return {std::move(q), std::move(u)};
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    while (!b.is_zero()) {
        BigInt r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt BigInt::factorial(unsigned n) {
    BigInt out{1};
    for (unsigned k = 2; k <= n; ++k) out.mul_small(k);
    return out;
}

BigInt BigInt::pow(const BigInt& base, unsigned exp) {
    BigInt out{1}, b = base;
    while (exp) {
        if (exp & 1u) out *= b;
        exp >>= 1u;
        if (exp) b *= b;
    }
    return out;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    BigInt tmp = *this;
    std::string out;
    while (!tmp.is_zero()) {
        std::uint32_t chunk = tmp.divmod_small(1000000000u);
        std::string part = std::to_string(chunk);
        if (!tmp.is_zero()) part.insert(0, 9 - part.size(), '0');
        out.insert(0, part);
    }
    return out;
}

double BigInt::to_double() const {
    double out = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;)
        out = out * 4294967296.0 + static_cast<double>(limbs_[i]);
    return out;
}

double BigInt::log() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    // Top ~96 bits give the mantissa; the rest is an exponent.
    double mant = 0.0;
    std::size_t top = limbs_.size();
    std::size_t take = top < 3 ? top : 3;
    for (std::size_t i = 0; i < take; ++i)
        mant = mant * 4294967296.0 + static_cast<double>(limbs_[top - 1 - i]);
    return std::log(mant) + std::log(2.0) * 32.0 * static_cast<double>(top - take);
}

std::uint64_t BigInt::to_u64() const {
    if (limbs_.size() > 2) throw std::overflow_error("BigInt does not fit in 64 bits");
    std::uint64_t out = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) out = (out << 32) | limbs_[i];
    return out;
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("Rational with zero denominator");
    if (num_.is_zero()) {
        den_ = BigInt{1};
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    num_ = BigInt::divmod(num_, g).quotient;
    den_ = BigInt::divmod(den_, g).quotient;
}

Rational Rational::operator+(const Rational& rhs) const {
    return Rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

Rational Rational::operator*(const Rational& rhs) const {
    return Rational(num_ * rhs.num_, den_ * rhs.den_);
}

double Rational::to_double() const {
    return std::exp(num_.log() - den_.log());
}

std::string Rational::to_string() const {
    return num_.to_string() + "/" + den_.to_string();
}

}  // namespace plancherel
