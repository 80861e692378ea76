#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace plancherel {

// Point of the shifted lattice Z' = Z + 1/2, stored exactly as twice its value
// (an odd integer). Lattice coordinates stay exact through serialization.
class HalfInt {
public:
    HalfInt() : twice_(1) {}

    static HalfInt from_twice(std::int64_t twice);  // throws if even
    // k + 1/2 for integer k (k = -1 gives -1/2).
    static constexpr HalfInt plus_half(std::int64_t k) { return HalfInt(2 * k + 1, 0); }

    std::int64_t twice() const { return twice_; }
    double value() const { return static_cast<double>(twice_) / 2.0; }
    bool positive() const { return twice_ > 0; }

    // x - 1/2 and x + 1/2 as exact integers.
    std::int64_t minus_half() const { return (twice_ - 1) / 2; }
    std::int64_t plus_half_int() const { return (twice_ + 1) / 2; }

    HalfInt operator+(std::int64_t k) const { return HalfInt(twice_ + 2 * k, 0); }
    HalfInt operator-(std::int64_t k) const { return HalfInt(twice_ - 2 * k, 0); }
    std::int64_t operator-(HalfInt rhs) const { return (twice_ - rhs.twice_) / 2; }
    HalfInt operator-() const { return HalfInt(-twice_, 0); }
    auto operator<=>(const HalfInt&) const = default;

    std::string str() const;  // exact "3/2" / "-7/2" form
    static HalfInt parse(std::string_view text);

private:
    constexpr HalfInt(std::int64_t twice, int) : twice_(twice) {}
    std::int64_t twice_;
};

}  // namespace plancherel

template <>
struct std::hash<plancherel::HalfInt> {
    std::size_t operator()(const plancherel::HalfInt& h) const noexcept {
        return std::hash<std::int64_t>{}(h.twice());
    }
};
