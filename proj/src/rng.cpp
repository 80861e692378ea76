#include "plancherel/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace plancherel {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Gamma must be odd; sparse or dense bit patterns get remixed (same fix-up as
// SplittableRandom).
std::uint64_t mix_gamma(std::uint64_t z) {
    z = mix64(z) | 1ull;
    if (__builtin_popcountll(z ^ (z >> 1)) < 24) z ^= 0xaaaaaaaaaaaaaaaaull;
    return z;
}

}  // namespace

SplitRng::SplitRng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed),
      stream_(stream),
      state_(mix64(seed ^ mix64(stream))),
      gamma_(mix_gamma(seed + 0x6a09e667f3bcc909ull * (stream + 1))) {}

std::uint64_t SplitRng::next_u64() {
    state_ += gamma_;
    return mix64(state_);
}

double SplitRng::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SplitRng::exponential() {
    // -log(1 - U) with U in [0,1); 1-U never 0.
    return -std::log1p(-next_unit());
}

std::int64_t SplitRng::poisson(double mean) {
    if (!(mean >= 0.0)) throw std::invalid_argument("poisson mean must be nonnegative");
    if (mean == 0.0) return 0;
    // Knuth multiplication for small means; larger means split exactly as a
    // sum of independent Poisson halves.
    if (mean <= 30.0) {
        const double limit = std::exp(-mean);
        std::int64_t k = 0;
        double prod = next_unit();
        while (prod > limit) {
            ++k;
            prod *= next_unit();
        }
        return k;
    }
    const double half = mean / 2.0;
    return poisson(half) + poisson(mean - half);
}

std::int64_t SplitRng::uniform_int(std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("uniform_int needs n > 0");
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
    std::uint64_t draw;
    do {
        draw = next_u64();
    } while (draw >= limit);
    return static_cast<std::int64_t>(draw % un);
}

}  // namespace plancherel
