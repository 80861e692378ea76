#pragma once

#include <cstdint>

namespace plancherel {

// Counter-based generator (SplitMix64 stream family). A (seed, stream) pair
// names the stream; draws are a pure function of (seed, stream, counter), so
// runs reproduce bit-exactly regardless of thread scheduling.
class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64();
    double next_unit();          // uniform on [0, 1)
    double exponential();        // mean 1, strictly positive
    std::int64_t poisson(double mean);
    std::int64_t uniform_int(std::int64_t n);  // uniform on [0, n)

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_; }

private:
    std::uint64_t seed_, stream_, state_, gamma_;
};

}  // namespace plancherel
