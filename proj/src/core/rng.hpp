#pragma once

#include <cstdint>

namespace y2d::num {

// Seeded counter-style stream: identical (base_seed, stream_index) pairs
// reproduce identical draws bit for bit, independent of platform. The
// generator is xoshiro256++ seeded through splitmix64.
class RngStream {
public:
    RngStream(std::uint64_t base_seed, std::uint64_t stream_index);

    std::uint64_t next_u64();
    double uniform01(); // in [0, 1)
    double uniform(double a, double b);
    int sign(); // -1 or +1, equiprobable
    std::uint64_t uniform_int(std::uint64_t n); // in [0, n)

private:
    std::uint64_t s_[4];
};

} // namespace y2d::num
