#include "rng.hpp"

namespace y2d::num {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace

RngStream::RngStream(std::uint64_t base_seed, std::uint64_t stream_index) {
    std::uint64_t st = base_seed;
    std::uint64_t mix = splitmix64(st) ^ (stream_index * 0xd2b74407b1ce6e93ULL);
    std::uint64_t st2 = mix;
    for (auto& s : s_) s = splitmix64(st2);
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
}

std::uint64_t RngStream::next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double RngStream::uniform01() {
    return (next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double a, double b) {
    return a + (b - a) * uniform01();
}

int RngStream::sign() {
    return (next_u64() & 1) ? 1 : -1;
}

std::uint64_t RngStream::uniform_int(std::uint64_t n) {
    return n ? next_u64() % n : 0;
}

} // namespace y2d::num
