#include "fringestat/rng.hpp"

namespace fringestat::rng {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace

std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return splitmix64_mix(state_);
}

std::uint64_t stream_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
    // One full splitmix64 step per path element: the running value xored with
    // the offset index seeds a stream whose first output is the next value.
    std::uint64_t h = master;
    for (std::uint64_t idx : path) h = SplitMix64(h ^ (idx + 1)).next();
    return h;
}

Xoshiro256ss::Xoshiro256ss(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& w : s_) w = sm.next();
}

Xoshiro256ss::Xoshiro256ss(std::uint64_t s0, std::uint64_t s1, std::uint64_t s2, std::uint64_t s3)
    : s_{s0, s1, s2, s3} {}

std::uint64_t Xoshiro256ss::next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

std::uint64_t Xoshiro256ss::uniform_below(std::uint64_t bound) {
    // Multiply-shift maps a 64-bit draw onto [0, bound); the low half of the
    // 128-bit product detects draws that fall in the biased overhang, which
    // are rejected. Expected rejections < 1 for every bound.
    using u128 = unsigned __int128;
    std::uint64_t x = next();
    u128 m = static_cast<u128>(x) * static_cast<u128>(bound);
    std::uint64_t lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (lo < threshold) {
            x = next();
            m = static_cast<u128>(x) * static_cast<u128>(bound);
            lo = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

double Xoshiro256ss::uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

}  // namespace fringestat::rng
