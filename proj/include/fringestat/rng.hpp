#pragma once

#include <cstdint>
#include <initializer_list>

// Pinned PRNG stack. All simulation output is a pure function of the master
// seed, so the generators are implemented here rather than taken from
// <random>, whose engines and distributions are not bit-stable across
// standard libraries.

namespace fringestat::rng {

// Finalizer of the splitmix64 step: mixes a single 64-bit value.
std::uint64_t splitmix64_mix(std::uint64_t z);

// Stateful splitmix64 stream, used only for seeding.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();

private:
    std::uint64_t state_;
};

// Derives the seed of an independent stream from a master seed and a path of
// stream indices (e.g. {size_index, replica}). Distinct paths give distinct,
// well-mixed seeds; indices are offset by one so {0} and {0,0} differ.
std::uint64_t stream_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path);

// xoshiro256** 1.0. State is seeded from splitmix64 so that low-entropy
// seeds (0, 1, 2, ...) still start from well-mixed states.
class Xoshiro256ss {
public:
    explicit Xoshiro256ss(std::uint64_t seed);
    // Construct from raw state words, for the reference-vector tests.
    Xoshiro256ss(std::uint64_t s0, std::uint64_t s1, std::uint64_t s2, std::uint64_t s3);

    std::uint64_t next();

    // Uniform on {0, 1, ..., bound-1} via Lemire's multiply-shift rejection;
    // unbiased for every bound >= 1.
    std::uint64_t uniform_below(std::uint64_t bound);

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01();

private:
    std::uint64_t s_[4];
};

}  // namespace fringestat::rng
