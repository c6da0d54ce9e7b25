#pragma once

#include <cstdint>

namespace qnr {

// Counter-based 64-bit generator. State is a (key, counter) pair and every
// output is a pure function of both, so any position in the stream can be
// addressed directly and child streams can be split off without touching the
// parent. The output function is the splitmix64 finalizer; stream 0 of seed
// s reproduces the reference splitmix64 sequence seeded with s. Frozen
// reference vectors live in tests/test_rng.cpp, making determinism a
// cross-platform contract rather than an implementation accident.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : key_(seed) {}

    // Value at an absolute counter position, without advancing.
    std::uint64_t at(std::uint64_t counter) const {
        return mix(key_ + (counter + 1) * kGamma);
    }

    std::uint64_t operator()() { return at(counter_++); }

    // Uniform in [0, 1), 53-bit resolution.
    double next_unit() {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

    // Uniform in (0, 1]; never zero, so log() of it is finite.
    double next_unit_pos() {
        return static_cast<double>(((*this)() >> 11) + 1) * 0x1.0p-53;
    }

    // Independent child stream. Uses a second odd constant so child keys do
    // not collide with the parent's own counter walk.
    CounterRng split(std::uint64_t child) const {
        return CounterRng(mix(key_ + (child + 1) * kSplitGamma));
    }

    std::uint64_t key() const { return key_; }
    std::uint64_t counter() const { return counter_; }

private:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
    static constexpr std::uint64_t kSplitGamma = 0xd1342543de82ef95ULL;

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

} // namespace qnr
