#pragma once

#include <cstdint>

namespace hypercount {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen for its published closed-form
// recurrence: every implementation of these two lines agrees bit for bit,
// which is what corpus reproducibility across platforms requires.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by rejection; n > 0.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = ~0ULL - ~0ULL % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    // Uniform integer in [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Derives an independent stream for a sub-task.
    SplitMix64 fork() { return SplitMix64(next()); }

private:
    std::uint64_t state_;
};

} // namespace hypercount
