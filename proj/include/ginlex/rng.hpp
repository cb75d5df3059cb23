// Deterministic integer sampling. mt19937_64 has a standard-specified output
// sequence, and the rejection mapping below avoids the implementation-defined
// std::uniform_int_distribution, so samples are reproducible across platforms.
#pragma once

#include <cstdint>
#include <random>

namespace ginlex {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform draw from [lo, hi], endpoints included.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = std::uint64_t(-1) - (std::uint64_t(-1) % range);
        std::uint64_t r;
        do {
            r = eng_();
        } while (r >= limit);
        return lo + static_cast<std::int64_t>(r % range);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace ginlex
