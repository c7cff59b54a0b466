#pragma once

#include <cstdint>
#include <random>

namespace selberg {

/// mt19937_64 with a fixed double conversion, so sequences match across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    double uniform(double lo, double hi) { return lo + (hi - lo) * double(gen_() >> 11) * 0x1.0p-53; }
    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return lo + std::int64_t(gen_() % std::uint64_t(hi - lo + 1));
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace selberg
