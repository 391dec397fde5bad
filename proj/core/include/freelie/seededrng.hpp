#pragma once

#include <cstdint>

#include "freelie/rational.hpp"

namespace freelie {

/// Deterministic 64-bit LCG for reproducible "random" test elements; the
/// coefficient pool is the fixed small set used by every suite.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : state_(seed ? seed : 1) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
        return state_ >> 33;
    }

    std::uint32_t below(std::uint32_t n) { return static_cast<std::uint32_t>(next() % n); }

    Rational coefficient() {
        static const int vals[5] = {-2, -1, 1, 2, 3};
        return Rational(vals[below(5)]);
    }

private:
    std::uint64_t state_;
};

}  // namespace freelie
