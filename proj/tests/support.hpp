#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

namespace testing {

// Seeded generator for property tests; every failure is reproducible.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    template <class T, std::size_t N>
    const T& pick(const T (&items)[N])
    {
        return items[integer(0, static_cast<int>(N) - 1)];
    }

private:
    std::mt19937_64 rng_;
};

inline double rel_diff(double a, double b)
{
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

} // namespace testing
