#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include "logint/core.hpp"

namespace testing_support {

using logint::cx;

inline double rel_err(cx got, cx want)
{
    double d = std::abs(got - want);
    return std::abs(want) == 0.0 ? d : d / std::abs(want);
}

// Seeded draws for property tests. The mapping from engine output is spelled
// out so the same seed gives the same cases with every standard library.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : eng_(seed) {}

    double uniform(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    int integer(int lo, int hi) { return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    cx complex(double re_lo, double re_hi, double im_lo, double im_hi)
    {
        return {uniform(re_lo, re_hi), uniform(im_lo, im_hi)};
    }
    // |z| <= r with a uniformly drawn argument
    cx disk(double r)
    {
        double rho = r * std::sqrt(uniform(0.0, 1.0));
        double th = uniform(-logint::pi, logint::pi);
        return std::polar(rho, th);
    }
    bool coin() { return uniform(0.0, 1.0) < 0.5; }

private:
    std::mt19937_64 eng_;
};

}  // namespace testing_support
