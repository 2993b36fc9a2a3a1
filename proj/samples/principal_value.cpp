// Integrates exp(-x)/(1 - x) over (0, inf) as a principal value and on paths
// just above and below the pole at x = 1.

#include <cmath>
#include <cstdio>

#include "logint/quad.hpp"

int main()
{
    using namespace logint;
    auto f = [](double x) { return cx(std::exp(-x) / (1.0 - x)); };
    for (Side side : {Side::none, Side::above, Side::below}) {
        QuadratureSpec spec;
        spec.side = side;
        QuadratureOutcome q = integrate_pv(f, Pole{1.0, 1}, spec);
        std::printf("%-5s %s  (error %.1e, %ld evaluations)\n", to_string(side), to_string(q.value).c_str(),
                    q.error_estimate, q.evaluations);
    }
}
