// Evaluates Phi(z, s, a) in each regime and prints the regime that was used.

#include <cstdio>

#include "logint/lerch.hpp"

int main()
{
    using namespace logint;
    const LerchArgs points[] = {
        {0.5, 2.0, 1.0},              // pi^2/6 - log^2 2
        {-1.0, 1.0, 0.5},             // pi/2
        {cx(0.3, 0.9), cx(1.5, 2.0), cx(0.7, -0.4)},
        {3.0, -2.0, 0.5},             // |z| > 1 is fine for s = 0, -1, -2, ...
        {1.0, 3.0, 1.0},              // zeta(3)
    };
    for (const auto& p : points) {
        LerchValue v = lerch_eval(p, false);
        std::printf("Phi(%s, %s, %s) = %s  [%s]\n", to_string(p.z).c_str(), to_string(p.s).c_str(),
                    to_string(p.a).c_str(), to_string(v.value).c_str(), to_string(classify(p)));
    }
    try {
        lerch_phi(2.0, 0.5, 1.0);
    } catch (const UnsupportedRegime& e) {
        std::printf("%s\n", e.what());
    }
}
