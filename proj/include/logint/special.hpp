#pragma once

#include <array>
#include <cmath>

#include "logint/core.hpp"

namespace logint {

inline constexpr double catalan_value = 0.91596559417721901505460351493238411;
inline constexpr double zeta3_value = 1.2020569031595942853997381615114500;

inline double catalan_constant() { return catalan_value; }
inline double zeta3() { return zeta3_value; }

namespace detail {

// B_{2k} for k = 0..20
inline constexpr std::array<double, 21> bernoulli_even = {
    1.0,
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
    2577687858367.0 / 6.0,
    -26315271553053477373.0 / 1919190.0,
    2929993913841559.0 / 6.0,
    -261082718496449122051.0 / 13530.0,
};

inline constexpr std::array<double, 9> lanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

inline bool nonpositive_integer(cx z) { return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real()); }

// log(sin(pi z)) modulo 2 pi i, safe for large |Im z|
inline cx log_sin_pi(cx z)
{
    cx w = pi * z;
    if (std::abs(w.imag()) < 30.0)
        return clog(std::sin(w));
    if (w.imag() > 0.0)
        return -I * w + std::log(1.0 - std::exp(2.0 * I * w)) + clog(cx{0.0, 0.5});
    return I * w + std::log(1.0 - std::exp(-2.0 * I * w)) + clog(cx{0.0, -0.5});
}

inline cx lanczos_log_gamma(cx z)
{
    // valid for Re(z) >= 1/2
    z -= 1.0;
    cx x = lanczos[0];
    for (int i = 1; i < 9; ++i)
        x += lanczos[i] / (z + static_cast<double>(i));
    cx t = z + 7.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * clog(t) - t + clog(x);
}

}  // namespace detail

// log Gamma(z) modulo 2 pi i; exp() of it is Gamma(z).
inline cx log_gamma(cx z)
{
    if (detail::nonpositive_integer(z))
        throw PoleError("gamma: pole at " + to_string(z), z);
    if (z.real() < 0.5)
        return std::log(pi) - detail::log_sin_pi(z) - detail::lanczos_log_gamma(1.0 - z);
    return detail::lanczos_log_gamma(z);
}

inline cx gamma(cx z)
{
    if (detail::nonpositive_integer(z))
        throw PoleError("gamma: pole at " + to_string(z), z);
    if (z.real() < 0.5)
        return checked(pi / (std::sin(pi * z) * gamma(1.0 - z)), "gamma");
    z -= 1.0;
    cx x = detail::lanczos[0];
    for (int i = 1; i < 9; ++i)
        x += detail::lanczos[i] / (z + static_cast<double>(i));
    cx t = z + 7.5;
    return checked(std::sqrt(2.0 * pi) * cpow(t, z + 0.5) * std::exp(-t) * x, "gamma");
}

// n-th derivative of the digamma function, n >= 0.
inline cx polygamma(int n, cx z)
{
    if (n < 0)
        throw RangeError("polygamma: negative order");
    if (detail::nonpositive_integer(z))
        throw PoleError("polygamma: pole at " + to_string(z), z);
    double nfact = std::tgamma(n + 1.0);
    double sign = (n % 2 == 0) ? 1.0 : -1.0;  // (-1)^n
    CompensatedSum shift;
    while (z.real() < 16.0) {
        shift.add(-sign * nfact * cpow(z, -(n + 1)));
        z += 1.0;
    }
    cx r;
    cx zi = 1.0 / z;
    cx zi2 = zi * zi;
    if (n == 0) {
        r = clog(z) - 0.5 * zi;
        cx p = zi2;
        for (int k = 1; k <= 10; ++k) {
            r -= detail::bernoulli_even[k] / (2.0 * k) * p;
            p *= zi2;
        }
    } else {
        r = std::tgamma(double(n)) * cpow(zi, n) + 0.5 * nfact * cpow(zi, n + 1);
        cx p = cpow(zi, n + 2);
        for (int k = 1; k <= 10; ++k) {
            double c = std::exp(std::lgamma(2.0 * k + n) - std::lgamma(2.0 * k + 1.0));
            r += detail::bernoulli_even[k] * c * p;
            p *= zi2;
        }
        r *= -sign;  // (-1)^{n+1}
    }
    return checked(r + shift.value(), "polygamma");
}

inline cx digamma(cx z) { return polygamma(0, z); }

// Hurwitz zeta via Euler-Maclaurin; analytic in s except s = 1, any a that is
// not a nonpositive integer (powers on the principal branch).
inline cx hurwitz_zeta(cx s, cx a)
{
    if (s == cx{1.0, 0.0})
        throw PoleError("hurwitz_zeta: pole at s=1", s);
    if (detail::nonpositive_integer(a))
        throw PoleError("hurwitz_zeta: a is a nonpositive integer", a);
    const double radius = 12.0 + 0.5 * std::abs(s);
    CompensatedSum sum;
    cx q = a;
    while (q.real() < 1.0 || std::abs(q) < radius) {
        sum.add(cexp(-s * clog(q)));
        q += 1.0;
        if (q.real() > 1e6)
            throw UnsupportedRegime("hurwitz_zeta: shift too long");
    }
    cx lq = clog(q);
    cx qs = cexp(-s * lq);
    sum.add(q * qs / (s - 1.0));
    sum.add(0.5 * qs);
    // term_j = B_{2j}/(2j)! (s)_{2j-1} q^{-s-2j+1}
    cx poch = s;
    cx qp = qs / q;
    cx q2 = 1.0 / (q * q);
    double fact = 2.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int j = 1; j <= 20; ++j) {
        cx term = detail::bernoulli_even[j] / fact * poch * qp;
        double mag = std::abs(term);
        if (mag > prev)
            break;
        sum.add(term);
        if (mag <= 1e-18 * std::abs(sum.value()))
            break;
        prev = mag;
        poch *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
        qp *= q2;
        fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    return checked(sum.value(), "hurwitz_zeta");
}

inline cx riemann_zeta(cx s) { return hurwitz_zeta(s, 1.0); }

}  // namespace logint
