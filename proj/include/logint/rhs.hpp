#pragma once

// Closed-form right-hand sides. Each function evaluates one finite-series (or
// elementary) expression literally, term by term, on principal branches.

#include <cmath>
#include <complex>

#include "logint/combinat.hpp"
#include "logint/core.hpp"
#include "logint/lerch.hpp"
#include "logint/special.hpp"

namespace logint {

// Sign convention of S_n^(j) in the double sums below; fixed by comparing the
// reciprocal-polynomial sum against quadrature (see calibrate_stirling_convention).
inline constexpr StirlingConvention calibrated_stirling_convention = StirlingConvention::signed_;

namespace rhs {

namespace detail {

inline cx P(cx z, cx w) { return cpow(z, w); }
inline cx P(cx z, int w) { return cpow(z, w); }
inline cx P(cx z, double w) { return cpow(z, cx{w, 0.0}); }
inline cx phi(cx z, cx s, cx a) { return lerch_phi(z, s, a); }
inline cx dphi(cx z, cx s, cx a) { return lerch_phi_ds(z, s, a); }
inline double S(int n, int j, StirlingConvention c = calibrated_stirling_convention) { return stirling1_d(n, j, c); }
inline double C(int n, int j) { return binom(static_cast<double>(n), j).real(); }
inline double fact(int n) { return factorial(n); }
inline cx csc(cx z) { return 1.0 / std::sin(z); }
inline cx cot(cx z) { return std::cos(z) / std::sin(z); }
inline cx ipi_pow(int e) { return cpow(-1.0, e); }  // (-1)^e for integer e
inline cx expi(cx z) { return cexp(I * z); }

// (pi - i v log(w)) / (2 pi), the Lerch a-argument shared by most sums
inline cx lerch_a(cx v, cx w) { return (pi - I * v * clog(w)) / (2.0 * pi); }

// sum_{p=1}^{l} (-1)^{l+p} shift^{p-1} p S_l^(p), with 0^0 = 1
inline cx stirling_tail(int l, cx shift)
{
    cx t{0.0, 0.0};
    for (int p = 1; p <= l; ++p)
        t += ipi_pow(l + p) * cpow(shift, p - 1) * static_cast<double>(p) * S(l, p);
    return t;
}

inline void require_count(int n, const char* what)
{
    if (n < 0 || n > stirling_n_max)
        throw RangeError(std::string(what) + ": integer order out of range");
}

}  // namespace detail

using namespace detail;

// x^{m-1} log^k(ax) / (b + c x^v)_{1+n}
inline cx pochhammer_log_power(cx a, cx b, cx c, cx v, cx m, cx k, int n)
{
    require_count(n, "pochhammer_log_power");
    CompensatedSum s;
    cx mv = m - 1.5 * v;
    cx z = -cexp(2.0 * I * pi * mv / v);
    for (int j = 0; j <= n; ++j) {
        cx u = lerch_a(v, a * P(c, -1.0 / v) * P(b + double(j), 1.0 / v));
        cx pref = ipi_pow(j) * P(c, -1.5 - mv / v) * cexp(I * pi * mv / v) * P(b + double(j), 0.5 + mv / v) *
                  P(2.0 * pi, 1.0 + k) * P(I / v, 2.0 + k) * v * C(n, j) / fact(n);
        s.add(pref * phi(z, -k, u));
    }
    return s.value();
}

// x^{m-1} log^k(ax) / (1 + b x^v)^{n+1}
inline cx polynomial_log_power(cx a, cx b, cx v, cx m, cx k, int n,
                               StirlingConvention conv = calibrated_stirling_convention)
{
    require_count(n, "polynomial_log_power");
    CompensatedSum s;
    cx u = lerch_a(v, a * P(b, -1.0 / v));
    cx z = cexp(2.0 * I * pi * (m - double(n) * v) / v);
    cx e = cexp(I * pi * (m - (0.5 + n) * v) / v);
    for (int j = 0; j <= n; ++j) {
        double sj = S(n, j, conv);
        if (sj == 0.0)
            continue;
        for (int l = 0; l <= j; ++l) {
            cx pre = pochhammer(1.0 + k - double(l), l) * ipi_pow(j) * P(b, -m / v) * e * P(2.0 * pi, 1.0 + k - double(l)) *
                     P(1.0 - m / v, j - l) * P(-1.0 / v, l) * P(I / v, k - double(l)) * C(j, l) / (v * fact(n));
            s.add(pre * phi(z, -k + double(l), u) * sj);
        }
    }
    return s.value();
}

// x^{m-1} log(log^2 a - log^2 x) / (b + c x^v)_{1+n}
inline cx log_difference_of_squares(cx a, cx b, cx c, cx v, cx m, int n)
{
    require_count(n, "log_difference_of_squares");
    CompensatedSum s;
    cx z = cexp(2.0 * I * m * pi / v);
    for (int j = 0; j <= n; ++j) {
        cx bj = b + double(j);
        cx pre = 2.0 * P(c, -m / v) * cexp(I * pi * (double(j) + m / v)) * P(bj, -1.0 + m / v) * pi * C(n, j) / (v * fact(n));
        cx u1 = lerch_a(v, P(c, -1.0 / v) * P(bj, 1.0 / v) / a);
        cx u2 = lerch_a(v, a * P(c, -1.0 / v) * P(bj, 1.0 / v));
        s.add(pre * ((-I + cot(m * pi / v)) * clog(2.0 * I * pi / v) + I * dphi(z, 0.0, u1) + I * dphi(z, 0.0, u2)));
        s.add(-I * P(c, -m / v) * cexp(I * double(j) * pi) * P(bj, -1.0 + m / v) * pi * pi * C(n, j) * csc(m * pi / v) /
              (v * fact(n)));
    }
    return s.value();
}

// log(log^2 a - log^2 x) / ((x^2 - 1)/2)_{1+n}, gamma-function form
inline cx log_difference_gamma(cx a, int n)
{
    require_count(n, "log_difference_gamma");
    CompensatedSum s1, s2;
    for (int j = 0; j <= n; ++j) {
        cx r = std::sqrt(cx(-1.0 + 2.0 * j, 0.0));
        cx g = 2.0 * I * pi * gamma(0.75 - I * clog(r / a) / (2.0 * pi)) * gamma(0.75 - I * clog(a * r) / (2.0 * pi)) /
               (gamma((pi - 2.0 * I * clog(r / a)) / (4.0 * pi)) * gamma((pi - 2.0 * I * clog(a * r)) / (4.0 * pi)));
        s1.add(ipi_pow(j) * C(n, j) / r * clog(g));
        s2.add(ipi_pow(j) * C(n, j) / r);
    }
    return 2.0 * pi / fact(n) * s1.value() - pi * pi * I / fact(n) * s2.value();
}

// log(pi^2 - log^2 x) / (1 - x^4)
inline cx log_pi_quartic()
{
    cx ci{0.0, 1.0};
    cx coth = 1.0 / std::tanh(pi / 2.0);
    return 0.5 * pi *
           clog(2.0 * P(pi, 1.0 + ci) * P(coth, ci) * gamma(0.75 - ci / 2.0) * gamma(0.75 + ci / 2.0) /
                (gamma(0.25 - ci / 2.0) * gamma(0.25 + ci / 2.0)));
}

// log(pi^2 - log^2 x) / (1 - x^2)
inline cx log_pi_quadratic() { return I * pi * std::log(pi / std::tanh(pi / 2.0)); }

// 1 / ((log^2 a - log^2 x) ((x^2 - 1)/2)_{1+n}), digamma form
inline cx reciprocal_difference_digamma(cx a, int n)
{
    require_count(n, "reciprocal_difference_digamma");
    CompensatedSum s;
    cx la = clog(a);
    for (int j = 0; j <= n; ++j) {
        cx r = std::sqrt(cx(-1.0 + 2.0 * j, 0.0));
        cx t = digamma((pi - 2.0 * I * clog(r / a)) / (4.0 * pi)) - digamma(0.75 - I * clog(r / a) / (2.0 * pi)) -
               digamma((pi - 2.0 * I * clog(a * r)) / (4.0 * pi)) + digamma(0.75 - I * clog(a * r) / (2.0 * pi));
        s.add(-I * ipi_pow(j) * C(n, j) / (2.0 * r * fact(n) * la) * t);
    }
    return s.value();
}

// x^{m-1} log(log x) / (b + c x^v)_{1+n}
inline cx malmsten_pochhammer(cx b, cx c, cx v, cx m, int n)
{
    require_count(n, "malmsten_pochhammer");
    CompensatedSum s;
    cx z = cexp(2.0 * I * m * pi / v);
    for (int j = 0; j <= n; ++j) {
        cx bj = b + double(j);
        cx pre = 2.0 * I * ipi_pow(j) * P(c, -m / v) * cexp(I * m * pi / v) * P(bj, -1.0 + m / v) * pi * C(n, j) /
                 ((-1.0 + z) * v * fact(n));
        cx u = lerch_a(v, P(c, -1.0 / v) * P(bj, 1.0 / v));
        s.add(pre * (clog(2.0 * I * pi / v) + (-1.0 + z) * dphi(z, 0.0, u)));
    }
    return s.value();
}

// x^{m-1} log(log(ax)) / (x^v - 1)^2
inline cx malmsten_double_pole(cx a, cx v, cx m)
{
    cx z = cexp(2.0 * I * m * pi / v);
    cx u = lerch_a(v, P(-1.0, -1.0 / v) * a);
    return P(-1.0, -m / v) * cexp(I * m * pi / v) / ((-1.0 + z) * v * v) *
           ((-1.0 + z) * v * phi(z, 1.0, u) - 2.0 * I * pi * (m - v) * (clog(2.0 * I * pi / v) + (-1.0 + z) * dphi(z, 0.0, u)));
}

// x^{m-1} log^k(ax) / (1 - x)^{n+1}
inline cx log_power_unit_pole(cx a, cx m, cx k, int n)
{
    require_count(n, "log_power_unit_pole");
    CompensatedSum s;
    cx z = cexp(2.0 * I * (m - double(n)) * pi);
    cx u = (pi - I * clog(-a)) / (2.0 * pi);
    for (int j = 0; j <= n; ++j) {
        double sj = S(n, j);
        if (sj == 0.0)
            continue;
        for (int l = 0; l <= j; ++l) {
            cx t = cexp(I * pi * (-double(j) + double(l) - m)) * P(I, k - double(l)) * cexp(I * (-0.5 + m - double(n)) * pi) *
                   P(1.0 - m, j - l) * P(2.0 * pi, 1.0 + k - double(l)) * C(j, l) / fact(n);
            s.add(t * phi(z, -k + double(l), u) * pochhammer(1.0 + k - double(l), l) * sj);
        }
    }
    return s.value();
}

// (1 + b x^v)^{-1-n} / (a^2 pi^2 - log^2 x)
inline cx reciprocal_log_square(cx a, cx b, cx v, int n)
{
    require_count(n, "reciprocal_log_square");
    CompensatedSum s;
    cx bv = P(b, -1.0 / v);
    cx z = cexp(-2.0 * I * pi * (-1.0 + double(n) * v) / v);
    cx u1 = (pi + I * a * pi * v - I * v * clog(bv)) / (2.0 * pi);
    cx u2 = -I * (pi * (I + a * v) + v * clog(bv)) / (2.0 * pi);
    for (int j = 0; j <= n; ++j) {
        double sj = S(n, j);
        if (sj == 0.0)
            continue;
        for (int l = 0; l <= j; ++l) {
            cx pre = ipi_pow(l - j) * bv * cexp(-I * pi * (-1.0 + double(n) * v) / v) * P(2.0 * pi, -1 - l) * P(-1.0 / v, l) *
                     P(I / v, -l) * P((-1.0 + v) / v, j - l) * C(j, l) * fact(l) / (a * fact(n));
            s.add(-pre * (-phi(z, 1.0 + double(l), u1) + phi(z, 1.0 + double(l), u2)) * sj);
        }
    }
    return s.value();
}

// (1 + e^{i b pi} x^v)^{-1-n} / (log^2 x - a^2 pi^2)^2
inline cx reciprocal_log_square_squared(cx a, cx b, cx v, int n)
{
    require_count(n, "reciprocal_log_square_squared");
    CompensatedSum s;
    cx z = cexp(-2.0 * I * pi * (-1.0 + double(n) * v) / v);
    cx um = (1.0 - b - I * a * v) / 2.0;
    cx up = (1.0 - b + I * a * v) / 2.0;
    for (int j = 0; j <= n; ++j) {
        double sj = S(n, j);
        if (sj == 0.0)
            continue;
        for (int l = 0; l <= j; ++l) {
            double lf = l;
            cx pre = ipi_pow(l - j) * cexp(-I * pi * (-1.0 + b + double(n) * v) / v) * P(2.0 * pi, -3 - l) * P(-1.0 / v, l) *
                     P(I / v, -l) * P((-1.0 + v) / v, j - l) * C(j, l) * fact(l) / (a * a * a * fact(n));
            cx t = -2.0 * phi(z, 1.0 + lf, um) + 2.0 * phi(z, 1.0 + lf, up) +
                   I * a * (1.0 + lf) * v * (phi(z, 2.0 + lf, um) + phi(z, 2.0 + lf, up));
            s.add(pre * t * sj);
        }
    }
    return s.value();
}

// 1 / ((1+x)^2 (a^2 + log^2 x)^2)
inline cx squared_log_shift(cx a)
{
    cx w = (a + pi) / (2.0 * pi);
    return (2.0 * pi * polygamma(1, w) - a * polygamma(2, w)) / (8.0 * a * a * a * pi * pi);
}

// same integrand at a = pi
inline cx squared_log_shift_at_pi() { return (pi * pi + 6.0 * zeta3()) / (24.0 * std::pow(pi, 4)); }

// 1 / ((1 + e^{i b pi} x)^2 (a^2 pi^2 + log^2 x)^2)
inline cx rotated_squared_log(cx a, cx b)
{
    cx w1 = (1.0 + a - b) / 2.0, w2 = (1.0 + a + b) / 2.0;
    return cexp(-I * b * pi) / (16.0 * a * a * a * std::pow(pi, 4)) *
           (2.0 * polygamma(1, w1) + 2.0 * polygamma(1, w2) - a * (polygamma(2, w1) + polygamma(2, w2)));
}

// log x / ((1 + e^{i b pi} x)^2 (a^2 pi^2 + log^2 x)^2)
inline cx rotated_squared_log_weighted(cx a, cx b)
{
    return -I * cexp(-I * b * pi) * (hurwitz_zeta(3.0, (1.0 + a - b) / 2.0) - hurwitz_zeta(3.0, (1.0 + a + b) / 2.0)) /
           (8.0 * a * std::pow(pi, 3));
}

// (x^s - x^m) log(log x) / (b + c x^v)_{1+n}
inline cx malmsten_pochhammer_difference(cx b, cx c, cx v, cx m, cx s, int n)
{
    require_count(n, "malmsten_pochhammer_difference");
    CompensatedSum tot;
    cx zm = cexp(2.0 * I * (1.0 + m) * pi / v), zs = cexp(2.0 * I * (1.0 + s) * pi / v);
    cx L = clog(2.0 * I * pi / v);
    for (int j = 0; j <= n; ++j) {
        cx bj = b + double(j);
        cx u = lerch_a(v, P(c, -1.0 / v) * P(bj, 1.0 / v));
        cx t1 = P(c, -(1.0 + m) / v) * P(bj, (1.0 + m) / v) *
                (-I * csc((1.0 + m) * pi / v) * L + 2.0 * cexp(I * (1.0 + m) * pi / v) * dphi(zm, 0.0, u));
        cx t2 = I * P(c, -(1.0 + s) / v) * P(bj, (1.0 + s) / v) *
                (csc(pi * (1.0 + s) / v) * L + 2.0 * I * cexp(I * pi * (1.0 + s) / v) * dphi(zs, 0.0, u));
        tot.add(-I * ipi_pow(j) * pi * C(n, j) / (bj * v * fact(n)) * (t1 + t2));
    }
    return tot.value();
}

// (x^{-1/2} - x^{1/2}) log(log x) / (1 - x)_{1+n}, as printed
inline cx malmsten_half_power_unit(int n)
{
    require_count(n, "malmsten_half_power_unit");
    CompensatedSum s;
    cx L = clog(2.0 * I * pi);
    for (int j = 0; j <= n; ++j) {
        double r = std::sqrt(1.0 + j);
        cx u = (pi - I * clog(cx(-1.0 - j, 0.0))) / (2.0 * pi);
        cx d = dphi(-1.0, 0.0, u);
        s.add(I * ipi_pow(j) * pi * C(n, j) / ((1.0 + j) * fact(n)) *
              (r * (L - 2.0 * d) + I * std::pow(1.0 + j, 1.5) * (I * L - 2.0 * I * d)));
    }
    return s.value();
}

// x^{m-1} log(log(ax)) / (1 + b x^v)^{n+1}
inline cx malmsten_polynomial(cx a, cx b, cx v, cx m, int n)
{
    require_count(n, "malmsten_polynomial");
    CompensatedSum tot;
    cx z = cexp(2.0 * I * m * pi / v);
    cx u = lerch_a(v, a * P(b, -1.0 / v));
    cx L = clog(2.0 * I * pi / v);
    cx e = cexp(I * pi * (m - (0.5 + n) * v) / v);
    for (int j = 0; j <= n; ++j) {
        double sj = S(n, j);
        if (sj == 0.0)
            continue;
        for (int l = 0; l <= j; ++l) {
            cx pre = ipi_pow(j) * P(b, -m / v) * e * P(2.0 * pi, 1 - l) * P(1.0 - m / v, j - l) * P(-1.0 / v, l) *
                     P(I / v, -l) * C(j, l) * sj / (v * fact(n));
            cx r = pochhammer(cx(1.0 - l), l);
            tot.add(pre * (phi(z, double(l), u) * (L * r + stirling_tail(l, 1.0 - l)) - r * dphi(z, double(l), u)));
        }
    }
    return tot.value();
}

// (x^{s-1} - x^{m-1}) log(log x) / (1 - x)^{n+1}, polylogarithm form
inline cx malmsten_unit_difference(cx m, cx s, int n)
{
    require_count(n, "malmsten_unit_difference");
    auto part = [&](cx w) {
        CompensatedSum tot;
        cx z = cexp(2.0 * I * w * pi);
        cx L = clog(2.0 * I * pi);
        for (int j = 0; j <= n; ++j) {
            double sj = S(n, j);
            if (sj == 0.0)
                continue;
            for (int l = 0; l <= j; ++l) {
                cx pre = cexp(I * pi * (-double(j) + double(l) - w)) * P(I, -l) * cexp(I * (-0.5 + w - double(n)) * pi) *
                         P(1.0 - w, j - l) * P(2.0 * pi, 1 - l) * C(j, l) * sj / fact(n);
                cx r = pochhammer(cx(1.0 - l), l);
                tot.add(pre * (cexp(-2.0 * I * w * pi) * polylog(double(l), z) * (L * r + stirling_tail(l, 1.0 - l)) -
                               r * dphi(z, double(l), 1.0)));
            }
        }
        return tot.value();
    };
    return part(m) - part(s);
}

// x^{m-1} log(log(ax)) / ((1 + b x^v)^{n+1} log(ax))
inline cx malmsten_log_ratio(cx a, cx b, cx v, cx m, int n)
{
    require_count(n, "malmsten_log_ratio");
    CompensatedSum tot;
    cx z = cexp(2.0 * I * m * pi / v);
    cx u = lerch_a(v, a * P(b, -1.0 / v));
    cx L = clog(2.0 * I * pi / v);
    cx e = cexp(I * pi * (m - (0.5 + n) * v) / v);
    for (int j = 0; j <= n; ++j) {
        double sj = S(n, j);
        if (sj == 0.0)
            continue;
        for (int l = 0; l <= j; ++l) {
            cx pre = ipi_pow(j) * P(b, -m / v) * e * P(2.0 * pi, -l) * P(1.0 - m / v, j - l) * P(-1.0 / v, l) *
                     P(I / v, -1 - l) * C(j, l) * sj / (v * fact(n));
            double r = (l % 2 ? -1.0 : 1.0) * fact(l);
            cx lf = double(l);
            tot.add(pre * (phi(z, 1.0 + lf, u) * (L * r + stirling_tail(l, -lf)) - r * dphi(z, 1.0 + lf, u)));
        }
    }
    return tot.value();
}

// (x^{s-1} - x^{m-1}) log(log(ax)) / ((1 + b x^v)^{n+1} log(ax))
inline cx malmsten_log_ratio_difference(cx a, cx b, cx v, cx m, cx s, int n)
{
    return malmsten_log_ratio(a, b, v, s, n) - malmsten_log_ratio(a, b, v, m, n);
}

// log(log x) / (1 + x^3)^n
inline cx malmsten_cubic(int n)
{
    if (n < 1)
        throw RangeError("malmsten_cubic: n must be at least 1");
    require_count(n, "malmsten_cubic");
    CompensatedSum tot;
    cx z = cexp(2.0 * I * pi / 3.0);
    cx L = clog(2.0 * I * pi / 3.0);
    for (int j = 0; j < n; ++j) {
        double sj = S(n - 1, j);
        if (sj == 0.0)
            continue;
        for (int l = 0; l <= j; ++l) {
            cx pre = ipi_pow(l - j) * P(I, -l) * std::pow(2.0, 1 + j - 2 * l) * std::pow(3.0, -1 - j + l) *
                     cexp(I / 3.0 * (1.0 - 3.0 * (-0.5 + n)) * pi) * std::pow(pi, 1 - l) * C(j, l) * sj / fact(n - 1);
            cx r = pochhammer(cx(1.0 - l), l);
            tot.add(pre * (phi(z, double(l), 0.5) * (L * r + stirling_tail(l, 1.0 - l)) - r * dphi(z, double(l), 0.5)));
        }
    }
    return tot.value();
}

// log(log x) / (1 + x^3), printed closed form
inline cx malmsten_cubic_closed()
{
    cx z = cexp(2.0 * I * pi / 3.0);
    return 2.0 / 3.0 * cexp(-I * pi / 6.0) * pi * (clog(2.0 * I * pi / 3.0) / (1.0 - z) - dphi(z, 0.0, 0.5));
}

// log(log x) / (1 + x^4)^2
inline cx malmsten_quartic_closed()
{
    cx si = std::sqrt(I);
    cx h = cx(8.0, 8.0) * std::atanh(si) / si;  // (8+8i) 2F1(1/2,1;3/2;i)
    return (3.0 * I * pi * pi + h + 6.0 * pi * (std::log(pi / 2.0) - cx(1.0, -1.0) * dphi(I, 0.0, 0.5))) /
           (16.0 * std::sqrt(2.0));
}

// log(log x) / (1 + x^2)^4
inline cx malmsten_catalan_quadratic()
{
    return 3.0 * catalan_constant() / (4.0 * pi) +
           pi / 96.0 * (22.0 * I + 15.0 * clog(2.0 * I * pi * std::pow(std::tgamma(-0.25), 2) /
                                                  (9.0 * std::pow(std::tgamma(-0.75), 2))));
}

// log(log(ax)) / (1 + a^2 x^2)^3 for a = 2, 3, 4
inline cx malmsten_catalan_scaled(cx a)
{
    return catalan_constant() / (2.0 * a * pi) + I * pi / (4.0 * a) +
           3.0 * pi / (8.0 * a) * (0.5 * clog(I * pi) - dphi(-1.0, 0.0, 0.5));
}

// sqrt(x) log(log(2x)) / (1 + 8 x^3)^3
inline cx malmsten_catalan_cubic()
{
    double r2 = std::sqrt(2.0);
    return catalan_constant() / (6.0 * r2 * pi) + I * pi / (12.0 * r2) +
           pi * (0.5 * clog(2.0 * I * pi / 3.0) - dphi(-1.0, 0.0, 0.5)) / (8.0 * r2);
}

// x^{s-1} / (a - x)^n, printed finite double sum
inline cx shifted_power_series(cx a, cx s, int n)
{
    if (n < 1)
        throw RangeError("shifted_power_series: n must be at least 1");
    require_count(n, "shifted_power_series");
    CompensatedSum tot;
    cx z = cexp(2.0 * I * pi * s);
    cx u = (pi - I * clog(-a * a)) / (2.0 * pi);
    for (int j = 0; j <= n; ++j) {
        double sj = S(n - 1, j);
        if (j > n - 1 || sj == 0.0)
            continue;
        for (int l = 0; l <= j; ++l) {
            cx t = ipi_pow(l - j) * P(I, -l) * P(-1.0 / a, -s) * P(a, -n) * cexp(I * pi * (0.5 - double(n) + s)) *
                   P(2.0 * pi, 1 - l) * P(1.0 - s, j - l) * C(j, l);
            tot.add(t * phi(z, double(l), u) * pochhammer(cx(1.0 - l), l) * sj);
        }
    }
    return -tot.value() / fact(n - 1);
}

// x^{s-1} / (a - x)^n, closed form
inline cx shifted_power_closed(cx a, cx s, int n)
{
    if (n < 1)
        throw RangeError("shifted_power_closed: n must be at least 1");
    return -(pi * P(-a, s - double(n))) * ((1.0 - double(n) + s) * pochhammer(2.0 - double(n) + s, n - 1)) /
           (fact(n - 1) * std::sin(s * pi) * s);
}

// the double sum of shifted_power_series without its -1/(n-1)! factor
inline cx shifted_power_series_bare(cx a, cx s, int n) { return -shifted_power_series(a, s, n) * fact(n - 1); }

inline cx shifted_power_closed_bare(cx a, cx s, int n)
{
    return -(pi * P(-a, s - double(n))) * ((1.0 - double(n) + s) * pochhammer(2.0 - double(n) + s, n - 1)) /
           (std::sin(s * pi) * s);
}

// x^{alpha-1} log x / (z^mu + x^mu)^m
inline cx power_sum_log_series(cx al, cx mu, cx z, int m)
{
    if (m < 1)
        throw RangeError("power_sum_log_series: m must be at least 1");
    require_count(m, "power_sum_log_series");
    CompensatedSum tot;
    cx zz = cexp(2.0 * I * pi * al / mu);
    cx u = lerch_a(mu, P(P(z, -mu), -1.0 / mu));
    for (int j = 0; j < m; ++j) {
        double sj = S(m - 1, j);
        if (sj == 0.0)
            continue;
        for (int l = 0; l <= j; ++l) {
            cx pre = P(z, -double(m) * mu) * ipi_pow(j) * cexp(I * pi * (al - (-0.5 + m) * mu) / mu) * P(2.0 * pi, 2 - l) *
                     P(P(z, -mu), -al / mu) * P(1.0 - al / mu, j - l) * P(-1.0 / mu, l) * P(I / mu, 1 - l) * C(j, l) /
                     (mu * fact(m - 1));
            tot.add(pre * phi(zz, -1.0 + double(l), u) * pochhammer(cx(2.0 - l), l) * sj);
        }
    }
    return tot.value();
}

inline cx power_sum_log_closed(cx al, cx mu, cx z, int m)
{
    if (m < 1)
        throw RangeError("power_sum_log_closed: m must be at least 1");
    cx hs{0.0, 0.0};
    for (int k = 1; k < m; ++k)
        hs += mu / (double(k) * mu - al);
    return P(z, al - mu * double(m)) * pochhammer(1.0 - al / mu, m - 1) * pi / (fact(m - 1) * mu * mu * std::sin(al * pi / mu)) *
           (mu * clog(z) - hs - pi * cot(al * pi / mu));
}

// scaled forms of the two above, as printed in the series-only statement
inline cx power_sum_log_series_scaled(cx al, cx mu, cx z, int m)
{
    require_count(m, "power_sum_log_series_scaled");
    CompensatedSum tot;
    cx zz = cexp(2.0 * I * pi * al / mu);
    cx u = lerch_a(mu, P(P(z, -mu), -1.0 / mu));
    for (int j = 0; j < m; ++j) {
        double sj = S(m - 1, j);
        if (sj == 0.0)
            continue;
        for (int l = 0; l <= j; ++l) {
            cx t = ipi_pow(j) * cexp(I * pi * (al - (-0.5 + m) * mu) / mu) * P(2.0 * pi, 2 - l) * ipi_pow(l) * P(I, 1 - l) *
                   P(mu, l - j) * P(mu - al, j - l) * C(j, l);
            tot.add(t * phi(zz, -1.0 + double(l), u) * pochhammer(cx(2.0 - l), l) * sj);
        }
    }
    return tot.value();
}

inline cx power_sum_log_closed_scaled(cx al, cx mu, cx z, int m)
{
    cx hs{0.0, 0.0};
    for (int k = 1; k < m; ++k)
        hs += mu / (double(k) * mu - al);
    return pochhammer(1.0 - al / mu, m - 1) * pi * (mu * clog(z) - hs - pi * cot(al * pi / mu)) / std::sin(al * pi / mu);
}

// x^{a-1} / (1 + b x)^{n+1}; `scaled` drops the b^{-a} factor
inline cx linear_power_series(cx a, cx b, int n, bool scaled = false)
{
    require_count(n, "linear_power_series");
    CompensatedSum tot;
    cx z = cexp(2.0 * I * a * pi);
    cx u = (pi - I * clog(1.0 / b)) / (2.0 * pi);
    for (int j = 0; j <= n; ++j) {
        double sj = S(n, j);
        if (sj == 0.0)
            continue;
        for (int l = 0; l <= j; ++l) {
            cx t = ipi_pow(l - j) * P(I, -l) * P(1.0 - a, j - l) * (scaled ? cx{1.0, 0.0} : P(b, -a)) *
                   cexp(I * (-0.5 + a - double(n)) * pi) * P(2.0 * pi, 1 - l) * C(j, l);
            tot.add(t * phi(z, double(l), u) * pochhammer(cx(1.0 - l), l) * sj);
        }
    }
    return tot.value() / fact(n);
}

inline cx linear_power_closed(cx a, cx b, int n, bool scaled = false)
{
    cx r = ipi_pow(n) * pi * binom(a - 1.0, n) * csc(a * pi);
    return scaled ? r : r / P(b, a);
}

// (1 + x^2)(x^{p-1} - x^{q-1}) / ((1 + x^{2+4n}) log x)
inline cx even_power_ratio_atanh(cx p, cx q, int n)
{
    double w = 2.0 + 4.0 * n;
    auto at = [&](cx e) { return std::atanh(cexp(I * e * pi / w)); };
    return -2.0 * (at(p) + at(2.0 + p) - at(q) - at(2.0 + q));
}

inline cx even_power_ratio_log(cx p, cx q, int n)
{
    double w = 4.0 * (2.0 * n + 1.0);
    return clog(std::tan(p * pi / w) * std::tan((p + 2.0) * pi / w) * cot(q * pi / w) * cot((q + 2.0) * pi / w));
}

// (x^2 - 1)(x^p - x^q) log^k x / (x^{2n} - 1)
inline cx even_power_polylog(cx p, cx q, int n, cx k)
{
    auto L = [&](cx w) { return polylog(-k, cexp(I * w * pi / double(n))); };
    return P(I / double(n), -1.0 + k) * P(pi, 1.0 + k) * (L(1.0 + p) - L(3.0 + p) - L(1.0 + q) + L(3.0 + q)) /
           (double(n) * n);
}

// (1 - x^2)(x^{p-1} - x^{q-1}) / ((1 - x^{2n}) log x)
inline cx even_power_log(cx p, cx q, int n)
{
    double w = 2.0 * n;
    return clog(csc((2.0 + p) * pi / w) * csc(pi * q / w) * std::sin(p * pi / w) * std::sin(pi * (2.0 + q) / w));
}

// x^m log^k x / (1 - x^{p+q+2s})
inline cx geometric_polylog(cx m, cx k, cx p, cx q, cx s)
{
    cx w = p + q + 2.0 * s;
    return P(2.0 * pi, 1.0 + k) * P(I / w, -1.0 + k) * polylog(-k, cexp(2.0 * I * (1.0 + m) * pi / w)) / (w * w);
}

// x^{s-1}(1 - x^p)(1 - x^q) / ((1 - x^{p+q+2s}) log x)
inline cx geometric_log(cx p, cx q, cx s)
{
    cx w = p + q + 2.0 * s;
    return clog((1.0 + std::cos(pi * (p + q) / w)) / (1.0 + std::cos(pi * (p - q) / w)));
}

// x^{m-1} (1 - x^v)^{-1-n} log^k x
inline cx unit_polynomial_polylog(cx m, cx v, cx k, int n)
{
    require_count(n, "unit_polynomial_polylog");
    CompensatedSum tot;
    cx z = cexp(2.0 * I * m * pi / v);
    for (int j = 0; j <= n; ++j) {
        double sj = S(n, j);
        if (sj == 0.0)
            continue;
        for (int l = 0; l <= j; ++l) {
            cx t = cexp(I * pi * (-double(j) - m / v)) * cexp(I * pi * (m - (0.5 + n) * v) / v) *
                   P(2.0 * pi, 1.0 + k - double(l)) * P(1.0 - m / v, j - l) * P(-1.0 / v, l) * P(I / v, k - double(l)) *
                   C(j, l) * polylog(-k + double(l), z) / (v * fact(n));
            tot.add(t * pochhammer(1.0 + k - double(l), l) * sj);
        }
    }
    return tot.value();
}

// (x^{p-1} - x^{q-1})(1 - x^s) / ((1 - x^v)^{n+1} log x)
inline cx unit_polynomial_difference(cx p, cx q, cx s, cx v, int n)
{
    require_count(n, "unit_polynomial_difference");
    CompensatedSum tot;
    auto A = [&](cx w) { return 1.0 - w / v; };
    auto Li = [&](cx w, int l) { return polylog(1.0 + double(l), cexp(2.0 * I * pi * w / v)); };
    auto E = [&](cx w) { return cexp(I * pi * (w - (0.5 + n) * v) / v); };
    auto neg = [&](cx e) { return cexp(I * pi * e); };  // (-1)^e
    for (int j = 0; j <= n; ++j) {
        double sj = S(n, j);
        if (sj == 0.0)
            continue;
        for (int l = 0; l <= j; ++l) {
            cx pre = I * neg(-double(j) + double(l) - p / v - q / v - s / v) * P(A(p), -l) * P(A(q), -l) * P(A(p + s), -l) *
                     P(A(q + s), -l) * P(-1.0 / v, l) * P(I / v, -l) / (P(2.0 * pi, l) * fact(n)) * C(j, l) * fact(l);
            cx t = -neg(q / v + s / v) * E(p) * P(A(p), j) * P(A(q), l) * P(A(p + s), l) * P(A(q + s), l) * Li(p, l) +
                   neg(p / v + s / v) * E(q) * P(A(p), l) * P(A(q), j) * P(A(p + s), l) * P(A(q + s), l) * Li(q, l) +
                   neg(q / v) * E(p + s) * P(A(p), l) * P(A(q), l) * P(A(p + s), j) * P(A(q + s), l) * Li(p + s, l) -
                   neg(p / v) * E(q + s) * P(A(p), l) * P(A(q), l) * P(A(p + s), l) * P(A(q + s), j) * Li(q + s, l);
            tot.add(pre * t * sj);
        }
    }
    return tot.value();
}

// x^{m-1} log(log x) / (log x (b + c x^v)_{1+n})
inline cx log_log_over_log_pochhammer(cx b, cx c, cx v, cx m, int n)
{
    require_count(n, "log_log_over_log_pochhammer");
    CompensatedSum tot;
    cx z = cexp(2.0 * I * m * pi / v);
    cx L = clog(2.0 * I * pi / v);
    for (int j = 0; j <= n; ++j) {
        cx bj = b + double(j);
        cx u = lerch_a(v, P(c, -1.0 / v) * P(bj, 1.0 / v));
        tot.add(-ipi_pow(j) * P(c, -m / v) * cexp(I * m * pi / v) * P(bj, -1.0 + m / v) * C(n, j) / fact(n) *
                (phi(z, 1.0, u) * L - dphi(z, 1.0, u)));
    }
    return tot.value();
}

// (x^s - x^m) / (log x (b + c x^v)_{1+n})
inline cx power_difference_over_log(cx b, cx c, cx v, cx m, cx s, int n)
{
    require_count(n, "power_difference_over_log");
    CompensatedSum tot;
    for (int j = 0; j <= n; ++j) {
        cx bj = b + double(j);
        cx u = lerch_a(v, P(c, -1.0 / v) * P(bj, 1.0 / v));
        tot.add(I * ipi_pow(j) * P(c, -(1.0 + m + s) / v) * P(bj, -1.0 + 1.0 / v) * C(n, j) / fact(n) *
                (-P(c, s / v) * cexp(I * pi * (1.0 + m - 1.5 * v) / v) * P(bj, m / v) *
                     phi(cexp(2.0 * I * (1.0 + m) * pi / v), 1.0, u) +
                 P(c, m / v) * cexp(I * pi * (1.0 + s - 1.5 * v) / v) * P(bj, s / v) *
                     phi(cexp(2.0 * I * pi * (1.0 + s) / v), 1.0, u)));
    }
    return tot.value();
}

// same with c = -1, as printed
inline cx power_difference_over_log_reflected(cx b, cx v, cx m, cx s, int n)
{
    require_count(n, "power_difference_over_log_reflected");
    CompensatedSum tot;
    for (int j = 0; j <= n; ++j) {
        cx bj = b + double(j);
        cx u = lerch_a(v, P(-1.0, -1.0 / v) * P(bj, 1.0 / v));
        tot.add(I * cexp(I * pi * (double(j) - (1.0 + m + s) / v)) * P(bj, -1.0 + 1.0 / v) * C(n, j) / fact(n) *
                (-P(-1.0, s / v) * cexp(I * pi * (1.0 + m - 1.5 * v) / v) * P(bj, m / v) *
                     phi(cexp(2.0 * I * (1.0 + m) * pi / v), 1.0, u) +
                 P(-1.0, m / v) * cexp(I * pi * (1.0 + s - 1.5 * v) / v) * P(bj, s / v) *
                     phi(cexp(2.0 * I * pi * (1.0 + s) / v), 1.0, u)));
    }
    return tot.value();
}

// (x^p - x^q)(x^s - 1) / (log x (b - x^v)_{1+n})
inline cx four_power_over_log(cx b, cx v, cx p, cx q, cx s, int n)
{
    require_count(n, "four_power_over_log");
    CompensatedSum tot;
    for (int j = 0; j <= n; ++j) {
        cx B = b + double(j);
        cx u = clog(B) / (2.0 * pi * I);
        auto F = [&](cx w) { return phi(cexp(2.0 * I * (1.0 + w) * pi / v), 1.0, u); };
        tot.add(cexp(I * double(j) * pi) * P(B, -1.0 + 1.0 / v) * C(n, j) / fact(n) *
                (P(B, p / v) * F(p) - P(B, q / v) * F(q) - P(B, (p + s) / v) * F(p + s) + P(B, (q + s) / v) * F(q + s)));
    }
    return tot.value();
}

// x^{m-1} log^k((-b/c)^{-1/v} x) / (b + c x^v)_{1+n}; the j = 0 term reduces to
// a polylogarithm and the remaining terms keep their Lerch factor
inline cx pochhammer_polylog(cx b, cx c, cx v, cx m, cx k, int n)
{
    require_count(n, "pochhammer_polylog");
    CompensatedSum tot;
    cx z = cexp(2.0 * I * m * pi / v);
    cx A = P(-b / c, -1.0 / v);
    cx common = P(c, -m / v) * cexp(I * m * pi / v) * P(2.0 * pi, 1.0 + k) * P(I / v, -1.0 + k) / (v * v * fact(n));
    for (int j = 1; j <= n; ++j) {
        cx bj = b + double(j);
        cx u = lerch_a(v, A * P(c, -1.0 / v) * P(bj, 1.0 / v));
        tot.add(ipi_pow(j) * common * P(bj, -1.0 + m / v) * C(n, j) * phi(z, -k, u));
    }
    tot.add(P(b, -1.0 + m / v) * common * polylog(-k, z));
    return tot.value();
}

// (x^s - x^m) log^k((-b/c)^{-1/v} x) / (b + c x^v)_{1+n}
inline cx pochhammer_polylog_difference(cx b, cx c, cx v, cx m, cx s, cx k, int n)
{
    require_count(n, "pochhammer_polylog_difference");
    CompensatedSum tot;
    cx A = P(-b / c, -1.0 / v);
    cx zm = cexp(2.0 * I * (1.0 + m) * pi / v), zs = cexp(2.0 * I * (1.0 + s) * pi / v);
    cx K = P(2.0 * pi, 1.0 + k) * P(I / v, 1.0 + k);
    for (int j = 1; j <= n; ++j) {
        cx bj = b + double(j);
        cx u = lerch_a(v, A * P(c, -1.0 / v) * P(bj, 1.0 / v));
        tot.add(ipi_pow(j) * P(c, -(2.0 + m + s) / v) * K * C(n, j) / (bj * fact(n)) *
                (P(c, (1.0 + s) / v) * cexp(I * (1.0 + m) * pi / v) * P(bj, (1.0 + m) / v) * phi(zm, -k, u) -
                 P(c, (1.0 + m) / v) * cexp(I * (1.0 + s) * pi / v) * P(bj, (1.0 + s) / v) * phi(zs, -k, u)));
    }
    tot.add(P(c, -(2.0 + m + s) / v) * K *
            (P(b, (1.0 + m) / v) * P(c, (1.0 + s) / v) * cexp(I * (1.0 + m) * pi / v) * polylog(-k, zm) -
             P(b, (1.0 + s) / v) * P(c, (1.0 + m) / v) * cexp(I * (1.0 + s) * pi / v) * polylog(-k, zs)) /
            (b * fact(n)));
    return tot.value();
}

namespace detail {
inline cx half_power_lerch(int j) { return phi(-1.0, 1.0, (pi - I * clog(cx(-1.0 - j, 0.0))) / (2.0 * pi)); }
}  // namespace detail

// (x^{-1/2} - x^{1/2}) / ((1 - x)(2 - x) log x), printed value
inline cx half_power_two_poles() { return -phi(-1.0, 1.0, (pi - I * (I * pi + std::log(2.0))) / (2.0 * pi)) / std::sqrt(2.0); }

// (x^{-1/2} - x^{1/2}) / (log x (1 - x)_{1+n}), printed sum
inline cx half_power_unit_pochhammer(int n)
{
    require_count(n, "half_power_unit_pochhammer");
    CompensatedSum tot;
    for (int j = 1; j <= n; ++j) {
        cx f = half_power_lerch(j);
        tot.add(ipi_pow(j) * C(n, j) * (-std::sqrt(1.0 + j) * f + std::pow(1.0 + j, 1.5) * f) / ((1.0 + j) * fact(n)));
    }
    return tot.value();
}

// (x^{-1/2} - x^{1/2}) / (log(2x) (1 - 2x)_{1+n}), printed sum
inline cx half_power_scaled_pochhammer(int n)
{
    require_count(n, "half_power_scaled_pochhammer");
    double r2 = std::sqrt(2.0);
    CompensatedSum tot;
    tot.add(std::log(2.0) / (2.0 * r2 * fact(n)));
    for (int j = 1; j <= n; ++j) {
        cx f = half_power_lerch(j);
        tot.add(ipi_pow(j) * C(n, j) / (4.0 * (1.0 + j) * fact(n)) *
                (-2.0 * r2 * std::sqrt(1.0 + j) * f + r2 * std::pow(1.0 + j, 1.5) * f));
    }
    return tot.value();
}

// (x^s - x^m) log(log x) / (log x (b + c x^v)_{1+n})
inline cx log_log_power_difference(cx b, cx c, cx v, cx m, cx s, int n)
{
    require_count(n, "log_log_power_difference");
    CompensatedSum tot;
    cx L = clog(2.0 * I * pi / v);
    cx zm = cexp(2.0 * I * (1.0 + m) * pi / v), zs = cexp(2.0 * I * pi * (1.0 + s) / v);
    for (int j = 0; j <= n; ++j) {
        cx bj = b + double(j);
        cx u = lerch_a(v, P(c, -1.0 / v) * P(bj, 1.0 / v));
        LerchValue pm = lerch_eval({zm, 1.0, u}, true), ps = lerch_eval({zs, 1.0, u}, true);
        tot.add(-I * ipi_pow(j) * P(c, -1.0 / v) * P(bj, -1.0 + 1.0 / v) * C(n, j) / fact(n) *
                (P(c, -m / v) * cexp(I * pi * (1.0 + m - 1.5 * v) / v) * P(bj, m / v) * (pm.value * L - pm.ds) +
                 P(c, -s / v) * cexp(I * pi * (1.0 + s - 1.5 * v) / v) * P(bj, s / v) * (-ps.value * L + ps.ds)));
    }
    return tot.value();
}

// (x^{-1/2} - x^{1/2}) log(log x) / (log x (1 - x)_{1+n}), printed sum
inline cx half_power_log_log_unit(int n)
{
    require_count(n, "half_power_log_log_unit");
    CompensatedSum tot;
    cx L = clog(2.0 * I * pi);
    for (int j = 0; j <= n; ++j) {
        cx u = (pi - I * clog(cx(-1.0 - j, 0.0))) / (2.0 * pi);
        LerchValue f = lerch_eval({-1.0, 1.0, u}, true);
        double r = std::sqrt(1.0 + j);
        tot.add(I * ipi_pow(j) * C(n, j) / fact(n) *
                (-I * r * (f.value * L - f.ds) - I * (-f.value * L + f.ds) / r));
    }
    return tot.value();
}

// x^{m alpha/2 - 1} log^{2n} x / (1 + x^alpha)^m, Stirling double sum for a
// positive integer m
inline cx even_log_power_integer(int m, cx al, int n)
{
    if (m < 1)
        throw RangeError("even_log_power_integer: m must be a positive integer");
    require_count(m, "even_log_power_integer");
    CompensatedSum tot;
    double md = m;
    cx e = cexp(I * pi * (-((-0.5 + md) * al) + md * al / 2.0) / al);
    cx z = cexp(I * md * pi);
    for (int j = 0; j <= m; ++j) {
        double sj = S(m - 1, j);
        if (j > m - 1 || sj == 0.0)
            continue;
        for (int l = 0; l <= j; ++l) {
            cx t = ipi_pow(j) * e * P(cx(1.0 - md / 2.0), j - l) * P(2.0 * pi, 1 - l + 2 * n) * P(-1.0 / al, l) /
                   (al * fact(m - 1)) * P(I / al, -l + 2 * n) * C(j, l);
            tot.add(t * phi(z, double(l - 2 * n), 0.5) * pochhammer(cx(1.0 - l + 2.0 * n), l) * sj);
        }
    }
    return tot.value();
}

// same integral for real m in (0, 2n+2): 2 (2n)! (2/alpha)^{2n+1} sum_v C(-m,v)/(m+2v)^{2n+1},
// the alternating sum accelerated (Cohen, Rodriguez Villegas, Zagier)
inline cx even_log_power_series(double m, cx al, int n)
{
    if (!(m > 0.0))
        throw DomainError("even_log_power_series: requires m > 0");
    auto term = [&](int k) {
        // |C(-m,k)| / (m+2k)^{2n+1} = (m)_k / k! / (m+2k)^{2n+1}
        double lp = std::lgamma(m + k) - std::lgamma(m) - std::lgamma(k + 1.0);
        return std::exp(lp - (2.0 * n + 1.0) * std::log(m + 2.0 * k));
    };
    auto cvz = [&](int N) {
        double d = std::pow(3.0 + std::sqrt(8.0), N);
        d = (d + 1.0 / d) / 2.0;
        double b = -1.0, c = -d, s = 0.0;
        for (int k = 0; k < N; ++k) {
            c = b - c;
            s += c * term(k);
            b = (k + N) * (k - N) * b / ((k + 0.5) * (k + 1.0));
        }
        return s / d;
    };
    double s1 = cvz(40), s2 = cvz(30);
    if (std::abs(s1 - s2) > 1e-11 * std::max(1.0, std::abs(s1)))
        throw NonConvergence("even_log_power_series: accelerated sum did not settle", s1);
    return 2.0 * fact(2 * n) * P(2.0 / al, 2 * n + 1) * s1;
}

// piecewise form: the Stirling branch where it is defined (odd integer m),
// the series otherwise. For even m the Stirling branch needs Phi(1, s <= 0, 1/2),
// which diverges, so the series is used there as well.
inline cx even_log_power(double m, cx al, int n)
{
    if (!(al.real() > 0.0))
        throw DomainError("even_log_power: requires Re(alpha) > 0");
    if (!(m > 0.0 && m < 2.0 * n + 2.0))
        throw DomainError("even_log_power: requires 0 < m < 2n+2");
    if (m == std::round(m) && static_cast<long>(m) % 2 == 1)
        return even_log_power_integer(static_cast<int>(m), al, n);
    return even_log_power_series(m, al, n);
}

}  // namespace rhs

}  // namespace logint
