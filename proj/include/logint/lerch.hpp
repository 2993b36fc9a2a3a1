#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "logint/combinat.hpp"
#include "logint/core.hpp"
#include "logint/special.hpp"

namespace logint {

enum class LerchRegime {
    direct_series,        // |z| small enough that the defining series converges fast
    boundary_expansion,   // |z| near or on the unit circle
    nonpositive_integer,  // s = 0, -1, -2, ...: finite rational expression
    hurwitz,              // z = 1, Re(s) > 1
};

inline const char* to_string(LerchRegime r)
{
    switch (r) {
    case LerchRegime::direct_series: return "direct-series";
    case LerchRegime::boundary_expansion: return "boundary-expansion";
    case LerchRegime::nonpositive_integer: return "nonpositive-integer";
    case LerchRegime::hurwitz: return "hurwitz";
    }
    return "?";
}

struct LerchArgs {
    cx z, s, a;
};

struct LerchValue {
    cx value;
    cx ds;  // d/ds, only filled when requested
};

namespace detail {

inline constexpr double lerch_direct_radius = 0.75;
inline constexpr double lerch_unit_slack = 1e-12;
inline constexpr long lerch_max_terms = 1'000'000;

inline bool near_one(cx z) { return std::abs(z - 1.0) < 1e-15; }

inline bool nonpositive_integer_s(cx s) { return is_integer(s) && s.real() <= 0.0 && s.real() > -64.0; }

// Sum_{n>=0} z^n n^k, i.e. 1/(1-z) for k = 0 and Li_{-k}(z) otherwise, divided
// by k!. Uses the expansion over the logarithm lattice,
// Li_{-k}(z)/k! = sum_m (2 pi i m - log z)^{-k-1}, folded into two Hurwitz
// zeta values.
class ScaledNegPolylog {
public:
    explicit ScaledNegPolylog(cx z) : z_(z)
    {
        cx w = clog(z);
        t_ = w / (2.0 * pi * I);
        if (t_.real() <= 0.0)
            t_ += 1.0;
        small_ = std::abs(z) <= 0.25;
    }

    cx operator()(int k) const
    {
        if (k == 0)
            return 1.0 / (1.0 - z_);
        if (small_)
            return direct(k);
        cx zeta_sum = hurwitz_zeta(double(k + 1), 1.0 - t_);
        cx other = hurwitz_zeta(double(k + 1), t_);
        zeta_sum += ((k + 1) % 2 == 0) ? other : -other;
        return zeta_sum * cpow(2.0 * pi * I, -(k + 1));
    }

private:
    cx direct(int k) const
    {
        CompensatedSum sum;
        cx zn = z_;
        double kf = std::tgamma(k + 1.0);
        for (int n = 1; n < 4000; ++n) {
            cx term = zn * std::pow(double(n), k) / kf;
            sum.add(term);
            if (std::abs(term) < 1e-18 * std::abs(sum.value()) && n > k)
                break;
            zn *= z_;
            if (zn == cx{0.0, 0.0})
                break;
        }
        return sum.value();
    }

    cx z_;
    cx t_;
    bool small_;
};

inline LerchValue lerch_direct(cx z, cx s, cx a, bool want_ds)
{
    CompensatedSum sum, dsum;
    cx lz = (z == cx{0.0, 0.0}) ? cx{0.0, 0.0} : clog(z);
    int small_run = 0;
    for (long n = 0; n < lerch_max_terms; ++n) {
        cx base = a + static_cast<double>(n);
        if (base == cx{0.0, 0.0})
            throw PoleError("lerch_phi: n + a = 0", a);
        cx lb = clog(base);
        cx term = (n == 0 ? cx{1.0, 0.0} : cexp(static_cast<double>(n) * lz)) * cexp(-s * lb);
        cx dterm = -lb * term;
        sum.add(term);
        if (want_ds)
            dsum.add(dterm);
        if (z == cx{0.0, 0.0})
            return {sum.value(), dsum.value()};
        bool small = std::abs(term) < 1e-17 * std::abs(sum.value()) &&
                     (!want_ds || std::abs(dterm) <= 1e-17 * std::abs(dsum.value()));
        small_run = small ? small_run + 1 : 0;
        if (small_run >= 3 && static_cast<double>(n) > -a.real())
            return {sum.value(), dsum.value()};
    }
    throw NonConvergence("lerch_phi: direct series did not converge", sum.value());
}

// Direct sum of N terms, then the remainder z^N sum_n z^n (n+A)^{-s}, A = N+a,
// through the expansion sum_k (-1)^k (s)_k/k! A^{-s-k} Li_{-k}(z).
inline LerchValue lerch_boundary(cx z, cx s, cx a, bool want_ds)
{
    cx w = clog(z);
    double delta = std::min({std::abs(w), std::abs(w - 2.0 * pi * I), std::abs(w + 2.0 * pi * I)});
    double need = 48.0 + std::abs(s);
    double nd = std::max(8.0, std::ceil(need / delta - a.real()));
    nd = std::max(nd, std::ceil(1.0 - a.real()));
    if (nd > static_cast<double>(lerch_max_terms))
        throw UnsupportedRegime("lerch_phi: z too close to 1 for the boundary expansion");
    long N = static_cast<long>(nd);
    cx A = a + static_cast<double>(N);
    if (std::abs(A) * delta < need)
        N += static_cast<long>(std::ceil(need / delta)), A = a + static_cast<double>(N);

    CompensatedSum sum, dsum;
    for (long n = 0; n < N; ++n) {
        cx base = a + static_cast<double>(n);
        if (base == cx{0.0, 0.0})
            throw PoleError("lerch_phi: n + a = 0", a);
        cx lb = clog(base);
        cx term = cexp(static_cast<double>(n) * w - s * lb);
        sum.add(term);
        if (want_ds)
            dsum.add(-lb * term);
    }

    ScaledNegPolylog ell(z);
    cx lA = clog(A);
    cx zN = cexp(static_cast<double>(N) * w);
    cx As = cexp(-s * lA);
    CompensatedSum tail, dtail;
    cx r{1.0, 0.0};   // (s)_k / A^k
    cx dr{0.0, 0.0};  // d/ds of the same
    int small_run = 0;
    // envelope of the last two terms; near z = -1 every other Li_{-k}(z) nearly vanishes
    double prev = std::numeric_limits<double>::infinity(), prev2 = prev;
    bool terminates = nonpositive_integer_s(s);
    for (int k = 0; k < 400; ++k) {
        cx e = ell(k);
        double sgn = (k % 2 == 0) ? 1.0 : -1.0;
        cx term = sgn * r * e;
        cx dterm = sgn * (dr - r * lA) * e;
        tail.add(term);
        dtail.add(dterm);
        cx total = sum.value() + zN * As * tail.value();
        cx dtotal = dsum.value() + zN * As * dtail.value();
        double mag = std::abs(zN * As * term);
        double dmag = std::abs(zN * As * dterm);
        bool small = mag <= 1e-17 * std::abs(total) && (!want_ds || dmag <= 1e-17 * std::abs(dtotal));
        if (terminates && !want_ds && r == cx{0.0, 0.0})
            small = true;
        small_run = small ? small_run + 1 : 0;
        if (small_run >= 3)
            return {total, dtotal};
        double cur = std::max(mag, want_ds ? dmag : 0.0);
        if (k > 8 && cur > 4.0 * std::max(prev, prev2) && cur > 1e-14 * std::abs(total))
            throw NonConvergence("lerch_phi: boundary expansion diverged", total);
        if (cur > 0.0)
            prev2 = prev, prev = cur;
        dr = (dr * (s + static_cast<double>(k)) + r) / A;
        r = r * (s + static_cast<double>(k)) / A;
    }
    throw NonConvergence("lerch_phi: boundary expansion did not settle", sum.value());
}

// Phi(z, -n, a) = sum_k C(n,k) a^{n-k} L_k with L_0 = 1/(1-z), L_k = Li_{-k}(z)
inline cx lerch_nonpositive(cx z, int n, cx a)
{
    ScaledNegPolylog ell(z);
    CompensatedSum sum;
    double binom_nk = 1.0;
    for (int k = 0; k <= n; ++k) {
        cx Lk = ell(k) * std::tgamma(k + 1.0);
        sum.add(binom_nk * cpow(a, n - k) * Lk);
        binom_nk = binom_nk * (n - k) / (k + 1.0);
    }
    return sum.value();
}

}  // namespace detail

inline LerchRegime classify(const LerchArgs& args, bool want_ds = false)
{
    const auto& [z, s, a] = args;
    if (detail::near_one(z)) {
        if (s.real() > 1.0)
            return LerchRegime::hurwitz;
        throw DivergenceError("lerch_phi: z = 1 with Re(s) <= 1");
    }
    double r = std::abs(z);
    if (!want_ds && detail::nonpositive_integer_s(s))
        return LerchRegime::nonpositive_integer;
    if (r > 1.0 + detail::lerch_unit_slack)
        throw UnsupportedRegime("lerch_phi: |z| > 1 outside the nonpositive-integer case");
    if (r <= detail::lerch_direct_radius)
        return LerchRegime::direct_series;
    return LerchRegime::boundary_expansion;
}

inline LerchValue lerch_eval(const LerchArgs& args, bool want_ds)
{
    const auto& [z, s, a] = args;
    LerchValue v{};
    switch (classify(args, want_ds)) {
    case LerchRegime::hurwitz:
        v.value = hurwitz_zeta(s, a);
        if (want_ds) {
            // central difference is adequate here; no identity uses this path
            double h = 1e-5;
            v.ds = (hurwitz_zeta(s + h, a) - hurwitz_zeta(s - h, a)) / (2.0 * h);
        }
        break;
    case LerchRegime::nonpositive_integer:
        v.value = detail::lerch_nonpositive(z, static_cast<int>(-std::lround(s.real())), a);
        break;
    case LerchRegime::direct_series:
        v = detail::lerch_direct(z, s, a, want_ds);
        break;
    case LerchRegime::boundary_expansion:
        v = detail::lerch_boundary(z, s, a, want_ds);
        break;
    }
    v.value = checked(v.value, "lerch_phi");
    if (want_ds)
        v.ds = checked(v.ds, "lerch_phi_ds");
    return v;
}

inline cx lerch_phi(const LerchArgs& args) { return lerch_eval(args, false).value; }
inline cx lerch_phi(cx z, cx s, cx a) { return lerch_phi({z, s, a}); }
inline cx lerch_phi_ds(const LerchArgs& args) { return lerch_eval(args, true).ds; }
inline cx lerch_phi_ds(cx z, cx s, cx a) { return lerch_phi_ds({z, s, a}); }

// Li_s(z) = z Phi(z, s, 1)
inline cx polylog(cx s, cx z)
{
    if (z == cx{0.0, 0.0})
        return {0.0, 0.0};
    if (detail::near_one(z)) {
        if (s.real() > 1.0)
            return riemann_zeta(s);
        throw DivergenceError("polylog: z = 1 with Re(s) <= 1");
    }
    return z * lerch_phi(z, s, 1.0);
}

// Residual of the duplication-type transformation
//   Phi(e^{i m pi/v}, -k, 1/2 - i v log(a b^{-1/v})/pi)
//     = 2^k e^{i pi m/(2v)} b^{-m/v} [(-ib)^{m/v} Phi(e^{2 i m pi/v}, -k, u(ib))
//                                    + (ib)^{m/v} Phi(e^{2 i m pi/v}, -k, u(-ib))]
// with u(c) = (pi - i v log(a c^{-1/v}))/(2 pi).
struct TransformationSides {
    cx lhs, rhs;
};

inline TransformationSides lerch_transformation_sides(cx m, cx v, cx a, cx b, cx k)
{
    if (v.real() <= 1.0)
        throw DomainError("lerch_transformation_check: requires Re(v) > 1");
    cx lhs = lerch_phi(cexp(I * m * pi / v), -k, 0.5 - I * v * clog(a * cpow(b, -1.0 / v)) / pi);
    auto u = [&](cx c) { return (pi - I * v * clog(a * cpow(c, -1.0 / v))) / (2.0 * pi); };
    cx z2 = cexp(2.0 * I * m * pi / v);
    cx rhs = cpow(2.0, k) * cexp(I * pi * m / (2.0 * v)) * cpow(b, -m / v) *
             (cpow(-I * b, m / v) * lerch_phi(z2, -k, u(I * b)) + cpow(I * b, m / v) * lerch_phi(z2, -k, u(-I * b)));
    return {lhs, rhs};
}

inline double lerch_transformation_check(cx m, cx v, cx a, cx b, cx k)
{
    auto [lhs, rhs] = lerch_transformation_sides(m, v, a, b, k);
    return std::abs(lhs - rhs);
}

}  // namespace logint
