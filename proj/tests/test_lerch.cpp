#include <gtest/gtest.h>

#include "logint/lerch.hpp"
#include "support.hpp"

using namespace logint;
using testing_support::Gen;
using testing_support::rel_err;

namespace {

using lcx = std::complex<long double>;

// Defining series summed in long double until the terms are negligible.
cx direct_sum(cx z, cx s, cx a, bool ds = false)
{
    lcx zz(z.real(), z.imag()), ss(s.real(), s.imag()), aa(a.real(), a.imag());
    lcx sum = 0, zn = 1;
    for (int n = 0; n < 5000; ++n) {
        lcx base = aa + static_cast<long double>(n);
        lcx lg = std::log(base);
        lcx term = zn * std::exp(-ss * lg);
        if (ds)
            term *= -lg;
        sum += term;
        if (std::abs(term) < 1e-22L * std::abs(sum) && n > 10)
            break;
        zn *= zz;
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

// Phi at z = e^(2 pi i p/q) as a finite combination of Hurwitz zeta values.
cx root_of_unity_oracle(int p, int q, cx s, cx a)
{
    cx z = std::polar(1.0, 2.0 * pi * p / q);
    cx sum = 0.0, zr = 1.0;
    for (int r = 0; r < q; ++r) {
        sum += zr * hurwitz_zeta(s, (a + double(r)) / double(q));
        zr *= z;
    }
    return cpow(double(q), -s) * sum;
}

cx richardson_ds(cx z, cx s, cx a)
{
    auto d = [&](double h) { return (lerch_phi(z, s + h, a) - lerch_phi(z, s - h, a)) / (2.0 * h); };
    double h = 1e-3;
    return (4.0 * d(h / 2) - d(h)) / 3.0;
}

}  // namespace

TEST(Lerch, ZeroArgumentLeavesFirstTerm)
{
    cx s{1.7, 0.4}, a{0.8, -0.3};
    EXPECT_LT(rel_err(lerch_phi(0.0, s, a), cpow(a, -s)), 1e-15);
    EXPECT_LT(rel_err(lerch_phi_ds(0.0, s, a), -clog(a) * cpow(a, -s)), 1e-14);
}

TEST(Lerch, ClassicalValues)
{
    double ln2 = std::log(2.0);
    EXPECT_LT(rel_err(lerch_phi(0.5, 2.0, 1.0), pi * pi / 6.0 - ln2 * ln2), 1e-14);
    EXPECT_LT(rel_err(lerch_phi(-1.0, 1.0, 0.5), pi / 2.0), 1e-12);
    EXPECT_LT(rel_err(lerch_phi_ds(0.5, 2.0, 1.0), direct_sum(0.5, 2.0, 1.0, true)), 1e-13);
}

TEST(Lerch, DerivativeOnTheUnitCircleAtZeroOrder)
{
    // the point recurs in the Catalan-constant closed forms
    cx got = lerch_phi_ds(-1.0, 0.0, 0.5);
    EXPECT_LT(rel_err(got, richardson_ds(-1.0, 0.0, 0.5)), 1e-7);
}

TEST(Lerch, MatchesDirectSumInsideTheDisk)
{
    Gen g(41);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        cx z = g.disk(0.9);
        cx s = g.complex(1.1, 4.0, -3.0, 3.0);
        cx a = g.complex(0.2, 5.0, -2.0, 2.0);
        double e = rel_err(lerch_phi(z, s, a), direct_sum(z, s, a));
        worst = std::max(worst, e);
        ASSERT_LT(e, 1e-10) << z << " " << s << " " << a;
    }
    RecordProperty("worst_rel_err", std::to_string(worst));
}

TEST(Lerch, DerivativeMatchesRichardson)
{
    Gen g(43);
    for (int i = 0; i < 100; ++i) {
        cx z = g.coin() ? g.disk(0.95) : std::polar(1.0, g.uniform(0.2, 2 * pi - 0.2));
        cx s = g.complex(-1.5, 3.0, -2.0, 2.0);
        cx a = g.complex(0.3, 4.0, -1.5, 1.5);
        cx got = lerch_phi_ds(z, s, a);
        ASSERT_LT(rel_err(got, richardson_ds(z, s, a)), 1e-6) << z << " " << s << " " << a;
    }
}

TEST(Lerch, ContiguousRelation)
{
    Gen g(47);
    for (int i = 0; i < 200; ++i) {
        cx z = g.disk(0.99);
        cx s = g.complex(-3.0, 4.0, -3.0, 3.0);
        cx a = g.complex(0.2, 5.0, -2.0, 2.0);
        cx lhs = lerch_phi(z, s, a);
        cx rhs = z * lerch_phi(z, s, a + 1.0) + cpow(a, -s);
        ASSERT_LT(std::abs(lhs - rhs), 1e-9 * std::max(1.0, std::abs(lhs))) << z << " " << s << " " << a;
    }
}

TEST(Lerch, RootsOfUnityAgreeWithHurwitzCombination)
{
    Gen g(53);
    const std::pair<int, int> roots[] = {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {3, 4}, {1, 6}, {5, 6}};
    for (int i = 0; i < 60; ++i) {
        auto [p, q] = roots[i % 7];
        cx s = g.complex(-2.5, 4.0, -3.0, 3.0);
        if (std::abs(s - 1.0) < 0.05)
            continue;
        cx a = g.complex(0.2, 3.0, -1.0, 1.0);
        cx z = std::polar(1.0, 2.0 * pi * p / q);
        ASSERT_LT(rel_err(lerch_phi(z, s, a), root_of_unity_oracle(p, q, s, a)), 1e-8)
            << p << "/" << q << " " << s << " " << a;
    }
}

TEST(Lerch, NonpositiveIntegerOrderClosedForms)
{
    Gen g(59);
    for (int i = 0; i < 100; ++i) {
        cx z = g.complex(-3.0, 3.0, -3.0, 3.0);
        if (std::abs(1.0 - z) < 0.1)
            continue;
        cx a = g.complex(-2.0, 3.0, -2.0, 2.0);
        cx w = 1.0 - z;
        cx sk1 = z / (w * w), sk2 = z * (1.0 + z) / (w * w * w), sk3 = z * (1.0 + 4.0 * z + z * z) / (w * w * w * w);
        cx want[4] = {1.0 / w, a / w + sk1, a * a / w + 2.0 * a * sk1 + sk2,
                      a * a * a / w + 3.0 * a * a * sk1 + 3.0 * a * sk2 + sk3};
        for (int n = 0; n <= 3; ++n)
            ASSERT_LT(rel_err(lerch_phi(z, double(-n), a), want[n]), 1e-10) << n << " " << z << " " << a;
    }
}

TEST(Lerch, PolylogConsistency)
{
    Gen g(61);
    for (int i = 0; i < 100; ++i) {
        cx z = g.disk(0.99);
        cx s = g.complex(-2.0, 4.0, -2.0, 2.0);
        ASSERT_LT(rel_err(polylog(s, z), z * lerch_phi(z, s, 1.0)), 1e-9);
    }
    EXPECT_LT(rel_err(polylog(2.0, 1.0), pi * pi / 6.0), 1e-13);
    EXPECT_LT(rel_err(polylog(1.0, 0.5), std::log(2.0)), 1e-14);
    EXPECT_LT(rel_err(polylog(0.0, 1.0 / 3.0), 0.5), 1e-14);
    EXPECT_THROW(polylog(1.0, 1.0), DivergenceError);
}

TEST(Lerch, DilogarithmOnTheUnitCircle)
{
    for (double th : {0.3, 1.0, 2.0, 3.0, 4.5, 6.0}) {
        cx li = polylog(2.0, std::polar(1.0, th));
        EXPECT_NEAR(li.real(), pi * pi / 6.0 - th * (2 * pi - th) / 4.0, 1e-10) << th;
    }
}

TEST(Lerch, RegimeClassificationAndErrors)
{
    EXPECT_EQ(classify({0.3, 2.0, 1.0}), LerchRegime::direct_series);
    EXPECT_EQ(classify({-1.0, 2.0, 1.0}), LerchRegime::boundary_expansion);
    EXPECT_EQ(classify({3.0, -2.0, 1.0}), LerchRegime::nonpositive_integer);
    EXPECT_EQ(classify({1.0, 3.0, 1.0}), LerchRegime::hurwitz);
    EXPECT_THROW(lerch_phi(1.0, 0.5, 1.0), DivergenceError);
    EXPECT_THROW(lerch_phi(2.0, 0.5, 1.0), UnsupportedRegime);
}

TEST(LerchTransformation, ResidualIsSmall)
{
    struct Case {
        cx m, v, a, b, k;
    };
    const Case cases[] = {
        {0.5, 2.0, 1.0, 1.0, 0.0},
        {1.0 / 3.0, 3.0, 2.0, 1.0, 1.0},
        {1.0, 2.0, 1.0, 1.0, 1.5},
        {1.2, 2.5, 1.3, 0.7, 1.5},
    };
    for (const auto& c : cases) {
        auto [lhs, rhs] = lerch_transformation_sides(c.m, c.v, c.a, c.b, c.k);
        EXPECT_LE(lerch_transformation_check(c.m, c.v, c.a, c.b, c.k), 1e-8 * (1.0 + std::abs(lhs)))
            << c.m << " " << c.v << " " << lhs << " " << rhs;
    }
    EXPECT_THROW(lerch_transformation_check(0.5, 0.8, 1.0, 1.0, 0.0), DomainError);
}
