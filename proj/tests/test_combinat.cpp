#include <gtest/gtest.h>

#include "logint/combinat.hpp"
#include "support.hpp"

using namespace logint;
using testing_support::Gen;
using testing_support::rel_err;

TEST(Stirling, BaseCases)
{
    EXPECT_EQ(stirling1(0, 0), 1);
    EXPECT_EQ(stirling1(3, 3), 1);
    EXPECT_EQ(stirling1(4, 2, StirlingConvention::unsigned_), 11);
    EXPECT_EQ(stirling1(4, 2, StirlingConvention::signed_), 11);
    EXPECT_EQ(stirling1(4, 1, StirlingConvention::signed_), -6);
    EXPECT_EQ(stirling1(5, 0), 0);
    EXPECT_THROW(stirling1(2, 3), RangeError);
    EXPECT_THROW(stirling1(65, 1), RangeError);
    EXPECT_THROW(stirling1(-1, 0), RangeError);
}

TEST(Stirling, RecurrenceAndRowSums)
{
    using U = StirlingConvention;
    BigInt fact = 1;
    for (int n = 0; n < 64; ++n) {
        if (n > 0)
            fact *= n;
        BigInt sum = 0;
        for (int k = 0; k <= n; ++k)
            sum += stirling1(n, k, U::unsigned_);
        ASSERT_EQ(sum, fact) << n;
        for (int k = 1; k <= n + 1; ++k) {
            BigInt rhs = BigInt(n) * (k <= n ? stirling1(n, k, U::unsigned_) : BigInt(0)) +
                         stirling1(n, k - 1, U::unsigned_);
            ASSERT_EQ(stirling1(n + 1, k, U::unsigned_), rhs);
        }
    }
}

TEST(Stirling, SignedIsAlternatingUnsigned)
{
    for (int n = 0; n <= 64; ++n)
        for (int j = 0; j <= n; ++j) {
            BigInt u = stirling1(n, j, StirlingConvention::unsigned_);
            BigInt s = stirling1(n, j, StirlingConvention::signed_);
            ASSERT_EQ(s, (n - j) % 2 ? BigInt(-u) : u);
        }
}

TEST(Stirling, RowsMatchRisingFactorialExpansion)
{
    for (int n = 0; n <= 20; ++n) {
        auto c = rising_factorial_expand(n);
        ASSERT_EQ(c.size(), static_cast<std::size_t>(n + 1));
        for (int j = 0; j <= n; ++j)
            ASSERT_EQ(c[j], stirling1(n, j, StirlingConvention::unsigned_)) << n << "," << j;
    }
}

TEST(Stirling, ExpansionExamples)
{
    EXPECT_EQ(rising_factorial_expand(0), std::vector<BigInt>{1});
    EXPECT_EQ(rising_factorial_expand(1), (std::vector<BigInt>{0, 1}));
    EXPECT_EQ(rising_factorial_expand(3), (std::vector<BigInt>{0, 2, 3, 1}));
    EXPECT_THROW(rising_factorial_expand(65), RangeError);
}

TEST(Stirling, DoubleConversionOutsideTriangle)
{
    EXPECT_EQ(stirling1_d(3, 5), 0.0);
    EXPECT_EQ(stirling1_d(6, 3, StirlingConvention::signed_), -225.0);
}

TEST(Pochhammer, Examples)
{
    EXPECT_EQ(pochhammer(cx(2.5, 1.0), 0), cx(1.0));
    EXPECT_LT(rel_err(pochhammer(1.0, 6), 720.0), 1e-15);
    cx x{2.0, 3.0};
    cx direct = x * (x + 1.0) * (x + 2.0);
    EXPECT_LT(rel_err(pochhammer(x, 3), direct), 1e-15);
    EXPECT_LT(rel_err(pochhammer(x, cx(3.0 + 1e-300, 0.0)), direct), 1e-15);
    EXPECT_THROW(pochhammer(x, -1), RangeError);
}

TEST(Pochhammer, IntegerAndGammaRatioPathsAgree)
{
    Gen g(29);
    for (int i = 0; i < 200; ++i) {
        cx x = g.complex(0.2, 6.0, -4.0, 4.0);
        int n = g.integer(0, 12);
        cx ratio = std::exp(log_gamma(x + double(n)) - log_gamma(x));
        ASSERT_LT(rel_err(pochhammer(x, n), ratio), 1e-11) << x << " " << n;
    }
}

TEST(Pochhammer, SplitProperty)
{
    Gen g(31);
    for (int i = 0; i < 300; ++i) {
        cx x = g.complex(-3.0, 3.0, -3.0, 3.0);
        int m = g.integer(0, 16), n = g.integer(0, 16);
        cx lhs = pochhammer(x, m + n);
        cx rhs = pochhammer(x, m) * pochhammer(x + double(m), n);
        ASSERT_LT(rel_err(lhs, rhs), 1e-12) << x << " " << m << " " << n;
    }
}

TEST(Pochhammer, ComplexLengthPoleIsReported)
{
    EXPECT_THROW(pochhammer(cx(0.5), cx(-1.5)), PoleError);
    EXPECT_EQ(pochhammer(cx(-2.0), cx(0.5)), cx(0.0));
}

TEST(Binomial, Examples)
{
    EXPECT_EQ(binom(cx(3.3, 1.0), 0), cx(1.0));
    EXPECT_LT(rel_err(binom(5.0, 2), 10.0), 1e-15);
    EXPECT_LT(rel_err(binom(0.5, 3), 1.0 / 16.0), 1e-15);
    EXPECT_THROW(binom(1.0, -1), RangeError);
}

TEST(Binomial, PascalProperty)
{
    Gen g(37);
    for (int i = 0; i < 200; ++i) {
        cx x = g.complex(-5, 5, -2, 2);
        int n = g.integer(1, 15);
        cx lhs = binom(x + 1.0, n);
        cx rhs = binom(x, n) + binom(x, n - 1);
        ASSERT_LT(std::abs(lhs - rhs), 1e-10 * (1.0 + std::abs(lhs))) << x << " " << n;
    }
}
