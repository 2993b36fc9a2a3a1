#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "logint/core.hpp"
#include "logint/special.hpp"

namespace logint {

using BigInt = boost::multiprecision::cpp_int;

enum class StirlingConvention { unsigned_, signed_ };

inline constexpr int stirling_n_max = 64;

// Triangle of Stirling numbers of the first kind, built once and read-only
// afterwards.
class StirlingTable {
public:
    explicit StirlingTable(int n_max = stirling_n_max) : n_max_(n_max)
    {
        if (n_max < 0 || n_max > stirling_n_max)
            throw RangeError("StirlingTable: n_max out of range");
        rows_.resize(n_max + 1);
        rows_[0] = {BigInt(1)};
        for (int n = 0; n < n_max; ++n) {
            std::vector<BigInt> next(n + 2, BigInt(0));
            for (int k = 0; k <= n; ++k) {
                next[k] += rows_[n][k] * n;  // c(n+1,k) = n c(n,k) + c(n,k-1)
                next[k + 1] += rows_[n][k];
            }
            rows_[n + 1] = std::move(next);
        }
    }

    int n_max() const { return n_max_; }

    BigInt get(int n, int j, StirlingConvention conv) const
    {
        if (n < 0 || j < 0 || n > n_max_)
            throw RangeError("stirling1: index out of range");
        if (j > n)
            return BigInt(0);
        BigInt v = rows_[n][j];
        if (conv == StirlingConvention::signed_ && ((n - j) % 2 != 0))
            v = -v;
        return v;
    }

    const std::vector<BigInt>& row(int n) const
    {
        if (n < 0 || n > n_max_)
            throw RangeError("stirling1: row out of range");
        return rows_[n];
    }

private:
    int n_max_;
    std::vector<std::vector<BigInt>> rows_;
};

inline const StirlingTable& stirling_table()
{
    static const StirlingTable table;
    return table;
}

inline BigInt stirling1(int n, int j, StirlingConvention conv = StirlingConvention::signed_)
{
    if (j > n)
        throw RangeError("stirling1: j > n");
    return stirling_table().get(n, j, conv);
}

inline double stirling1_d(int n, int j, StirlingConvention conv = StirlingConvention::signed_)
{
    if (j > n)
        return 0.0;
    return stirling_table().get(n, j, conv).convert_to<double>();
}

// coefficients of x(x+1)...(x+n-1) in ascending powers, by direct polynomial
// multiplication
inline std::vector<BigInt> rising_factorial_expand(int n)
{
    if (n < 0 || n > stirling_n_max)
        throw RangeError("rising_factorial_expand: n out of range");
    std::vector<BigInt> c{BigInt(1)};
    for (int i = 0; i < n; ++i) {
        std::vector<BigInt> next(c.size() + 1, BigInt(0));
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] += c[k] * i;
        }
        c = std::move(next);
    }
    return c;
}

inline cx pochhammer(cx x, int n)
{
    if (n < 0)
        throw RangeError("pochhammer: negative integer length");
    cx r{1.0, 0.0};
    for (int i = 0; i < n; ++i)
        r *= x + static_cast<double>(i);
    return r;
}

// Gamma-ratio form Gamma(x+n)/Gamma(x) for complex n.
inline cx pochhammer(cx x, cx n)
{
    if (is_integer(n) && n.real() >= 0.0 && n.real() <= 1e6)
        return pochhammer(x, static_cast<int>(std::lround(n.real())));
    if (detail::nonpositive_integer(x + n))
        throw PoleError("pochhammer: pole of Gamma(x+n)", x + n);
    if (detail::nonpositive_integer(x))
        return {0.0, 0.0};
    return checked(cexp(log_gamma(x + n) - log_gamma(x)), "pochhammer");
}

inline cx binom(cx x, int n)
{
    if (n < 0)
        throw RangeError("binom: negative lower index");
    cx r = pochhammer(x - static_cast<double>(n) + 1.0, n);
    for (int i = 2; i <= n; ++i)
        r /= static_cast<double>(i);
    return r;
}

inline double factorial(int n)
{
    if (n < 0)
        throw RangeError("factorial: negative argument");
    return std::tgamma(n + 1.0);
}

}  // namespace logint
