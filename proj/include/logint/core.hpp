#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

namespace logint {

using cx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr cx I{0.0, 1.0};

// Error hierarchy. Every numerical failure surfaces as one of these; NaN and
// infinity are never returned from a successful call.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error {
    using Error::Error;
};

struct PoleError : Error {
    cx location;
    PoleError(const std::string& what, cx at) : Error(what), location(at) {}
};

struct DivergenceError : Error {
    using Error::Error;
};

struct UnsupportedRegime : Error {
    using Error::Error;
};

struct NonConvergence : Error {
    cx partial;
    NonConvergence(const std::string& what, cx p) : Error(what), partial(p) {}
};

struct IntegrandFailure : Error {
    double abscissa;
    IntegrandFailure(const std::string& what, double x) : Error(what), abscissa(x) {}
};

struct RangeError : Error {
    using Error::Error;
};

inline std::string to_string(cx z)
{
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (std::signbit(z.imag()) ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

inline bool finite(cx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline cx checked(cx z, const char* where)
{
    if (!finite(z))
        throw DomainError(std::string(where) + ": non-finite result " + to_string(z));
    return z;
}

// Principal logarithm with Im in (-pi, pi]. A negative real argument carrying a
// signed zero imaginary part still maps to +i*pi.
inline cx clog(cx z)
{
    if (z.real() == 0.0 && z.imag() == 0.0)
        throw DomainError("clog: zero argument");
    double arg = (z.imag() == 0.0) ? (z.real() < 0.0 ? pi : 0.0) : std::atan2(z.imag(), z.real());
    return {std::log(std::abs(z)), arg};
}

// exp that never produces inf*0 = NaN for purely real overflow.
inline cx cexp(cx z)
{
    double r = std::exp(z.real());
    if (z.imag() == 0.0)
        return {r, 0.0};
    if (r == 0.0)
        return {0.0, 0.0};
    return {r * std::cos(z.imag()), r * std::sin(z.imag())};
}

// z^w = exp(w log z) on the principal branch, with 0^0 = 1.
inline cx cpow(cx z, cx w)
{
    if (z.real() == 0.0 && z.imag() == 0.0) {
        if (w.real() == 0.0 && w.imag() == 0.0)
            return {1.0, 0.0};
        if (w.real() > 0.0)
            return {0.0, 0.0};
        throw DomainError("cpow: zero base with exponent " + to_string(w));
    }
    return cexp(w * clog(z));
}

inline cx cpow(cx z, int n)
{
    if (n == 0)
        return {1.0, 0.0};
    if (z == cx{0.0, 0.0}) {
        if (n > 0)
            return {0.0, 0.0};
        throw DomainError("cpow: zero base with negative integer exponent");
    }
    cx base = n > 0 ? z : 1.0 / z;
    unsigned m = static_cast<unsigned>(n > 0 ? n : -n);
    cx r{1.0, 0.0};
    while (m) {
        if (m & 1u)
            r *= base;
        base *= base;
        m >>= 1;
    }
    return r;
}

inline bool is_integer(cx z, double tol = 0.0)
{
    return z.imag() == 0.0 && std::abs(z.real() - std::round(z.real())) <= tol;
}

// Compensated (Neumaier) summation, componentwise.
class CompensatedSum {
public:
    void add(cx x)
    {
        add_part(x.real(), re_, cre_);
        add_part(x.imag(), im_, cim_);
    }
    CompensatedSum& operator+=(cx x)
    {
        add(x);
        return *this;
    }
    cx value() const { return {re_ + cre_, im_ + cim_}; }

private:
    static void add_part(double x, double& s, double& c)
    {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double re_ = 0, im_ = 0, cre_ = 0, cim_ = 0;
};

}  // namespace logint
