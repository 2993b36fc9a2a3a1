#pragma once

// Identity families: a closed-form right-hand side, the matching integrand over
// (0, inf), where that integrand is singular on the path, and the named validity
// conditions that keep both sides meaningful.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "logint/core.hpp"
#include "logint/quad.hpp"
#include "logint/rhs.hpp"

namespace logint {

struct CatalogError : Error {
    using Error::Error;
};

// ---------------------------------------------------------------- parameters

class ParamSet {
public:
    ParamSet() = default;
    ParamSet(std::initializer_list<std::pair<const std::string, cx>> init) : values_(init) {}

    bool has(const std::string& name) const { return values_.count(name) != 0; }
    void set(const std::string& name, cx v) { values_[name] = v; }

    cx operator[](const std::string& name) const
    {
        auto it = values_.find(name);
        if (it == values_.end())
            throw DomainError("missing parameter '" + name + "'");
        return it->second;
    }

    double real(const std::string& name) const
    {
        cx v = (*this)[name];
        if (v.imag() != 0.0)
            throw DomainError("parameter '" + name + "' must be real, got " + to_string(v));
        return v.real();
    }

    int integer(const std::string& name) const
    {
        cx v = (*this)[name];
        if (!is_integer(v) || std::abs(v.real()) > 1e6)
            throw DomainError("parameter '" + name + "' must be an integer, got " + to_string(v));
        return static_cast<int>(std::lround(v.real()));
    }

    const std::map<std::string, cx>& values() const { return values_; }

    // overrides win; keys absent from `base` are allowed only if listed in `symbols`
    static ParamSet merge(const ParamSet& base, const ParamSet& overrides) {
        ParamSet r = base;
        for (const auto& [k, v] : overrides.values_)
            r.values_[k] = v;
        return r;
    }

    bool operator==(const ParamSet& o) const { return values_ == o.values_; }

private:
    std::map<std::string, cx> values_;
};

// Deterministic uniform draws; the bit-level recipe is fixed so draws agree
// across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    double uniform(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    int integer(int lo, int hi) { return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    bool coin() { return (eng_() >> 63) != 0; }

private:
    std::mt19937_64 eng_;
};

// ------------------------------------------------------------- singularities

struct Singularities {
    std::vector<double> splits;  // branch points and kinks of the integrand
    std::vector<Pole> poles;     // on-path poles handled by principal value

    void split(double x)
    {
        if (std::isfinite(x) && x > 0.0)
            splits.push_back(x);
    }
    void pole(double x, int order)
    {
        if (!(std::isfinite(x) && x > 0.0) || order <= 0)
            return;
        for (auto& p : poles)
            if (std::abs(p.location - x) <= 1e-12 * x) {
                p.order += order;
                return;
            }
        poles.push_back(Pole{x, order, Side::none});
    }
    // sorted, deduplicated, splits that coincide with a pole dropped
    void normalize()
    {
        std::sort(poles.begin(), poles.end(), [](const Pole& a, const Pole& b) { return a.location < b.location; });
        std::sort(splits.begin(), splits.end());
        std::vector<double> s;
        for (double x : splits) {
            bool dup = !s.empty() && std::abs(s.back() - x) <= 1e-12 * x;
            bool at_pole = std::any_of(poles.begin(), poles.end(),
                                       [&](const Pole& p) { return std::abs(p.location - x) <= 1e-12 * x; });
            if (!dup && !at_pole)
                s.push_back(x);
        }
        splits = std::move(s);
    }
};

namespace detail {

// positive real value of z, or 0 if z is not (numerically) on the positive axis
inline double positive_real(cx z)
{
    if (!finite(z) || !(z.real() > 0.0) || std::abs(z.imag()) > 1e-13 * std::abs(z))
        return 0.0;
    return z.real();
}

// zeros of log(a x) on the path
inline void log_scale_split(Singularities& s, cx a)
{
    if (double r = positive_real(a))
        s.split(1.0 / r);
}

// x > 0 with b + c x^v + i = 0 for some i in [0, n]
inline void pochhammer_poles(Singularities& s, cx b, cx c, cx v, int n)
{
    double vr = positive_real(v);
    if (!vr)
        return;
    for (int i = 0; i <= n; ++i)
        if (double r = positive_real(-(b + double(i)) / c))
            s.pole(std::pow(r, 1.0 / vr), 1);
}

// x > 0 with 1 + b x^v = 0, of multiplicity `order`
inline void power_poles(Singularities& s, cx b, cx v, int order)
{
    double vr = positive_real(v);
    if (!vr)
        return;
    if (double r = positive_real(-1.0 / b))
        s.pole(std::pow(r, 1.0 / vr), order);
}

// e^z - 1 without cancellation for small z
inline cx cexpm1(cx z)
{
    double a = z.real(), b = z.imag();
    if (b == 0.0)
        return {std::expm1(a), 0.0};
    double sh = std::sin(0.5 * b);
    return {std::expm1(a) * std::cos(b) - 2.0 * sh * sh, std::exp(a) * std::sin(b)};
}

// w^k with the integer path for integral k, so 0^0 = 1 and negative bases stay real
inline cx powk(cx w, cx k)
{
    if (is_integer(k) && std::abs(k.real()) <= 64.0)
        return cpow(w, static_cast<int>(std::lround(k.real())));
    if (w == cx{0.0, 0.0}) {
        if (k.real() > 0.0)
            return {0.0, 0.0};
        throw PoleError("powk: zero base with exponent " + to_string(k), 0.0);
    }
    return cexp(k * clog(w));
}

// log of an argument that vanishes only where a node rounds onto a branch
// point; there it stands in for the rounding-sized distance to that point
inline cx log_near_branch(cx z) { return clog(z == cx{0.0, 0.0} ? cx{1e-17, 0.0} : z); }

// An integrand value kept as e^expo * val. Each factor that grows or decays
// exponentially in log x puts its large part into the exponent, so products
// stay finite over the whole tail even when the factors alone would not.
class Term {
public:
    explicit Term(const Abscissa& p) : L_(p.logx), x_(p.x) {}

    cx L() const { return L_; }
    cx x() const { return x_; }
    cx logs(cx a) const { return clog(a) + L_; }                   // log(a x)
    cx loglog(cx a) const { return log_near_branch(logs(a)); }     // log(log(a x))

    Term& mul(cx v) { val_ *= v; return *this; }
    Term& div(cx v) { val_ /= v; return *this; }
    Term& xp(cx w) { expo_ += w * L_; return *this; }  // x^w

    // (A + e^lg)^pw; for non-integer pw both forms agree only while
    // A + e^lg stays off the negative axis, which holds where it is used
    Term& binom(cx A, cx lg, cx pw)
    {
        bool ipw = is_integer(pw) && std::abs(pw.real()) <= 1e6;
        auto raise = [&](cx z) { return ipw ? cpow(z, static_cast<int>(std::lround(pw.real()))) : cpow(z, pw); };
        if (A == cx{0.0, 0.0} || lg.real() > std::log(std::abs(A))) {
            expo_ += pw * lg;
            val_ *= raise(1.0 + A * cexp(-lg));
        } else {
            val_ *= raise(A + cexp(lg));
        }
        return *this;
    }
    Term& lin(cx A, cx c, cx w, cx pw) { return binom(A, clog(c) + w * L_, pw); }  // (A + c x^w)^pw
    Term& one_plus(cx b, cx w, cx pw) { return lin(1.0, b, w, pw); }               // (1 + b x^w)^pw

    // (b + c x^v)_{1+n}, divided out
    Term& over_poch(cx b, cx c, cx v, int n)
    {
        for (int i = 0; i <= n; ++i)
            lin(b + double(i), c, v, -1.0);
        return *this;
    }

    // (x^w - 1)^pw
    Term& xm1(cx w, int pw)
    {
        cx z = w * L_;
        if (z.real() > 0.0) {
            expo_ += double(pw) * z;
            val_ *= cpow(-cexpm1(-z), pw);
        } else {
            val_ *= cpow(cexpm1(z), pw);
        }
        return *this;
    }

    // x^s - x^m
    Term& diff(cx s, cx m)
    {
        cx d = (s - m) * L_;
        if (d.real() > 0.0) {
            expo_ += s * L_;
            val_ *= -cexpm1(-d);
        } else {
            expo_ += m * L_;
            val_ *= cexpm1(d);
        }
        return *this;
    }

    // (x^s - x^m) / log x, finite at x = 1
    Term& diff_over_log(cx s, cx m)
    {
        if (L_ == cx{0.0, 0.0})
            return mul(s - m);
        return diff(s, m).div(L_);
    }

    // (log x / (x^w - 1))^pw, finite at x = 1
    Term& log_over_xm1(cx w, int pw)
    {
        if (L_ == cx{0.0, 0.0})
            return mul(cpow(1.0 / w, pw));
        cx z = w * L_;
        if (z.real() > 0.0) {
            expo_ -= double(pw) * z;
            val_ *= cpow(L_ / -cexpm1(-z), pw);
        } else {
            val_ *= cpow(L_ / cexpm1(z), pw);
        }
        return *this;
    }

    cx value() const
    {
        if (val_ == cx{0.0, 0.0})
            return val_;
        return cexp(expo_) * val_;
    }

private:
    cx L_, x_;
    cx expo_{0.0, 0.0};
    cx val_{1.0, 0.0};
};

}  // namespace detail

// ---------------------------------------------------------------- conditions

// A named validity condition. Catalog entries list these by tag; the predicate
// is code, never data.
struct Condition {
    std::string tag;
    std::string text;
    std::function<bool(const ParamSet&)> holds;
};

namespace detail {

inline bool is_nonneg_int(const ParamSet& p, const char* k)
{
    cx v = p[k];
    return is_integer(v) && v.real() >= 0.0 && v.real() <= stirling_n_max;
}
inline bool is_pos_int(const ParamSet& p, const char* k) { return is_nonneg_int(p, k) && p[k].real() >= 1.0; }
inline bool is_real(cx z) { return z.imag() == 0.0; }
inline bool pos_real(cx z) { return z.imag() == 0.0 && z.real() > 0.0; }
inline bool off_positive_axis(cx z) { return !(z.imag() == 0.0 && z.real() >= 0.0); }

inline std::vector<Condition> build_conditions()
{
    using P = const ParamSet&;
    auto re = [](P p, const char* k) { return p[k].real(); };
    std::vector<Condition> c = {
        {"n_nonnegative_integer", "n is an integer with 0 <= n <= 64", [](P p) { return is_nonneg_int(p, "n"); }},
        {"n_positive_integer", "n is an integer with 1 <= n <= 64", [](P p) { return is_pos_int(p, "n"); }},
        {"n_at_most_one", "n <= 1 (on-path pole of order n+1 <= 2)", [](P p) { return p["n"].real() <= 1.0; }},
        {"m_positive_integer", "m is an integer with 1 <= m <= 64", [](P p) { return is_pos_int(p, "m"); }},
        {"re_m_positive", "Re(m) > 0", [=](P p) { return re(p, "m") > 0.0; }},
        {"re_s_positive", "Re(s) > 0", [=](P p) { return re(p, "s") > 0.0; }},
        {"re_v_positive", "Re(v) > 0", [=](P p) { return re(p, "v") > 0.0; }},
        {"re_v_above_one", "Re(v) > 1", [=](P p) { return re(p, "v") > 1.0; }},
        {"re_m_in_unit_interval", "0 < Re(m) < 1", [=](P p) { return re(p, "m") > 0.0 && re(p, "m") < 1.0; }},
        {"pochhammer_decay", "Re(m) < (n+1) Re(v)",
         [=](P p) { return re(p, "m") < (re(p, "n") + 1.0) * re(p, "v"); }},
        {"pochhammer_difference_decay", "-1 < Re(m), Re(s) and max(Re(m), Re(s)) + 1 < (n+1) Re(v)",
         [=](P p) {
             double lo = std::min(re(p, "m"), re(p, "s")), hi = std::max(re(p, "m"), re(p, "s"));
             return lo > -1.0 && hi + 1.0 < (re(p, "n") + 1.0) * re(p, "v");
         }},
        {"positive_log_scale", "a is a positive real number", [](P p) { return pos_real(p["a"]); }},
        {"log_scale_not_one", "a != 1", [](P p) { return p["a"] != cx{1.0, 0.0}; }},
        {"re_a_positive", "Re(a) > 0", [=](P p) { return re(p, "a") > 0.0; }},
        {"im_a_positive", "Im(a) > 0", [](P p) { return p["a"].imag() > 0.0; }},
        {"a_upper_half_plane_or_negative", "Im(a) > 0, or a is a negative real number",
         [](P p) { cx a = p["a"]; return a.imag() > 0.0 || (a.imag() == 0.0 && a.real() < 0.0); }},
        {"b_off_negative_axis", "|arg(b)| < pi", [](P p) { cx b = p["b"]; return !(b.imag() == 0.0 && b.real() <= 0.0); }},
        {"b_positive_real", "b is a positive real number", [](P p) { return pos_real(p["b"]); }},
        {"c_nonzero", "c != 0", [](P p) { return p["c"] != cx{0.0, 0.0}; }},
        {"re_b_positive", "Re(b) > 0", [=](P p) { return re(p, "b") > 0.0; }},
        {"re_c_positive", "Re(c) > 0", [=](P p) { return re(p, "c") > 0.0; }},
        {"re_k_nonnegative", "Re(k) >= 0", [=](P p) { return re(p, "k") >= 0.0; }},
        {"re_k_positive", "Re(k) > 0", [=](P p) { return re(p, "k") > 0.0; }},
        {"re_k_above_n", "Re(k) > n", [=](P p) { return re(p, "k") > re(p, "n"); }},
        {"power_decay", "Re(m) < (n+1) Re(v)", [=](P p) { return re(p, "m") < (re(p, "n") + 1.0) * re(p, "v"); }},
        {"log_square_decay", "Re(v) > 0 and |Re(a)| Re(v) < 1 (decay at both ends)",
         [=](P p) { return re(p, "v") > 0.0 && std::abs(re(p, "a")) * re(p, "v") < 1.0; }},
        {"a_nonzero", "a != 0", [](P p) { return p["a"] != cx{0.0, 0.0}; }},
        {"abs_b_below_one", "b is real with |b| < 1", [](P p) { return is_real(p["b"]) && std::abs(p["b"].real()) < 1.0; }},
        {"a_not_on_positive_axis", "|arg(-a)| < pi", [](P p) { return off_positive_axis(p["a"]); }},
        {"s_below_n", "0 < Re(s) < n", [=](P p) { return re(p, "s") > 0.0 && re(p, "s") < re(p, "n"); }},
        {"alpha_in_range", "0 < Re(alpha) < m Re(mu)",
         [=](P p) { return re(p, "alpha") > 0.0 && re(p, "alpha") < re(p, "m") * re(p, "mu"); }},
        {"re_mu_positive", "Re(mu) > 0", [=](P p) { return re(p, "mu") > 0.0; }},
        {"z_sector", "Re(mu) |arg z| < pi", [=](P p) { return re(p, "mu") * std::abs(std::arg(p["z"])) < pi; }},
        {"a_below_n_plus_one", "0 < Re(a) < n+1", [=](P p) { return re(p, "a") > 0.0 && re(p, "a") < re(p, "n") + 1.0; }},
        {"pq_in_range_4n", "0 < Re(p), Re(q) < 4n", [=](P p) {
             double lim = 4.0 * re(p, "n");
             return re(p, "p") > 0.0 && re(p, "q") > 0.0 && re(p, "p") < lim && re(p, "q") < lim;
         }},
        {"pq_in_range_2n", "-1 < Re(p), Re(q) < 2n - 3", [=](P p) {
             double lim = 2.0 * re(p, "n") - 3.0;
             return re(p, "p") > -1.0 && re(p, "q") > -1.0 && re(p, "p") < lim && re(p, "q") < lim;
         }},
        {"pq_in_range_2n_shifted", "0 < Re(p), Re(q) < 2n - 2", [=](P p) {
             double lim = 2.0 * re(p, "n") - 2.0;
             return re(p, "p") > 0.0 && re(p, "q") > 0.0 && re(p, "p") < lim && re(p, "q") < lim;
         }},
        {"geometric_decay", "-1 < Re(m) < Re(p+q+2s) - 1",
         [=](P p) { return re(p, "m") > -1.0 && re(p, "m") < re(p, "p") + re(p, "q") + 2.0 * re(p, "s") - 1.0; }},
        {"pqs_positive", "Re(p), Re(q), Re(s) > 0",
         [=](P p) { return re(p, "p") > 0.0 && re(p, "q") > 0.0 && re(p, "s") > 0.0; }},
        {"unit_polynomial_decay", "0 < Re(m) < (n+1) Re(v)",
         [=](P p) { return re(p, "m") > 0.0 && re(p, "m") < (re(p, "n") + 1.0) * re(p, "v"); }},
        {"unit_difference_decay", "0 < Re(p), Re(q) and max(Re(p), Re(q)) + Re(s) < (n+1) Re(v)",
         [=](P p) {
             return re(p, "p") > 0.0 && re(p, "q") > 0.0 &&
                    std::max(re(p, "p"), re(p, "q")) + re(p, "s") < (re(p, "n") + 1.0) * re(p, "v");
         }},
        {"four_power_decay", "-1 < Re(p), Re(q) and max(Re(p), Re(q)) + Re(s) + 1 < (n+1) Re(v)",
         [=](P p) {
             return re(p, "p") > -1.0 && re(p, "q") > -1.0 &&
                    std::max(re(p, "p"), re(p, "q")) + re(p, "s") + 1.0 < (re(p, "n") + 1.0) * re(p, "v");
         }},
        {"polylog_scale_right_half", "Re((-b/c)^(-1/v)) > 0",
         [](P p) { return cpow(-p["b"] / p["c"], -1.0 / p["v"]).real() > 0.0; }},
        {"grobner_range", "0 < m < 2n+2 with m real",
         [](P p) { cx m = p["m"]; return m.imag() == 0.0 && m.real() > 0.0 && m.real() < 2.0 * p["n"].real() + 2.0; }},
        {"re_alpha_positive", "Re(alpha) > 0", [=](P p) { return re(p, "alpha") > 0.0; }},
        {"transformation_range", "Re(v) > 1", [=](P p) { return re(p, "v") > 1.0; }},
    };
    return c;
}

}  // namespace detail

inline const std::map<std::string, Condition>& conditions()
{
    static const std::map<std::string, Condition> table = [] {
        std::map<std::string, Condition> t;
        for (auto& c : detail::build_conditions())
            t.emplace(c.tag, c);
        return t;
    }();
    return table;
}

inline const Condition& condition(const std::string& tag)
{
    auto it = conditions().find(tag);
    if (it == conditions().end())
        throw CatalogError("unknown condition tag '" + tag + "'");
    return it->second;
}

// First violated condition, or empty. A predicate that throws (missing or
// malformed parameter) counts as violated.
inline std::string violated_condition(const std::vector<std::string>& tags, const ParamSet& p)
{
    for (const auto& t : tags) {
        const Condition& c = condition(t);
        bool ok = false;
        try {
            ok = c.holds(p);
        } catch (const Error&) {
            ok = false;
        }
        if (!ok)
            return c.tag + ": " + c.text;
    }
    return {};
}

// ------------------------------------------------------------------ families

using FamilyIntegrand = std::function<cx(const Abscissa&, const ParamSet&)>;

struct Family {
    std::string tag;
    std::string integrand_text;            // the left-hand side, for listings
    std::vector<std::string> symbols;      // parameters the family reads
    std::vector<std::string> conditions;   // always-on validity tags
    std::function<cx(const ParamSet&)> rhs;
    FamilyIntegrand integrand;             // empty when the left side is a closed expression
    std::function<cx(const ParamSet&)> lhs_closed;
    std::function<Singularities(const ParamSet&)> singularities;
    std::function<ParamSet(Rng&)> sampler;  // empty when the family has no sweep

    bool has_integral() const { return static_cast<bool>(integrand); }
};

namespace detail {

using P = const ParamSet&;
inline Singularities none(P) { return {}; }

inline std::vector<Family> build_families()
{
    std::vector<Family> f;
    using namespace rhs;
    using Q = const Abscissa&;

    // the general sums
    f.push_back({"pochhammer_log_power", "x^(m-1) log^k(a x) / (b + c x^v)_(1+n)", {"a", "b", "c", "v", "m", "k", "n"},
                 {"n_nonnegative_integer", "re_m_positive", "re_v_positive", "pochhammer_decay", "a_nonzero", "c_nonzero"},
                 [](P p) { return pochhammer_log_power(p["a"], p["b"], p["c"], p["v"], p["m"], p["k"], p.integer("n")); },
                 [](Q q, P p) {
                     Term t(q);
                     return t.xp(p["m"] - 1.0).mul(powk(t.logs(p["a"]), p["k"])).over_poch(p["b"], p["c"], p["v"], p.integer("n")).value();
                 },
                 {},
                 [](P p) {
                     Singularities s;
                     log_scale_split(s, p["a"]);
                     pochhammer_poles(s, p["b"], p["c"], p["v"], p.integer("n"));
                     return s;
                 },
                 [](Rng& r) {
                     ParamSet p;
                     int n = r.integer(0, 2);
                     double v = r.uniform(1.0, 3.0);
                     p.set("n", n);
                     p.set("v", v);
                     p.set("a", r.uniform(0.5, 2.0));
                     p.set("b", r.uniform(0.5, 2.0));
                     p.set("c", r.uniform(0.5, 2.0));
                     p.set("m", r.uniform(0.3, std::min(3.0, (n + 1) * v - 0.5)));
                     p.set("k", r.coin() ? cx(r.integer(0, 2)) : cx(r.uniform(0.0, 2.0)));
                     return p;
                 }});

    f.push_back({"polynomial_log_power", "x^(m-1) log^k(a x) / (1 + b x^v)^(n+1)", {"a", "b", "v", "m", "k", "n"},
                 {"n_nonnegative_integer", "re_m_positive", "re_v_positive", "power_decay", "a_nonzero"},
                 [](P p) { return polynomial_log_power(p["a"], p["b"], p["v"], p["m"], p["k"], p.integer("n")); },
                 [](Q q, P p) {
                     Term t(q);
                     return t.xp(p["m"] - 1.0).mul(powk(t.logs(p["a"]), p["k"])).one_plus(p["b"], p["v"], -1.0 - p["n"]).value();
                 },
                 {},
                 [](P p) {
                     Singularities s;
                     log_scale_split(s, p["a"]);
                     power_poles(s, p["b"], p["v"], p.integer("n") + 1);
                     return s;
                 },
                 [](Rng& r) {
                     ParamSet p;
                     int n = r.integer(0, 2);
                     double v = r.uniform(1.0, 3.0);
                     p.set("n", n);
                     p.set("v", v);
                     p.set("a", r.uniform(0.5, 2.0));
                     p.set("b", r.uniform(0.5, 2.0));
                     p.set("m", r.uniform(0.3, std::min(3.0, (n + 1) * v - 0.5)));
                     p.set("k", r.coin() ? cx(r.integer(0, 2)) : cx(r.uniform(0.0, 2.0)));
                     return p;
                 }});

    // log of a difference of squares
    auto diff_split = [](Singularities& s, cx a) {
        if (double r = positive_real(a)) {
            s.split(r);
            s.split(1.0 / r);
        }
    };
    auto log_diff_sq = [](const Term& t, cx la) { return log_near_branch(la * la - t.L() * t.L()); };
    // ((x^2 - 1)/2)_(1+n), divided out
    auto over_half_square = [](Term& t, int n) -> Term& {
        for (int i = 0; i <= n; ++i)
            t.lin(i - 0.5, 0.5, 2.0, -1.0);
        return t;
    };
    auto half_square_poles = [](Singularities& s, int n) {
        for (int i = 0; i <= n; ++i)
            if (double r = positive_real(cx(1.0 - 2.0 * i)))
                s.pole(std::sqrt(r), 1);
    };

    f.push_back({"log_difference_of_squares", "x^(m-1) log(log^2 a - log^2 x) / (b + c x^v)_(1+n)",
                 {"a", "b", "c", "v", "m", "n"},
                 {"n_nonnegative_integer", "re_m_positive", "re_v_positive", "pochhammer_decay", "c_nonzero"},
                 [](P p) { return log_difference_of_squares(p["a"], p["b"], p["c"], p["v"], p["m"], p.integer("n")); },
                 [=](Q q, P p) {
                     Term t(q);
                     cx l = log_diff_sq(t, clog(p["a"]));
                     return t.xp(p["m"] - 1.0).mul(l).over_poch(p["b"], p["c"], p["v"], p.integer("n")).value();
                 },
                 {},
                 [=](P p) {
                     Singularities s;
                     diff_split(s, p["a"]);
                     pochhammer_poles(s, p["b"], p["c"], p["v"], p.integer("n"));
                     return s;
                 },
                 {}});

    f.push_back({"log_difference_gamma", "log(log^2 a - log^2 x) / ((x^2 - 1)/2)_(1+n)", {"a", "n"},
                 {"n_nonnegative_integer", "re_a_positive"},
                 [](P p) { return log_difference_gamma(p["a"], p.integer("n")); },
                 [=](Q q, P p) {
                     Term t(q);
                     t.mul(log_diff_sq(t, clog(p["a"])));
                     return over_half_square(t, p.integer("n")).value();
                 },
                 {},
                 [=](P p) {
                     Singularities s;
                     diff_split(s, p["a"]);
                     half_square_poles(s, p.integer("n"));
                     return s;
                 },
                 {}});

    auto log_pi = [&](const char* tag, const char* text, cx (*value)(), double w) {
        f.push_back({tag, text, {}, {},
                     [value](P) { return value(); },
                     [=](Q q, P) {
                         Term t(q);
                         return t.mul(-log_diff_sq(t, pi)).xm1(w, -1).value();
                     },
                     {},
                     [](P) {
                         Singularities s;
                         s.split(std::exp(-pi));
                         s.split(std::exp(pi));
                         s.pole(1.0, 1);
                         return s;
                     },
                     {}});
    };
    log_pi("log_pi_quartic", "log(pi^2 - log^2 x) / (1 - x^4)", log_pi_quartic, 4.0);
    log_pi("log_pi_quadratic", "log(pi^2 - log^2 x) / (1 - x^2)", log_pi_quadratic, 2.0);

    f.push_back({"reciprocal_difference_digamma", "1 / ((log^2 a - log^2 x) ((x^2 - 1)/2)_(1+n))", {"a", "n"},
                 {"n_nonnegative_integer", "re_a_positive", "log_scale_not_one"},
                 [](P p) { return reciprocal_difference_digamma(p["a"], p.integer("n")); },
                 [=](Q q, P p) {
                     Term t(q);
                     cx la = clog(p["a"]);
                     t.div((la - t.L()) * (la + t.L()));
                     return over_half_square(t, p.integer("n")).value();
                 },
                 {},
                 [=](P p) {
                     Singularities s;
                     if (double r = positive_real(p["a"])) {
                         s.pole(r, 1);
                         s.pole(1.0 / r, 1);
                     }
                     half_square_poles(s, p.integer("n"));
                     return s;
                 },
                 {}});

    // Malmsten-type log(log) integrands
    f.push_back({"malmsten_pochhammer", "x^(m-1) log(log x) / (b + c x^v)_(1+n)", {"b", "c", "v", "m", "n"},
                 {"n_nonnegative_integer", "re_m_positive", "re_v_positive", "pochhammer_decay", "b_off_negative_axis",
                  "c_nonzero"},
                 [](P p) { return malmsten_pochhammer(p["b"], p["c"], p["v"], p["m"], p.integer("n")); },
                 [](Q q, P p) {
                     Term t(q);
                     return t.xp(p["m"] - 1.0).mul(t.loglog(1.0)).over_poch(p["b"], p["c"], p["v"], p.integer("n")).value();
                 },
                 {},
                 [](P p) {
                     Singularities s;
                     s.split(1.0);
                     pochhammer_poles(s, p["b"], p["c"], p["v"], p.integer("n"));
                     return s;
                 },
                 {}});

    f.push_back({"malmsten_double_pole", "x^(m-1) log(log(a x)) / (x^v - 1)^2", {"a", "v", "m"},
                 {"re_m_in_unit_interval", "re_v_above_one", "a_nonzero"},
                 [](P p) { return malmsten_double_pole(p["a"], p["v"], p["m"]); },
                 [](Q q, P p) {
                     Term t(q);
                     return t.xp(p["m"] - 1.0).mul(t.loglog(p["a"])).xm1(p["v"], -2).value();
                 },
                 {},
                 [](P p) {
                     Singularities s;
                     log_scale_split(s, p["a"]);
                     if (positive_real(p["v"]))
                         s.pole(1.0, 2);
                     return s;
                 },
                 {}});

    f.push_back({"log_power_unit_pole", "x^(m-1) log^k(a x) / (1 - x)^(n+1)", {"a", "m", "k", "n"},
                 {"n_nonnegative_integer", "n_at_most_one", "re_m_in_unit_interval", "a_upper_half_plane_or_negative"},
                 [](P p) { return log_power_unit_pole(p["a"], p["m"], p["k"], p.integer("n")); },
                 [](Q q, P p) {
                     Term t(q);
                     int n = p.integer("n");
                     return t.xp(p["m"] - 1.0).mul(powk(t.logs(p["a"]), p["k"]) * cpow(-1.0, n + 1)).xm1(1.0, -(n + 1)).value();
                 },
                 {},
                 [](P p) {
                     Singularities s;
                     log_scale_split(s, p["a"]);
                     s.pole(1.0, p.integer("n") + 1);
                     return s;
                 },
                 {}});

    f.push_back({"lerch_transformation",
                 "Phi(e^(i m pi/v), -k, 1/2 - i v log(a b^(-1/v))/pi) against its two-term duplication",
                 {"a", "b", "v", "m", "k"}, {"transformation_range"},
                 [](P p) { return lerch_transformation_sides(p["m"], p["v"], p["a"], p["b"], p["k"]).rhs; },
                 {},
                 [](P p) { return lerch_transformation_sides(p["m"], p["v"], p["a"], p["b"], p["k"]).lhs; },
                 none,
                 {}});

    auto log_square_poles = [](Singularities& s, cx a, int order) {
        if (a.imag() == 0.0 && a.real() != 0.0) {
            s.pole(std::exp(a.real() * pi), order);
            s.pole(std::exp(-a.real() * pi), order);
        }
    };
    f.push_back({"reciprocal_log_square", "(1 + b x^v)^(-1-n) / (a^2 pi^2 - log^2 x)", {"a", "b", "v", "n"},
                 {"n_nonnegative_integer", "a_nonzero", "log_square_decay"},
                 [](P p) { return reciprocal_log_square(p["a"], p["b"], p["v"], p.integer("n")); },
                 [](Q q, P p) {
                     Term t(q);
                     cx ap = p["a"] * pi;
                     return t.div((ap - t.L()) * (ap + t.L())).one_plus(p["b"], p["v"], -1.0 - p["n"]).value();
                 },
                 {},
                 [=](P p) {
                     Singularities s;
                     log_square_poles(s, p["a"], 1);
                     power_poles(s, p["b"], p["v"], p.integer("n") + 1);
                     return s;
                 },
                 {}});

    f.push_back({"reciprocal_log_square_squared", "(1 + e^(i b pi) x^v)^(-1-n) / (log^2 x - a^2 pi^2)^2",
                 {"a", "b", "v", "n"}, {"n_nonnegative_integer", "a_nonzero", "log_square_decay"},
                 [](P p) { return reciprocal_log_square_squared(p["a"], p["b"], p["v"], p.integer("n")); },
                 [](Q q, P p) {
                     Term t(q);
                     cx ap = p["a"] * pi;
                     cx d = (t.L() - ap) * (t.L() + ap);
                     return t.div(d * d).one_plus(cexp(I * p["b"] * pi), p["v"], -1.0 - p["n"]).value();
                 },
                 {},
                 [=](P p) {
                     Singularities s;
                     log_square_poles(s, p["a"], 2);
                     power_poles(s, cexp(I * p["b"] * pi), p["v"], p.integer("n") + 1);
                     return s;
                 },
                 {}});

    // 1 / ((1 + e^(i b pi) x)^2 (scale^2 + log^2 x)^2), times log x when weighted
    auto squared_log = [](Q q, cx scale, cx rot, bool weighted) {
        Term t(q);
        cx d = scale * scale + t.L() * t.L();
        t.div(d * d).one_plus(rot, 1.0, -2.0);
        if (weighted)
            t.mul(t.L());
        return t.value();
    };
    f.push_back({"squared_log_shift", "1 / ((1 + x)^2 (a^2 + log^2 x)^2)", {"a"}, {"re_a_positive"},
                 [](P p) { return squared_log_shift(p["a"]); },
                 [=](Q q, P p) { return squared_log(q, p["a"], 1.0, false); }, {}, none, {}});
    f.push_back({"squared_log_shift_at_pi", "1 / ((1 + x)^2 (pi^2 + log^2 x)^2)", {}, {},
                 [](P) { return squared_log_shift_at_pi(); },
                 [=](Q q, P) { return squared_log(q, pi, 1.0, false); }, {}, none, {}});
    f.push_back({"rotated_squared_log", "1 / ((1 + e^(i b pi) x)^2 (a^2 pi^2 + log^2 x)^2)", {"a", "b"},
                 {"re_a_positive", "abs_b_below_one"},
                 [](P p) { return rotated_squared_log(p["a"], p["b"]); },
                 [=](Q q, P p) { return squared_log(q, p["a"] * pi, cexp(I * p["b"] * pi), false); }, {}, none, {}});
    f.push_back({"rotated_squared_log_weighted", "log x / ((1 + e^(i b pi) x)^2 (a^2 pi^2 + log^2 x)^2)", {"a", "b"},
                 {"re_a_positive", "abs_b_below_one"},
                 [](P p) { return rotated_squared_log_weighted(p["a"], p["b"]); },
                 [=](Q q, P p) { return squared_log(q, p["a"] * pi, cexp(I * p["b"] * pi), true); }, {}, none, {}});

    f.push_back({"malmsten_pochhammer_difference", "(x^s - x^m) log(log x) / (b + c x^v)_(1+n)",
                 {"b", "c", "v", "m", "s", "n"},
                 {"n_nonnegative_integer", "re_v_positive", "pochhammer_difference_decay", "b_off_negative_axis", "c_nonzero"},
                 [](P p) {
                     return malmsten_pochhammer_difference(p["b"], p["c"], p["v"], p["m"], p["s"], p.integer("n"));
                 },
                 [](Q q, P p) {
                     Term t(q);
                     return t.diff(p["s"], p["m"]).mul(t.loglog(1.0)).over_poch(p["b"], p["c"], p["v"], p.integer("n")).value();
                 },
                 {},
                 [](P p) {
                     Singularities s;
                     s.split(1.0);
                     pochhammer_poles(s, p["b"], p["c"], p["v"], p.integer("n"));
                     return s;
                 },
                 {}});

    // (2 - x)_n and (k - 2x)-type products over the integer points past x = 1
    auto over_unit_poch = [](Term& t, int first, int count, double slope) -> Term& {
        for (int i = 0; i < count; ++i)
            t.lin(first + i, -slope, 1.0, -1.0);
        return t;
    };
    auto unit_pochhammer_poles = [](Singularities& s, int n) {
        for (int i = 1; i <= n; ++i)
            s.pole(1.0 + i, 1);
    };

    f.push_back({"malmsten_half_power_unit", "(x^(-1/2) - x^(1/2)) log(log x) / (1 - x)_(1+n)", {"n"},
                 {"n_positive_integer"},
                 [](P p) { return malmsten_half_power_unit(p.integer("n")); },
                 [=](Q q, P p) {
                     Term t(q);
                     // (x^(-1/2) - x^(1/2)) / (1 - x) = x^(-1/2)
                     t.xp(-0.5).mul(t.loglog(1.0));
                     return over_unit_poch(t, 2, p.integer("n"), 1.0).value();
                 },
                 {},
                 [=](P p) {
                     Singularities s;
                     s.split(1.0);
                     unit_pochhammer_poles(s, p.integer("n"));
                     return s;
                 },
                 {}});

    f.push_back({"malmsten_polynomial", "x^(m-1) log(log(a x)) / (1 + b x^v)^(n+1)", {"a", "b", "v", "m", "n"},
                 {"n_nonnegative_integer", "re_m_positive", "re_v_positive", "power_decay", "a_nonzero"},
                 [](P p) { return malmsten_polynomial(p["a"], p["b"], p["v"], p["m"], p.integer("n")); },
                 [](Q q, P p) {
                     Term t(q);
                     return t.xp(p["m"] - 1.0).mul(t.loglog(p["a"])).one_plus(p["b"], p["v"], -1.0 - p["n"]).value();
                 },
                 {},
                 [](P p) {
                     Singularities s;
                     log_scale_split(s, p["a"]);
                     power_poles(s, p["b"], p["v"], p.integer("n") + 1);
                     return s;
                 },
                 [](Rng& r) {
                     ParamSet p;
                     int n = r.integer(0, 2);
                     double v = r.uniform(1.5, 3.0);
                     p.set("n", n);
                     p.set("v", v);
                     p.set("a", r.uniform(0.5, 2.0));
                     p.set("b", r.uniform(0.5, 2.0));
                     p.set("m", r.uniform(0.3, std::min(2.5, (n + 1) * v - 0.5)));
                     return p;
                 }});

    f.push_back({"malmsten_unit_difference", "(x^(s-1) - x^(m-1)) log(log x) / (1 - x)^(n+1)", {"m", "s", "n"},
                 {"n_nonnegative_integer", "re_m_positive", "re_s_positive"},
                 [](P p) { return malmsten_unit_difference(p["m"], p["s"], p.integer("n")); },
                 [](Q q, P p) {
                     Term t(q);
                     int n = p.integer("n");
                     return t.diff(p["s"] - 1.0, p["m"] - 1.0).mul(t.loglog(1.0) * cpow(-1.0, n + 1)).xm1(1.0, -(n + 1)).value();
                 },
                 {},
                 [](P p) {
                     Singularities s;
                     s.split(1.0);
                     if (p.integer("n") >= 1)
                         s.pole(1.0, p.integer("n"));
                     return s;
                 },
                 {}});

    f.push_back({"malmsten_log_ratio", "x^(m-1) log(log(a x)) / ((1 + b x^v)^(n+1) log(a x))", {"a", "b", "v", "m", "n"},
                 {"n_nonnegative_integer", "re_m_positive", "re_v_positive", "power_decay", "im_a_positive"},
                 [](P p) { return malmsten_log_ratio(p["a"], p["b"], p["v"], p["m"], p.integer("n")); },
                 [](Q q, P p) {
                     Term t(q);
                     cx l = t.logs(p["a"]);
                     return t.xp(p["m"] - 1.0).mul(log_near_branch(l) / l).one_plus(p["b"], p["v"], -1.0 - p["n"]).value();
                 },
                 {},
                 [](P p) {
                     Singularities s;
                     power_poles(s, p["b"], p["v"], p.integer("n") + 1);
                     return s;
                 },
                 {}});

    f.push_back({"malmsten_log_ratio_difference",
                 "(x^(s-1) - x^(m-1)) log(log(a x)) / ((1 + b x^v)^(n+1) log(a x))", {"a", "b", "v", "m", "s", "n"},
                 {"n_nonnegative_integer", "re_m_positive", "re_s_positive", "re_v_positive", "a_nonzero"},
                 [](P p) {
                     return malmsten_log_ratio_difference(p["a"], p["b"], p["v"], p["m"], p["s"], p.integer("n"));
                 },
                 [](Q q, P p) {
                     Term t(q);
                     cx l = t.logs(p["a"]);
                     if (p["a"] == cx{1.0, 0.0})  // the difference cancels the zero of log x
                         t.diff_over_log(p["s"] - 1.0, p["m"] - 1.0);
                     else
                         t.diff(p["s"] - 1.0, p["m"] - 1.0).div(l);
                     return t.mul(log_near_branch(l)).one_plus(p["b"], p["v"], -1.0 - p["n"]).value();
                 },
                 {},
                 [](P p) {
                     Singularities s;
                     log_scale_split(s, p["a"]);
                     power_poles(s, p["b"], p["v"], p.integer("n") + 1);
                     return s;
                 },
                 {}});

    f.push_back({"malmsten_cubic", "log(log x) / (1 + x^3)^n", {"n"}, {"n_positive_integer"},
                 [](P p) { return malmsten_cubic(p.integer("n")); },
                 [](Q q, P p) {
                     Term t(q);
                     return t.mul(t.loglog(1.0)).one_plus(1.0, 3.0, -p["n"]).value();
                 },
                 {},
                 [](P) {
                     Singularities s;
                     s.split(1.0);
                     return s;
                 },
                 {}});

    // x^shift log(log(scale x)) / (1 + scale^power x^power)^order
    auto malm_closed = [&](const char* tag, const char* text, double power, double scale, double shift, cx (*value)(),
                           int order) {
        f.push_back({tag, text, {}, {},
                     [value](P) { return value(); },
                     [=](Q q, P) {
                         Term t(q);
                         return t.xp(shift).mul(t.loglog(scale)).one_plus(std::pow(scale, power), power, -order).value();
                     },
                     {},
                     [=](P) {
                         Singularities s;
                         s.split(1.0 / scale);
                         return s;
                     },
                     {}});
    };
    malm_closed("malmsten_cubic_closed", "log(log x) / (1 + x^3)", 3.0, 1.0, 0.0, malmsten_cubic_closed, 1);
    malm_closed("malmsten_quartic_closed", "log(log x) / (1 + x^4)^2", 4.0, 1.0, 0.0, malmsten_quartic_closed, 2);
    malm_closed("malmsten_catalan_quadratic", "log(log x) / (1 + x^2)^4", 2.0, 1.0, 0.0, malmsten_catalan_quadratic, 4);
    malm_closed("malmsten_catalan_cubic", "sqrt(x) log(log(2 x)) / (1 + 8 x^3)^3", 3.0, 2.0, 0.5, malmsten_catalan_cubic, 3);

    f.push_back({"malmsten_catalan_scaled", "log(log(a x)) / (1 + a^2 x^2)^3", {"a"}, {"positive_log_scale"},
                 [](P p) { return malmsten_catalan_scaled(p["a"]); },
                 [](Q q, P p) {
                     Term t(q);
                     cx a = p["a"];
                     return t.mul(t.loglog(a)).one_plus(a * a, 2.0, -3.0).value();
                 },
                 {},
                 [](P p) {
                     Singularities s;
                     log_scale_split(s, p["a"]);
                     return s;
                 },
                 {}});

    // reproductions of classical table entries
    auto shifted = [](Q q, P p) {
        Term t(q);
        return t.xp(p["s"] - 1.0).lin(p["a"], -1.0, 1.0, -p["n"]).value();
    };
    std::vector<std::string> shifted_cond = {"n_positive_integer", "s_below_n", "a_not_on_positive_axis"};
    f.push_back({"shifted_power_closed", "x^(s-1) / (a - x)^n", {"a", "s", "n"}, shifted_cond,
                 [](P p) { return shifted_power_closed(p["a"], p["s"], p.integer("n")); }, shifted, {}, none, {}});
    f.push_back({"shifted_power_series", "x^(s-1) / (a - x)^n", {"a", "s", "n"}, shifted_cond,
                 [](P p) { return shifted_power_series(p["a"], p["s"], p.integer("n")); }, shifted, {}, none, {}});
    f.push_back({"shifted_power_series_form", "double Lerch sum for x^(s-1) / (a - x)^n without its prefactor",
                 {"a", "s", "n"}, shifted_cond,
                 [](P p) { return shifted_power_closed_bare(p["a"], p["s"], p.integer("n")); }, {},
                 [](P p) { return shifted_power_series_bare(p["a"], p["s"], p.integer("n")); }, none, {}});

    auto power_sum = [](Q q, P p) {
        Term t(q);
        return t.xp(p["alpha"] - 1.0).mul(t.L()).lin(cpow(p["z"], p["mu"]), 1.0, p["mu"], -p["m"]).value();
    };
    std::vector<std::string> power_sum_cond = {"m_positive_integer", "re_mu_positive", "alpha_in_range", "z_sector"};
    auto power_sum_sampler = [](Rng& r) {
        ParamSet p;
        int m = r.integer(1, 3);
        double mu = r.uniform(0.8, 2.5);
        p.set("m", m);
        p.set("mu", mu);
        p.set("alpha", r.uniform(0.2, m * mu - 0.2));
        p.set("z", r.uniform(0.5, 2.0));
        return p;
    };
    f.push_back({"power_sum_log_series", "x^(alpha-1) log x / (z^mu + x^mu)^m", {"alpha", "mu", "z", "m"}, power_sum_cond,
                 [](P p) { return power_sum_log_series(p["alpha"], p["mu"], p["z"], p.integer("m")); }, power_sum, {}, none,
                 power_sum_sampler});
    f.push_back({"power_sum_log_closed", "x^(alpha-1) log x / (z^mu + x^mu)^m", {"alpha", "mu", "z", "m"}, power_sum_cond,
                 [](P p) { return power_sum_log_closed(p["alpha"], p["mu"], p["z"], p.integer("m")); }, power_sum, {}, none,
                 power_sum_sampler});
    f.push_back({"power_sum_log_series_form", "double Lerch sum for x^(alpha-1) log x / (z^mu + x^mu)^m, rescaled",
                 {"alpha", "mu", "z", "m"}, power_sum_cond,
                 [](P p) { return power_sum_log_closed_scaled(p["alpha"], p["mu"], p["z"], p.integer("m")); }, {},
                 [](P p) { return power_sum_log_series_scaled(p["alpha"], p["mu"], p["z"], p.integer("m")); }, none,
                 power_sum_sampler});

    auto linear = [](Q q, P p) {
        Term t(q);
        return t.xp(p["a"] - 1.0).one_plus(p["b"], 1.0, -1.0 - p["n"]).value();
    };
    std::vector<std::string> linear_cond = {"n_nonnegative_integer", "a_below_n_plus_one", "b_off_negative_axis"};
    auto linear_sampler = [](Rng& r) {
        ParamSet p;
        int n = r.integer(0, 3);
        p.set("n", n);
        p.set("a", r.uniform(0.2, n + 0.8));
        p.set("b", cx(r.uniform(0.3, 2.0), r.uniform(-1.0, 1.0)));
        return p;
    };
    f.push_back({"linear_power_series", "x^(a-1) / (1 + b x)^(n+1)", {"a", "b", "n"}, linear_cond,
                 [](P p) { return linear_power_series(p["a"], p["b"], p.integer("n")); }, linear, {}, none, linear_sampler});
    f.push_back({"linear_power_closed", "x^(a-1) / (1 + b x)^(n+1)", {"a", "b", "n"}, linear_cond,
                 [](P p) { return linear_power_closed(p["a"], p["b"], p.integer("n")); }, linear, {}, none, linear_sampler});
    f.push_back({"linear_power_series_form", "double Lerch sum for x^(a-1) / (1 + b x)^(n+1) without b^(-a)",
                 {"a", "b", "n"}, linear_cond,
                 [](P p) { return linear_power_closed(p["a"], p["b"], p.integer("n"), true); }, {},
                 [](P p) { return linear_power_series(p["a"], p["b"], p.integer("n"), true); }, none, linear_sampler});

    auto even_ratio = [](Q q, P p) {
        Term t(q);
        int n = p.integer("n");
        return t.one_plus(1.0, 2.0, 1.0).one_plus(1.0, 2.0 + 4.0 * n, -1.0).diff_over_log(p["p"] - 1.0, p["q"] - 1.0).value();
    };
    auto even_ratio_sampler = [](Rng& r) {
        ParamSet p;
        int n = r.integer(1, 3);
        p.set("n", n);
        p.set("p", r.uniform(0.2, 4.0 * n - 0.2));
        p.set("q", r.uniform(0.2, 4.0 * n - 0.2));
        return p;
    };
    std::vector<std::string> even_ratio_cond = {"n_positive_integer", "pq_in_range_4n"};
    f.push_back({"even_power_ratio_atanh", "(1 + x^2)(x^(p-1) - x^(q-1)) / ((1 + x^(2+4n)) log x)", {"p", "q", "n"},
                 even_ratio_cond, [](P p) { return even_power_ratio_atanh(p["p"], p["q"], p.integer("n")); }, even_ratio, {},
                 none, even_ratio_sampler});
    f.push_back({"even_power_ratio_log", "(1 + x^2)(x^(p-1) - x^(q-1)) / ((1 + x^(2+4n)) log x)", {"p", "q", "n"},
                 even_ratio_cond, [](P p) { return even_power_ratio_log(p["p"], p["q"], p.integer("n")); }, even_ratio, {},
                 none, even_ratio_sampler});

    // (x^2 - 1) / (x^(2n) - 1), with its limit 1/n at x = 1
    auto even_quotient = [](Term& t, int n) -> Term& {
        if (t.L() == cx{0.0, 0.0})
            return t.mul(1.0 / n);
        return t.xm1(2.0, 1).xm1(2.0 * n, -1);
    };
    f.push_back({"even_power_polylog", "(x^2 - 1)(x^p - x^q) log^k x / (x^(2n) - 1)", {"p", "q", "n", "k"},
                 {"n_positive_integer", "pq_in_range_2n", "re_k_nonnegative"},
                 [](P p) { return even_power_polylog(p["p"], p["q"], p.integer("n"), p["k"]); },
                 [=](Q q, P p) {
                     Term t(q);
                     t.mul(powk(t.L(), p["k"])).diff(p["p"], p["q"]);
                     return even_quotient(t, p.integer("n")).value();
                 },
                 {},
                 [](P) {
                     Singularities s;
                     s.split(1.0);
                     return s;
                 },
                 {}});

    f.push_back({"even_power_log", "(1 - x^2)(x^(p-1) - x^(q-1)) / ((1 - x^(2n)) log x)", {"p", "q", "n"},
                 {"n_positive_integer", "pq_in_range_2n_shifted"},
                 [](P p) { return even_power_log(p["p"], p["q"], p.integer("n")); },
                 [=](Q q, P p) {
                     Term t(q);
                     t.diff_over_log(p["p"] - 1.0, p["q"] - 1.0);
                     return even_quotient(t, p.integer("n")).value();
                 },
                 {}, none,
                 [](Rng& r) {
                     ParamSet p;
                     int n = r.integer(2, 4);
                     p.set("n", n);
                     p.set("p", r.uniform(0.2, 2.0 * n - 2.2));
                     p.set("q", r.uniform(0.2, 2.0 * n - 2.2));
                     return p;
                 }});

    f.push_back({"geometric_polylog", "x^m log^k x / (1 - x^(p+q+2s))", {"m", "k", "p", "q", "s"},
                 {"re_k_positive", "pqs_positive", "geometric_decay"},
                 [](P p) { return geometric_polylog(p["m"], p["k"], p["p"], p["q"], p["s"]); },
                 [](Q q, P p) {
                     Term t(q);
                     cx w = p["p"] + p["q"] + 2.0 * p["s"];
                     return t.xp(p["m"]).mul(-powk(t.L(), p["k"])).xm1(w, -1).value();
                 },
                 {},
                 [](P) {
                     Singularities s;
                     s.split(1.0);
                     return s;
                 },
                 {}});

    f.push_back({"geometric_log", "x^(s-1)(1 - x^p)(1 - x^q) / ((1 - x^(p+q+2s)) log x)", {"p", "q", "s"},
                 {"pqs_positive"},
                 [](P p) { return geometric_log(p["p"], p["q"], p["s"]); },
                 [](Q q, P p) {
                     Term t(q);
                     cx w = p["p"] + p["q"] + 2.0 * p["s"];
                     if (t.L() == cx{0.0, 0.0})
                         return -p["p"] * p["q"] / w;
                     return t.xp(p["s"] - 1.0).mul(-1.0).xm1(p["p"], 1).xm1(p["q"], 1).xm1(w, -1).div(t.L()).value();
                 },
                 {}, none,
                 [](Rng& r) {
                     ParamSet p;
                     p.set("p", r.uniform(0.2, 3.0));
                     p.set("q", r.uniform(0.2, 3.0));
                     p.set("s", r.uniform(0.2, 2.0));
                     return p;
                 }});

    f.push_back({"unit_polynomial_polylog", "x^(m-1) (1 - x^v)^(-1-n) log^k x", {"m", "v", "k", "n"},
                 {"n_nonnegative_integer", "re_v_positive", "unit_polynomial_decay", "re_k_above_n"},
                 [](P p) { return unit_polynomial_polylog(p["m"], p["v"], p["k"], p.integer("n")); },
                 [](Q q, P p) {
                     Term t(q);
                     int n = p.integer("n");
                     // grouped as (log x / (x^v - 1))^(n+1) log^(k-n-1) x, finite factors near x = 1
                     return t.xp(p["m"] - 1.0)
                         .mul(cpow(-1.0, n + 1) * powk(t.L(), p["k"] - double(n + 1)))
                         .log_over_xm1(p["v"], n + 1)
                         .value();
                 },
                 {},
                 [](P) {
                     Singularities s;
                     s.split(1.0);
                     return s;
                 },
                 {}});

    f.push_back({"unit_polynomial_difference", "(x^(p-1) - x^(q-1))(1 - x^s) / ((1 - x^v)^(n+1) log x)",
                 {"p", "q", "s", "v", "n"}, {"n_nonnegative_integer", "re_v_positive", "unit_difference_decay"},
                 [](P p) { return unit_polynomial_difference(p["p"], p["q"], p["s"], p["v"], p.integer("n")); },
                 [](Q q, P p) {
                     Term t(q);
                     int n = p.integer("n");
                     return t.diff_over_log(p["p"] - 1.0, p["q"] - 1.0)
                         .mul(cpow(-1.0, n))
                         .xm1(p["s"], 1)
                         .xm1(p["v"], -(n + 1))
                         .value();
                 },
                 {},
                 [](P p) {
                     Singularities s;
                     s.split(1.0);
                     if (p.integer("n") >= 1)
                         s.pole(1.0, p.integer("n"));
                     return s;
                 },
                 {}});

    // log-inverse integrands over a Pochhammer denominator
    f.push_back({"log_log_over_log_pochhammer", "x^(m-1) log(log x) / (log x (b + c x^v)_(1+n))", {"b", "c", "v", "m", "n"},
                 {"n_nonnegative_integer", "re_m_positive", "re_v_positive", "pochhammer_decay", "c_nonzero"},
                 [](P p) { return log_log_over_log_pochhammer(p["b"], p["c"], p["v"], p["m"], p.integer("n")); },
                 [](Q q, P p) {
                     Term t(q);
                     return t.xp(p["m"] - 1.0).mul(t.loglog(1.0) / t.L()).over_poch(p["b"], p["c"], p["v"], p.integer("n")).value();
                 },
                 {},
                 [](P p) {
                     Singularities s;
                     s.split(1.0);
                     pochhammer_poles(s, p["b"], p["c"], p["v"], p.integer("n"));
                     return s;
                 },
                 {}});

    f.push_back({"power_difference_over_log", "(x^s - x^m) / (log x (b + c x^v)_(1+n))", {"b", "c", "v", "m", "s", "n"},
                 {"n_nonnegative_integer", "re_v_positive", "pochhammer_difference_decay", "c_nonzero"},
                 [](P p) { return power_difference_over_log(p["b"], p["c"], p["v"], p["m"], p["s"], p.integer("n")); },
                 [](Q q, P p) {
                     Term t(q);
                     return t.diff_over_log(p["s"], p["m"]).over_poch(p["b"], p["c"], p["v"], p.integer("n")).value();
                 },
                 {},
                 [](P p) {
                     Singularities s;
                     pochhammer_poles(s, p["b"], p["c"], p["v"], p.integer("n"));
                     return s;
                 },
                 {}});

    f.push_back({"power_difference_over_log_reflected", "(x^s - x^m) / (log x (b - x^v)_(1+n))", {"b", "v", "m", "s", "n"},
                 {"n_nonnegative_integer", "re_v_positive", "pochhammer_difference_decay"},
                 [](P p) { return power_difference_over_log_reflected(p["b"], p["v"], p["m"], p["s"], p.integer("n")); },
                 [](Q q, P p) {
                     Term t(q);
                     return t.diff_over_log(p["s"], p["m"]).over_poch(p["b"], -1.0, p["v"], p.integer("n")).value();
                 },
                 {},
                 [](P p) {
                     Singularities s;
                     pochhammer_poles(s, p["b"], -1.0, p["v"], p.integer("n"));
                     return s;
                 },
                 {}});

    f.push_back({"four_power_over_log", "(x^p - x^q)(x^s - 1) / (log x (b - x^v)_(1+n))", {"b", "v", "p", "q", "s", "n"},
                 {"n_nonnegative_integer", "re_v_positive", "four_power_decay"},
                 [](P p) { return four_power_over_log(p["b"], p["v"], p["p"], p["q"], p["s"], p.integer("n")); },
                 [](Q q, P p) {
                     Term t(q);
                     return t.diff_over_log(p["p"], p["q"]).xm1(p["s"], 1).over_poch(p["b"], -1.0, p["v"], p.integer("n")).value();
                 },
                 {},
                 [](P p) {
                     Singularities s;
                     pochhammer_poles(s, p["b"], -1.0, p["v"], p.integer("n"));
                     return s;
                 },
                 {}});

    auto polylog_scale = [](P p) { return cpow(-p["b"] / p["c"], -1.0 / p["v"]); };
    f.push_back({"pochhammer_polylog", "x^(m-1) log^k((-b/c)^(-1/v) x) / (b + c x^v)_(1+n)", {"b", "c", "v", "m", "k", "n"},
                 {"n_nonnegative_integer", "re_m_positive", "re_v_positive", "pochhammer_decay", "c_nonzero",
                  "polylog_scale_right_half"},
                 [](P p) { return pochhammer_polylog(p["b"], p["c"], p["v"], p["m"], p["k"], p.integer("n")); },
                 [=](Q q, P p) {
                     Term t(q);
                     return t.xp(p["m"] - 1.0)
                         .mul(powk(t.logs(polylog_scale(p)), p["k"]))
                         .over_poch(p["b"], p["c"], p["v"], p.integer("n"))
                         .value();
                 },
                 {},
                 [=](P p) {
                     Singularities s;
                     log_scale_split(s, polylog_scale(p));
                     pochhammer_poles(s, p["b"], p["c"], p["v"], p.integer("n"));
                     return s;
                 },
                 {}});

    f.push_back({"pochhammer_polylog_difference", "(x^s - x^m) log^k((-b/c)^(-1/v) x) / (b + c x^v)_(1+n)",
                 {"b", "c", "v", "m", "s", "k", "n"},
                 {"n_nonnegative_integer", "re_v_positive", "pochhammer_difference_decay", "c_nonzero",
                  "polylog_scale_right_half"},
                 [](P p) {
                     return pochhammer_polylog_difference(p["b"], p["c"], p["v"], p["m"], p["s"], p["k"], p.integer("n"));
                 },
                 [=](Q q, P p) {
                     Term t(q);
                     return t.diff(p["s"], p["m"])
                         .mul(powk(t.logs(polylog_scale(p)), p["k"]))
                         .over_poch(p["b"], p["c"], p["v"], p.integer("n"))
                         .value();
                 },
                 {},
                 [=](P p) {
                     Singularities s;
                     log_scale_split(s, polylog_scale(p));
                     pochhammer_poles(s, p["b"], p["c"], p["v"], p.integer("n"));
                     return s;
                 },
                 {}});

    // (x^(-1/2) - x^(1/2)) / (log x (1 - x)), then the remaining factors
    auto half_power = [](Q q) {
        Term t(q);
        t.diff_over_log(-0.5, 0.5).mul(-1.0).xm1(1.0, -1);
        return t;
    };
    f.push_back({"half_power_two_poles", "(x^(-1/2) - x^(1/2)) / ((1 - x)(2 - x) log x)", {}, {},
                 [](P) { return half_power_two_poles(); },
                 [=](Q q, P) {
                     Term t = half_power(q);
                     return over_unit_poch(t, 2, 1, 1.0).value();
                 },
                 {},
                 [](P) {
                     Singularities s;
                     s.pole(1.0, 1);
                     s.pole(2.0, 1);
                     return s;
                 },
                 {}});

    f.push_back({"half_power_unit_pochhammer", "(x^(-1/2) - x^(1/2)) / (log x (1 - x)_(1+n))", {"n"},
                 {"n_positive_integer"},
                 [](P p) { return half_power_unit_pochhammer(p.integer("n")); },
                 [=](Q q, P p) {
                     Term t = half_power(q);
                     return over_unit_poch(t, 2, p.integer("n"), 1.0).value();
                 },
                 {},
                 [=](P p) {
                     Singularities s;
                     s.pole(1.0, 1);
                     unit_pochhammer_poles(s, p.integer("n"));
                     return s;
                 },
                 {}});

    f.push_back({"half_power_scaled_pochhammer", "(x^(-1/2) - x^(1/2)) / (log(2x) (1 - 2x)_(1+n))", {"n"},
                 {"n_positive_integer"},
                 [=](P p) { return half_power_scaled_pochhammer(p.integer("n")); },
                 [=](Q q, P p) {
                     Term t(q);
                     // the factor 2 - 2x cancels against x^(-1/2) - x^(1/2)
                     t.xp(-0.5).div(2.0 * t.logs(2.0)).lin(1.0, -2.0, 1.0, -1.0);
                     return over_unit_poch(t, 3, p.integer("n") - 1, 2.0).value();
                 },
                 {},
                 [](P p) {
                     Singularities s;
                     s.pole(0.5, 2);
                     for (int i = 2; i <= p.integer("n"); ++i)
                         s.pole((1.0 + i) / 2.0, 1);
                     return s;
                 },
                 {}});

    f.push_back({"log_log_power_difference", "(x^s - x^m) log(log x) / (log x (b + c x^v)_(1+n))",
                 {"b", "c", "v", "m", "s", "n"},
                 {"n_nonnegative_integer", "re_v_positive", "pochhammer_difference_decay", "re_b_positive", "re_c_positive"},
                 [](P p) { return log_log_power_difference(p["b"], p["c"], p["v"], p["m"], p["s"], p.integer("n")); },
                 [](Q q, P p) {
                     Term t(q);
                     return t.diff_over_log(p["s"], p["m"]).mul(t.loglog(1.0)).over_poch(p["b"], p["c"], p["v"], p.integer("n")).value();
                 },
                 {},
                 [](P p) {
                     Singularities s;
                     s.split(1.0);
                     pochhammer_poles(s, p["b"], p["c"], p["v"], p.integer("n"));
                     return s;
                 },
                 {}});

    f.push_back({"half_power_log_log_unit", "(x^(-1/2) - x^(1/2)) log(log x) / (log x (1 - x)_(1+n))", {"n"},
                 {"n_positive_integer"},
                 [](P p) { return half_power_log_log_unit(p.integer("n")); },
                 [=](Q q, P p) {
                     Term t = half_power(q);
                     t.mul(t.loglog(1.0));
                     return over_unit_poch(t, 2, p.integer("n"), 1.0).value();
                 },
                 {},
                 [=](P p) {
                     Singularities s;
                     s.pole(1.0, 1);
                     unit_pochhammer_poles(s, p.integer("n"));
                     return s;
                 },
                 {}});

    f.push_back({"even_log_power", "x^(m alpha/2 - 1) log^(2n) x / (1 + x^alpha)^m", {"m", "alpha", "n"},
                 {"n_nonnegative_integer", "grobner_range", "re_alpha_positive"},
                 [](P p) { return even_log_power(p.real("m"), p["alpha"], p.integer("n")); },
                 [](Q q, P p) {
                     Term t(q);
                     cx m = p["m"], al = p["alpha"];
                     return t.xp(m * al / 2.0 - 1.0).mul(cpow(t.L(), 2 * p.integer("n"))).one_plus(1.0, al, -m).value();
                 },
                 {}, none,
                 [](Rng& r) {
                     ParamSet p;
                     int n = r.integer(0, 2);
                     p.set("n", n);
                     p.set("alpha", r.uniform(0.8, 3.0));
                     p.set("m", r.coin() ? cx(r.integer(1, 2 * n + 1)) : cx(r.uniform(0.3, 2.0 * n + 1.7)));
                     return p;
                 }});

    return f;
}

}  // namespace detail

inline const std::vector<Family>& families()
{
    static const std::vector<Family> table = detail::build_families();
    return table;
}

inline const Family* find_family(const std::string& tag)
{
    for (const auto& f : families())
        if (f.tag == tag)
            return &f;
    return nullptr;
}

inline const Family& family(const std::string& tag)
{
    if (const Family* f = find_family(tag))
        return *f;
    throw CatalogError("unknown family '" + tag + "'");
}

// ------------------------------------------------------------ integrand spec

// A family's left-hand side bound to one parameter set.
class IntegrandSpec {
public:
    IntegrandSpec(const Family& fam, ParamSet p) : family_(&fam), params_(std::move(p))
    {
        if (!fam.has_integral())
            throw DomainError("family '" + fam.tag + "' has no integral left-hand side");
        sing_ = fam.singularities(params_);
        sing_.normalize();
    }

    const std::string& family() const { return family_->tag; }
    const ParamSet& params() const { return params_; }
    const Singularities& singularities() const { return sing_; }

    // value on the real axis; listed singular points are rejected
    cx operator()(double x) const
    {
        if (!(x > 0.0) || !std::isfinite(x))
            throw DomainError("integrand: x must be positive and finite");
        for (double s : sing_.splits)
            if (x == s)
                throw PoleError("integrand: x = " + std::to_string(x) + " is a listed singular point", x);
        for (const auto& p : sing_.poles)
            if (x == p.location)
                throw PoleError("integrand: x = " + std::to_string(x) + " is a listed pole", x);
        return checked(family_->integrand(Abscissa{x, std::log(x), x}, params_), "integrand");
    }

    Integrand integrand() const
    {
        const Family* f = family_;
        ParamSet p = params_;
        return [f, p](const Abscissa& a) { return f->integrand(a, p); };
    }

    // `side` moves the whole path off the axis; `pole_side`, when set, applies
    // only to the half-residues at the poles and leaves the branches principal
    QuadratureSpec quadrature(Side side, Side pole_side, double rel_tol, double abs_tol) const
    {
        QuadratureSpec q;
        q.split_points = sing_.splits;
        q.pv_poles = sing_.poles;
        for (auto& p : q.pv_poles)
            p.side = pole_side;
        q.side = side;
        q.rel_tol = rel_tol;
        q.abs_tol = abs_tol;
        return q;
    }

private:
    const Family* family_;
    ParamSet params_;
    Singularities sing_;
};

inline IntegrandSpec build_integrand(const std::string& family_tag, const ParamSet& p)
{
    return IntegrandSpec(family(family_tag), p);
}

// --------------------------------------------------------- named evaluators

inline cx thm1_rhs(const ParamSet& p) { return family("pochhammer_log_power").rhs(p); }
inline cx thm2_rhs(const ParamSet& p) { return family("polynomial_log_power").rhs(p); }
inline cx grobner_piecewise_rhs(double m, cx alpha, int n) { return rhs::even_log_power(m, alpha, n); }

// Right-hand side of a family; for families without an integral this is the
// closed expression compared against `lhs_closed`.
inline cx family_rhs(const std::string& tag, const ParamSet& p) { return family(tag).rhs(p); }

// Which S_n^(j) sign convention makes the polynomial sum agree with quadrature
// at n = 2 (at n = 1 both conventions coincide).
inline StirlingConvention calibrate_stirling_convention()
{
    ParamSet p{{"a", 1.0}, {"b", 1.0}, {"v", 2.0}, {"m", 0.5}, {"k", 0.0}, {"n", 2.0}};
    IntegrandSpec spec = build_integrand("polynomial_log_power", p);
    QuadratureOutcome q = integrate(spec.integrand(), spec.quadrature(Side::none, Side::none, 1e-12, 1e-15));
    auto sum = [&](StirlingConvention c) {
        return rhs::polynomial_log_power(1.0, 1.0, 2.0, 0.5, 0.0, 2, c);
    };
    double es = std::abs(sum(StirlingConvention::signed_) - q.value);
    double eu = std::abs(sum(StirlingConvention::unsigned_) - q.value);
    return es <= eu ? StirlingConvention::signed_ : StirlingConvention::unsigned_;
}

}  // namespace logint
