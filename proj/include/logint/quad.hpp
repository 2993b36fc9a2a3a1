#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "logint/core.hpp"

namespace logint {

// Which side of the real axis the path runs on. `none` keeps the abscissae
// exactly real; `above`/`below` evaluate the integrand at x +/- i0, which also
// fixes the branch of every logarithm that is cut along the path.
enum class Side { none, above, below };

inline const char* to_string(Side s)
{
    switch (s) {
    case Side::none: return "none";
    case Side::above: return "above";
    case Side::below: return "below";
    }
    return "?";
}

struct Pole {
    double location = 1.0;
    int order = 1;
    Side side = Side::none;  // none: inherit from the spec; none there too means the bare PV
};

enum class TailScheme {
    log_panels,          // panels of growing width in log x out to |log x| = 700
    double_exponential,  // exp-sinh on each tail
};

struct QuadratureSpec {
    std::vector<double> split_points;  // strictly increasing, positive
    std::vector<Pole> pv_poles;
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_refinement_depth = 30;
    TailScheme tail = TailScheme::log_panels;
    Side side = Side::none;
    long max_evaluations = 500'000;
};

struct QuadratureOutcome {
    cx value;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
    int rounds = 0;
};

// The integrand sees x together with log x. log x is exact (t = log x is the
// integration variable) and carries the +/- i0 of the path side, so integrands
// should build powers and logarithms of x from it.
struct Abscissa {
    cx x;
    cx logx;
    double real_x;
};

using Integrand = std::function<cx(const Abscissa&)>;
using PlainIntegrand = std::function<cx(double)>;

inline Integrand lift(PlainIntegrand f)
{
    return [f = std::move(f)](const Abscissa& p) { return f(p.real_x); };
}

inline void validate(const QuadratureSpec& spec)
{
    if (!(spec.rel_tol > 0.0) || !(spec.abs_tol > 0.0))
        throw DomainError("quadrature: tolerances must be positive");
    if (spec.max_refinement_depth < 1)
        throw DomainError("quadrature: max_refinement_depth must be >= 1");
    for (std::size_t i = 0; i < spec.split_points.size(); ++i) {
        double p = spec.split_points[i];
        if (!(p > 0.0) || !std::isfinite(p))
            throw DomainError("quadrature: split points must be positive and finite");
        if (i > 0 && !(p > spec.split_points[i - 1]))
            throw DomainError("quadrature: split points must be strictly increasing");
    }
    for (const auto& pole : spec.pv_poles) {
        if (!(pole.location > 0.0) || !std::isfinite(pole.location))
            throw DomainError("quadrature: pole location must be positive and finite");
        if (pole.order != 1 && pole.order != 2)
            throw DomainError("quadrature: pole of order " + std::to_string(pole.order) + " is not supported");
    }
}

namespace detail {

inline constexpr double boundary_eta = 1e-150;
inline constexpr double panel_width = 0.5;
inline constexpr double core_margin = 2.0;
inline constexpr double t_limit = 700.0;
inline constexpr double window_max = 0.25;
inline constexpr int window_depth_cap = 6;
inline constexpr int level_cap = 9;

// Gauss-Kronrod 21/10 abscissae and weights on [-1, 1]
inline constexpr std::array<double, 11> gk_x = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452, 0.930157491355708226001207180059508,
    0.865063366688984510732096688423493, 0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784, 0.294392862701460198131126603103866,
    0.148874338981631210884826001129720, 0.0,
};
inline constexpr std::array<double, 11> gk_wk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390, 0.054755896574351996031381300244580,
    0.075039674810919952767043140916190, 0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077482532800532, 0.134709217311473325928054001771707, 0.142775938577060080797094273138717,
    0.147739104901338491374841515972068, 0.149445554002916905664936468389821,
};
inline constexpr std::array<double, 5> gk_wg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697, 0.219086362515982043995534934228163,
    0.269266719309996355091226921569469, 0.295524224714752870173892994651338,
};

enum class PanelKind { gauss_kronrod, tanh_sinh, exp_sinh };

struct Panel {
    PanelKind kind = PanelKind::gauss_kronrod;
    int fn = -1;  // -1: the integrand in t; otherwise a pole window index
    double a = 0.0, b = 0.0;  // exp_sinh: a is the finite end, b = +1 or -1 the direction
    int depth = 0;  // bisection depth or tanh-sinh level
    cx value;
    double err = 0.0;
    cx raw;  // running node sum for the double exponential rules
    cx previous;
    bool done = false;
};

struct Window {
    double t0 = 0.0, d = 0.0;
    double inner_radius = 0.0;  // [0, inner_radius] handled spectrally, the rest by panels
    int order = 1;
    int depth = 0;
    double sigma = 0.0;
    cx p0;     // 2 c_{-2} (order 2 only)
    cx c1;     // residue
    cx inner;  // integral of the paired, subtracted integrand over [0, inner_radius]
    double err = 0.0;
};

struct Snapshot {
    cx value;
    double err = 0.0;
};

class Engine {
public:
    Engine(const Integrand& f, const QuadratureSpec& spec) : f_(f), spec_(spec)
    {
        validate(spec);
        sigma_ = spec.side == Side::above ? 1.0 : spec.side == Side::below ? -1.0 : 0.0;
    }

    long evaluations() const { return evals_; }

    double target(const Snapshot& s) const { return std::max(spec_.abs_tol, spec_.rel_tol * std::abs(s.value)); }

    Snapshot snapshot() const
    {
        CompensatedSum sum;
        double err = tail_err_;
        for (const auto& p : panels_) {
            sum.add(p.value);
            err += p.err;
        }
        for (const auto& w : windows_) {
            sum.add(window_constant(w));
            sum.add(w.inner);
            err += w.err;
        }
        return {sum.value(), err};
    }

    void build()
    {
        std::vector<double> splits;
        std::vector<double> poles;
        for (const auto& p : spec_.pv_poles)
            poles.push_back(std::log(p.location));
        for (double s : spec_.split_points) {
            double t = std::log(s);
            bool is_pole = std::any_of(poles.begin(), poles.end(), [&](double q) { return std::abs(q - t) < 1e-12; });
            if (!is_pole)
                splits.push_back(t);
        }
        std::vector<double> all = splits;
        all.insert(all.end(), poles.begin(), poles.end());
        std::sort(all.begin(), all.end());

        for (std::size_t i = 0; i < spec_.pv_poles.size(); ++i) {
            const Pole& pole = spec_.pv_poles[i];
            Window w;
            w.t0 = poles[i];
            w.order = pole.order;
            Side side = pole.side != Side::none ? pole.side : spec_.side;
            w.sigma = side == Side::above ? 1.0 : side == Side::below ? -1.0 : 0.0;
            double gap = std::numeric_limits<double>::infinity();
            for (double q : all)
                if (std::abs(q - w.t0) > 1e-12)
                    gap = std::min(gap, std::abs(q - w.t0));
            w.d = std::min(window_max, 0.45 * gap);
            windows_.push_back(w);
        }

        double lo = 0.0, hi = 0.0;
        if (!all.empty()) {
            lo = std::min(lo, all.front());
            hi = std::max(hi, all.back());
        }
        lo -= core_margin;
        hi += core_margin;

        std::vector<double> cuts{lo, hi};
        cuts.insert(cuts.end(), splits.begin(), splits.end());
        for (const auto& w : windows_) {
            cuts.push_back(w.t0 - w.d);
            cuts.push_back(w.t0 + w.d);
        }
        std::sort(cuts.begin(), cuts.end());
        auto is_split = [&](double t) { return std::find(splits.begin(), splits.end(), t) != splits.end(); };
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            double l = cuts[i], r = cuts[i + 1];
            if (r - l <= 0.0)
                continue;
            double mid = 0.5 * (l + r);
            bool in_window = std::any_of(windows_.begin(), windows_.end(),
                                         [&](const Window& w) { return std::abs(mid - w.t0) < w.d; });
            if (in_window)
                continue;
            int n = std::max(1, static_cast<int>(std::ceil((r - l) / panel_width)));
            for (int j = 0; j < n; ++j) {
                double pl = l + (r - l) * j / n;
                double pr = (j == n - 1) ? r : l + (r - l) * (j + 1) / n;
                bool singular = (j == 0 && is_split(l)) || (j == n - 1 && is_split(r));
                add_panel(singular ? PanelKind::tanh_sinh : PanelKind::gauss_kronrod, -1, pl, pr);
            }
        }

        for (auto& w : windows_) {
            w.inner_radius = w.d;
            fit_window(w, true);
        }

        if (spec_.tail == TailScheme::double_exponential) {
            add_panel(PanelKind::exp_sinh, -1, hi, 1.0);
            add_panel(PanelKind::exp_sinh, -1, lo, -1.0);
        } else {
            extend_tail(hi, 1.0);
            extend_tail(lo, -1.0);
        }
    }

    // Refine the item with the largest error; false when that item cannot be
    // refined any further.
    bool refine_worst()
    {
        double worst = 0.0;
        int panel = -1, window = -1;
        for (std::size_t i = 0; i < panels_.size(); ++i)
            if (panels_[i].err > worst)
                worst = panels_[i].err, panel = static_cast<int>(i), window = -1;
        for (std::size_t i = 0; i < windows_.size(); ++i)
            if (windows_[i].err > worst)
                worst = windows_[i].err, window = static_cast<int>(i), panel = -1;
        if (window >= 0)
            return refine_window(windows_[static_cast<std::size_t>(window)]);
        if (panel < 0 || !refinable(panels_[static_cast<std::size_t>(panel)]))
            return false;
        refine(static_cast<std::size_t>(panel));
        return true;
    }

    // One sweep over every item whose error exceeds its share of the target.
    bool refine_round()
    {
        Snapshot s = snapshot();
        double share = target(s) / static_cast<double>(std::max<std::size_t>(1, panels_.size() + windows_.size()));
        std::vector<std::size_t> picks;
        for (std::size_t i = 0; i < panels_.size(); ++i)
            if (refinable(panels_[i]) && panels_[i].err > share)
                picks.push_back(i);
        bool moved = false;
        for (auto& w : windows_)
            if (w.err > share)
                moved = refine_window(w) || moved;
        if (picks.empty() && !moved)
            return refine_worst();
        for (std::size_t i : picks)
            refine(i);
        return true;
    }

private:
    cx g(double t)
    {
        ++evals_;
        Abscissa p;
        p.logx = cx{t, sigma_ * boundary_eta};
        p.x = cexp(p.logx);
        p.real_x = std::exp(t);
        cx v;
        try {
            v = f_(p);
        } catch (const IntegrandFailure&) {
            throw;
        } catch (const Error& e) {
            throw IntegrandFailure(std::string("integrand failed: ") + e.what(), p.real_x);
        }
        if (!finite(v))
            throw IntegrandFailure("integrand returned " + to_string(v), p.real_x);
        return v * p.real_x;
    }

    cx eval(int fn, double u)
    {
        if (fn < 0)
            return g(u);
        const Window& w = windows_[static_cast<std::size_t>(fn)];
        cx s = g(w.t0 + u) + g(w.t0 - u);
        if (w.order == 2)
            s -= w.p0 / (u * u);
        return s;
    }

    static cx window_constant(const Window& w)
    {
        cx c = -w.sigma * I * pi * w.c1;
        if (w.order == 2)
            c -= w.p0 / w.d;
        return c;
    }

    struct WindowFit {
        cx p0, c1, inner;
    };

    // Near the pole the paired sums are even in u, so they are smooth functions
    // of s = u^2. With P(u) = u^2 (g+ + g-) -> 2 c_{-2} and R(u) = u (g+ - g-)
    // -> 2 c_{-1}, interpolate on m Chebyshev nodes in s over [0, r^2]; the
    // integral over [0, r] is exact termwise since T_k(2 sigma^2 - 1) = T_2k(sigma).
    WindowFit chebyshev_fit(const Window& w, double r, int m)
    {
        std::vector<double> theta(m), u(m);
        std::vector<cx> P(m), R(m), E(m);
        for (int j = 0; j < m; ++j) {
            theta[j] = (2.0 * j + 1.0) * pi / (2.0 * m);
            u[j] = r * std::sqrt(0.5 * (1.0 + std::cos(theta[j])));
            cx gp = g(w.t0 + u[j]), gm = g(w.t0 - u[j]);
            E[j] = gp + gm;
            P[j] = u[j] * u[j] * E[j];
            R[j] = u[j] * (gp - gm);
        }
        auto coeffs = [&](const std::vector<cx>& v) {
            std::vector<cx> c(m);
            for (int k = 0; k < m; ++k) {
                CompensatedSum acc;
                for (int j = 0; j < m; ++j)
                    acc.add(v[j] * std::cos(k * theta[j]));
                c[k] = (k == 0 ? 1.0 : 2.0) / m * acc.value();
            }
            return c;
        };
        auto at_left = [&](const std::vector<cx>& c) {
            CompensatedSum acc;
            for (int k = 0; k < m; ++k)
                acc.add((k % 2 ? -1.0 : 1.0) * c[k]);
            return acc.value();
        };
        auto integral = [&](const std::vector<cx>& c) {
            CompensatedSum acc;
            for (int k = 0; k < m; ++k)
                acc.add(c[k] / (1.0 - 4.0 * k * k));
            return r * acc.value();
        };
        WindowFit fit;
        fit.c1 = 0.5 * at_left(coeffs(R));
        if (w.order == 2) {
            fit.p0 = at_left(coeffs(P));
            std::vector<cx> q(m);
            for (int j = 0; j < m; ++j)
                q[j] = (P[j] - fit.p0) / (u[j] * u[j]);
            fit.inner = integral(coeffs(q));
        } else {
            fit.inner = integral(coeffs(E));
        }
        return fit;
    }

    // Full fit sets the pole coefficients; later fits only redo the inner part.
    void fit_window(Window& w, bool full)
    {
        WindowFit hi = chebyshev_fit(w, w.inner_radius, 24);
        WindowFit lo = chebyshev_fit(w, w.inner_radius, 16);
        double err = std::abs(hi.inner - lo.inner);
        if (full) {
            w.c1 = hi.c1;
            w.p0 = w.order == 2 ? hi.p0 : cx{0.0, 0.0};
            err += 0.5 * pi * std::abs(hi.c1 - lo.c1);
            if (w.order == 2)
                err += std::abs(hi.p0 - lo.p0) / w.d;
        } else if (w.order == 2) {
            // the annulus panels subtract the original p0
            hi.inner -= (hi.p0 - w.p0) / w.inner_radius;
        }
        w.inner = hi.inner;
        w.err = std::max(err, 50.0 * std::numeric_limits<double>::epsilon() * std::abs(hi.inner));
    }

    bool refine_window(Window& w)
    {
        if (w.depth >= window_depth_cap)
            return false;
        ++w.depth;
        int index = static_cast<int>(&w - windows_.data());
        double r = w.inner_radius;
        w.inner_radius = 0.5 * r;
        add_panel(PanelKind::gauss_kronrod, index, 0.5 * r, r);
        fit_window(w, false);
        return true;
    }

    bool refinable(const Panel& p) const
    {
        if (p.done)
            return false;
        switch (p.kind) {
        case PanelKind::gauss_kronrod:
            return p.depth < (p.fn >= 0 ? window_depth_cap : spec_.max_refinement_depth);
        case PanelKind::tanh_sinh:
        case PanelKind::exp_sinh:
            return p.depth < std::min(level_cap, spec_.max_refinement_depth);
        }
        return false;
    }

    void add_panel(PanelKind kind, int fn, double a, double b, int depth = 0)
    {
        Panel p;
        p.kind = kind;
        p.fn = fn;
        p.a = a;
        p.b = b;
        p.depth = depth;
        if (kind == PanelKind::gauss_kronrod) {
            gauss_kronrod(p);
        } else {
            for (int level = 0; level <= 3; ++level)
                double_exponential_level(p, level);
        }
        panels_.push_back(p);
    }

    void refine(std::size_t i)
    {
        Panel& p = panels_[i];
        if (p.kind == PanelKind::gauss_kronrod) {
            double mid = 0.5 * (p.a + p.b);
            Panel left = p, right = p;
            left.b = mid;
            right.a = mid;
            left.depth = right.depth = p.depth + 1;
            gauss_kronrod(left);
            gauss_kronrod(right);
            panels_[i] = left;
            panels_.push_back(right);
        } else {
            double_exponential_level(p, p.depth + 1);
        }
    }

    void gauss_kronrod(Panel& p)
    {
        double c = 0.5 * (p.a + p.b), h = 0.5 * (p.b - p.a);
        CompensatedSum k, gs;
        for (int j = 0; j < 10; ++j) {
            double dx = h * gk_x[j];
            cx fs = eval(p.fn, c - dx) + eval(p.fn, c + dx);
            k.add(gk_wk[j] * fs);
            if (j % 2 == 1)
                gs.add(gk_wg[j / 2] * fs);
        }
        k.add(gk_wk[10] * eval(p.fn, c));
        p.value = h * k.value();
        cx gv = h * gs.value();
        p.err = std::max(std::abs(p.value - gv), 50.0 * std::numeric_limits<double>::epsilon() * std::abs(p.value));
    }

    // Adds the nodes of `level` (all of them for level 0, the odd multiples of
    // 2^-level otherwise) and updates value/err.
    void double_exponential_level(Panel& p, int level)
    {
        double h = std::ldexp(1.0, -level);
        auto node = [&](double tau, double& t, double& w) -> bool {
            double sh = std::sinh(tau), ch = std::cosh(tau);
            double y = 0.5 * pi * sh;
            if (p.kind == PanelKind::tanh_sinh) {
                double half = 0.5 * (p.b - p.a);
                double cy = std::cosh(y);
                w = half * 0.5 * pi * ch / (cy * cy);
                if (!(w > 1e-300))
                    return false;
                double dist = half * 2.0 / (std::exp(2.0 * std::abs(y)) + 1.0);
                t = tau > 0.0 ? p.b - dist : p.a + dist;
                return t != p.a && t != p.b;
            }
            double e = std::exp(y);
            w = 0.5 * pi * ch * e;
            t = p.a + p.b * e;
            if (!(w > 1e-300))
                return false;
            return t != p.a && std::abs(t) <= t_limit;
        };
        CompensatedSum add;
        auto walk = [&](double start, double step) {
            cx last_small{0.0, 0.0};
            int quiet = 0;
            for (double tau = start; std::abs(tau) <= 7.0; tau += step) {
                double t, w;
                if (!node(tau, t, w))
                    break;
                cx v;
                try {
                    v = eval(p.fn, t);
                } catch (const IntegrandFailure&) {
                    // far end of an exp-sinh tail where the integrand has
                    // already died out
                    if (p.kind == PanelKind::exp_sinh && step * p.b > 0.0 && quiet >= 3)
                        break;
                    throw;
                }
                cx term = w * v;
                add.add(term);
                double ref = std::abs(p.raw) + std::abs(add.value());
                quiet = std::abs(term) <= 1e-20 * ref ? quiet + 1 : 0;
            }
        };
        if (level == 0) {
            walk(0.0, 1.0);
            walk(-1.0, -1.0);
        } else {
            walk(h, 2.0 * h);
            walk(-h, -2.0 * h);
        }
        p.raw += add.value();
        cx v = h * p.raw;
        if (level > 0)
            p.previous = p.value;
        p.value = v;
        p.depth = level;
        if (level > 0)
            p.err = std::max(std::abs(v - p.previous), 50.0 * std::numeric_limits<double>::epsilon() * std::abs(v));
        if (p.err == 0.0 && level > 2)
            p.done = true;
    }

    void extend_tail(double start, double dir)
    {
        double t = start;
        double width = panel_width;
        int negligible = 0;
        Snapshot s = snapshot();
        while (std::abs(t) < t_limit) {
            double next = t + dir * width;
            if (std::abs(next) > t_limit)
                next = dir * t_limit;
            Panel probe;
            probe.a = std::min(t, next);
            probe.b = std::max(t, next);
            try {
                gauss_kronrod(probe);
            } catch (const IntegrandFailure&) {
                if (negligible > 0)
                    return;
                throw;
            }
            panels_.push_back(probe);
            double tol = target(s);
            if (std::abs(probe.value) + probe.err <= 1e-3 * tol)
                ++negligible;
            else
                negligible = 0;
            if (negligible >= 3)
                return;
            s.value += probe.value;
            t = next;
            width = std::min(width * 1.5, 25.0);
        }
        // truncated before the integrand died out; charge the last panel
        tail_err_ += std::abs(panels_.back().value);
    }

    const Integrand& f_;
    QuadratureSpec spec_;
    double sigma_ = 0.0;
    long evals_ = 0;
    double tail_err_ = 0.0;
    std::vector<Panel> panels_;
    std::vector<Window> windows_;

};

inline QuadratureOutcome outcome(const Engine& e, const Snapshot& s, int rounds)
{
    QuadratureOutcome o;
    o.value = s.value;
    o.error_estimate = s.err;
    o.evaluations = e.evaluations();
    o.converged = finite(s.value) && s.err <= e.target(s);
    o.rounds = rounds;
    return o;
}

}  // namespace detail

// Adaptive integral over (0, inf); never throws for lack of convergence, the
// flag says whether the tolerance was met.
inline QuadratureOutcome integrate(const Integrand& f, const QuadratureSpec& spec)
{
    detail::Engine engine(f, spec);
    engine.build();
    int steps = 0;
    for (;;) {
        detail::Snapshot s = engine.snapshot();
        if (s.err <= engine.target(s) || engine.evaluations() >= spec.max_evaluations || !engine.refine_worst())
            return detail::outcome(engine, s, steps);
        ++steps;
    }
}

inline QuadratureOutcome integrate_semi_infinite(const Integrand& f, const QuadratureSpec& spec)
{
    QuadratureOutcome o = integrate(f, spec);
    if (!o.converged)
        throw NonConvergence("integrate_semi_infinite: error estimate " + std::to_string(o.error_estimate) +
                                 " above tolerance after " + std::to_string(o.evaluations) + " evaluations",
                             o.value);
    return o;
}

inline QuadratureOutcome integrate_semi_infinite(const PlainIntegrand& f, const QuadratureSpec& spec)
{
    return integrate_semi_infinite(lift(f), spec);
}

// Principal value (order 1) or Hadamard finite part (order 2) across `pole`,
// plus -/+ i pi Res for a path above/below it.
inline QuadratureOutcome integrate_pv(const Integrand& f, const Pole& pole, QuadratureSpec spec)
{
    if (pole.order != 1 && pole.order != 2)
        throw DomainError("integrate_pv: pole of order " + std::to_string(pole.order) + " is not supported");
    spec.pv_poles.push_back(pole);
    return integrate_semi_infinite(f, spec);
}

inline QuadratureOutcome integrate_pv(const PlainIntegrand& f, const Pole& pole, const QuadratureSpec& spec)
{
    return integrate_pv(lift(f), pole, spec);
}

// Runs refinement rounds until the tolerance is met. The reported error is the
// best seen so far, so it never increases from one round to the next.
inline QuadratureOutcome refine_until(const Integrand& f, const QuadratureSpec& spec, int budget,
                                      std::vector<QuadratureOutcome>* history = nullptr)
{
    if (budget < 1)
        throw DomainError("refine_until: budget must be at least one round");
    detail::Engine engine(f, spec);
    engine.build();
    QuadratureOutcome best;
    best.error_estimate = std::numeric_limits<double>::infinity();
    for (int round = 0; round < budget; ++round) {
        if (round > 0 && !engine.refine_round())
            break;
        detail::Snapshot s = engine.snapshot();
        QuadratureOutcome o = detail::outcome(engine, s, round + 1);
        if (o.error_estimate <= best.error_estimate)
            best = o;
        best.evaluations = o.evaluations;
        best.rounds = round + 1;
        if (history)
            history->push_back(best);
        if (best.converged)
            return best;
        if (engine.evaluations() >= spec.max_evaluations)
            break;
    }
    throw NonConvergence("refine_until: budget of " + std::to_string(budget) + " rounds exhausted, best error " +
                             std::to_string(best.error_estimate) + " after " + std::to_string(best.evaluations) +
                             " evaluations",
                         best.value);
}

inline QuadratureOutcome refine_until(const PlainIntegrand& f, const QuadratureSpec& spec, int budget)
{
    return refine_until(lift(f), spec, budget);
}

}  // namespace logint
