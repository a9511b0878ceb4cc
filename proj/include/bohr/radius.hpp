#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>

#include "bohr/errors.hpp"
#include "bohr/functionals.hpp"

namespace bohr {

struct Bracket {
    double lo;
    double hi;
    double width() const noexcept { return hi - lo; }
};

struct RootResult {
    double value = 0.0;
    double residual = 0.0; ///< |f(value)|
    Bracket bracket{0.0, 0.0};
    int iterations = 0;
    bool unique = false; ///< verdict of the monotonicity scan
    /// Set by radius_for when a sharpness certificate was requested.
    std::optional<bool> sharp;
};

struct SolveOptions {
    double xtol = 1e-12;        ///< final bracket width
    double ftol = 1e-12;        ///< residual tolerance, scaled by max(1, |slope|)
    int max_iterations = 200;
};

/// Find [lo, hi] inside [lo_hint, hi_hint] with f(lo) < 0 < f(hi).
///
/// If f throws DomainError at hi_hint (a domain wall), hi is pulled back
/// towards lo by geometrically growing steps until f is defined there.
template <typename F>
Bracket bracket(const F& f, double lo_hint, double hi_hint)
{
    if (!(lo_hint < hi_hint))
        throw std::invalid_argument("bracket: need lo_hint < hi_hint");
    const double flo = f(lo_hint);
    if (!(flo < 0.0))
        throw NoSignChange("bracket: functional is not negative at the lower end");

    double step = (hi_hint - lo_hint) * 1e-12;
    double hi = hi_hint;
    for (int k = 0;; ++k) {
        try {
            const double fhi = f(hi);
            if (std::isnan(fhi))
                throw DomainError("nan");
            if (!(fhi > 0.0))
                throw NoSignChange("bracket: no sign change on the admissible interval");
            return {lo_hint, hi};
        } catch (const DomainError&) {
            if (k > 45)
                throw NoSignChange("bracket: functional undefined near the upper end");
            hi = hi_hint - step;
            step *= 2.0;
            if (hi <= lo_hint)
                throw NoSignChange("bracket: functional undefined on the interval");
        }
    }
}

/// Brent's method on a certified bracket (bisection-safeguarded inverse
/// quadratic / secant steps). Deterministic for identical inputs.
template <typename F>
RootResult solve(const F& f, Bracket br, const SolveOptions& opt = {})
{
    if (!(opt.xtol >= 1e-14))
        throw std::invalid_argument("solve: xtol must be at least 1e-14");
    double a = br.lo, b = br.hi;
    double fa = f(a), fb = f(b);
    if (!(fa < 0.0 && fb > 0.0))
        throw NoSignChange("solve: bracket does not satisfy f(lo) < 0 < f(hi)");

    double c = a, fc = fa;
    double d = b - a, e = d;
    const double tol1 = 0.5 * opt.xtol;
    int iter = 0;
    for (;; ++iter) {
        if (iter >= opt.max_iterations)
            throw IterationBudgetExceeded("solve: iteration budget exhausted");
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0)
            break;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qa = fa / fc, rr = fb / fc;
                p = s * (2.0 * xm * qa * (qa - rr) - (b - a) * (rr - 1.0));
                q = (qa - 1.0) * (rr - 1.0) * (s - 1.0);
            }
            if (p > 0.0)
                q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += std::abs(d) > tol1 ? d : std::copysign(tol1, xm);
        fb = f(b);
    }

    RootResult out;
    out.value = b;
    out.residual = std::abs(fb);
    out.iterations = iter;
    if (fb == 0.0) {
        // exact hit: widen symmetrically until both sides have strict signs
        double h = 0.25 * opt.xtol;
        double lo = b - h, hi = b + h;
        for (int k = 0; k < 8 && !(f(lo) < 0.0 && f(hi) > 0.0); ++k) {
            lo = std::nextafter(lo, -1.0);
            hi = std::nextafter(hi, 2.0);
        }
        out.bracket = {lo, hi};
    } else {
        out.bracket = {std::min(b, c), std::max(b, c)};
    }
    const double width = out.bracket.width();
    const double slope = width > 0.0 ? std::abs(fc - fb) / std::abs(c - b) : 1.0;
    if (out.residual > opt.ftol * std::max(1.0, slope))
        throw IterationBudgetExceeded("solve: residual tolerance not met");
    return out;
}

/// True iff f is strictly increasing on an evenly spaced grid over the
/// domain and changes sign exactly once there.
template <typename F>
bool verify_unique(const F& f, Bracket domain, int grid)
{
    if (grid < 100)
        throw std::invalid_argument("verify_unique: grid must have at least 100 points");
    double prev = 0.0;
    int sign_changes = 0;
    for (int i = 0; i < grid; ++i) {
        const double r = domain.lo + (domain.hi - domain.lo) * i / (grid - 1);
        double v;
        try {
            v = f(r);
        } catch (const DomainError&) {
            return false;
        }
        if (std::isnan(v))
            return false;
        if (i > 0) {
            if (!(v > prev))
                return false;
            if ((prev < 0.0) != (v < 0.0))
                ++sign_changes;
        }
        prev = v;
    }
    return sign_changes == 1;
}

/// Lower seed of every bracket search.
inline constexpr double radius_lo_seed = 1e-9;
/// Offset from the right edge (r = 1 or the F_M = 1 wall).
inline constexpr double radius_edge_gap = 1e-9;

/// Largest r at which the starred family is still defined:
/// the solution of F_M(r) = 1 - 1e-9, or 1 - 1e-9 when F_M stays below it.
double starred_wall(ClassParam M, AreaVariant variant = AreaVariant::squared);

/// Admissible solve interval for the tagged functional.
Bracket radius_domain(const FunctionalId& id, const ParamSet& p);

struct RadiusOptions {
    SolveOptions solve{};
    int uniqueness_grid = 200;
    bool certify = false;     ///< attach a sharpness certificate
    double delta = 1e-4;      ///< offset used by the certificate
};

/// Bracket, solve and scan the tagged equation. Corollary tags read M and
/// the F_M variant from p; analytic tags read only their extras.
RootResult radius_for(const FunctionalId& id, const ParamSet& p, const RadiusOptions& opt = {});

} // namespace bohr
