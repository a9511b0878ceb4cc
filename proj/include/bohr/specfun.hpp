#pragma once

#include <cmath>
#include <limits>
#include <numbers>

#include "bohr/errors.hpp"

namespace bohr {

namespace detail {

template <typename Scalar>
void check_dilog_arg(Scalar x)
{
    if (std::isnan(x) || x < Scalar(0) || x > Scalar(1))
        throw DomainError("li2: argument must lie in [0, 1]");
}

// Sum of x^k / k^2 for 0 <= x <= 1/2; terms shrink at least geometrically
// by 1/2, so fewer than 50 terms reach double round-off.
template <typename Scalar>
Scalar li2_small(Scalar x)
{
    Scalar sum = 0;
    Scalar power = x;
    for (int k = 1; k < 200; ++k) {
        const Scalar term = power / (Scalar(k) * Scalar(k));
        sum += term;
        if (term <= std::numeric_limits<Scalar>::epsilon() * sum * Scalar(0.25))
            break;
        power *= x;
    }
    return sum;
}

} // namespace detail

/// Dilogarithm Li2(x) = sum_{k>=1} x^k / k^2 on [0, 1].
///
/// Direct series on [0, 1/2]; for x > 1/2 the reflection
/// Li2(x) = pi^2/6 - ln(x) ln(1-x) - Li2(1-x) keeps the series argument
/// below 1/2. Li2(1) is returned as the closed constant pi^2/6.
template <typename Scalar>
Scalar li2(Scalar x)
{
    detail::check_dilog_arg(x);
    constexpr Scalar zeta2 = std::numbers::pi_v<Scalar> * std::numbers::pi_v<Scalar> / Scalar(6);
    if (x == Scalar(0))
        return Scalar(0);
    if (x == Scalar(1))
        return zeta2;
    if (x <= Scalar(0.5))
        return detail::li2_small(x);
    const Scalar y = Scalar(1) - x; // exact for x in [1/2, 1]
    return zeta2 - std::log(x) * std::log1p(-x) - detail::li2_small(y);
}

/// Partial sum sum_{k=1}^{n_max} x^k / k^2. Test oracle only.
template <typename Scalar>
Scalar li2_series_oracle(Scalar x, long n_max)
{
    detail::check_dilog_arg(x);
    if (x >= Scalar(1))
        throw DomainError("li2_series_oracle: x = 1 has no certifiable truncation bound");
    if (n_max < 1)
        throw DomainError("li2_series_oracle: n_max must be positive");
    Scalar sum = 0;
    Scalar power = 1;
    for (long k = 1; k <= n_max; ++k) {
        power *= x;
        if (power == Scalar(0))
            break;
        sum += power / (Scalar(k) * Scalar(k));
    }
    return sum;
}

/// Bound on Li2(x) - li2_series_oracle(x, n_max): x^{n+1} / ((1-x)(n+1)^2).
template <typename Scalar>
Scalar li2_series_remainder(Scalar x, long n_max)
{
    detail::check_dilog_arg(x);
    if (x >= Scalar(1))
        throw DomainError("li2_series_remainder: no bound at x = 1");
    const Scalar n1 = Scalar(n_max + 1);
    return std::pow(x, n1) / ((Scalar(1) - x) * n1 * n1);
}

} // namespace bohr
