#pragma once

// Direct truncated sums of the series behind every closed form in series.hpp.
// Nothing here calls li2 or a logarithm; each function pairs a partial sum
// with an explicit bound on the omitted tail.

#include <cmath>

namespace bohr::oracle {

template <typename Scalar>
struct Truncated {
    Scalar value;
    Scalar remainder; ///< upper bound on |exact - value|
};

/// r + 2M sum_{n=2}^{n_max} r^n / (n(n-1))
template <typename Scalar>
Truncated<Scalar> growth(Scalar r, Scalar M, long n_max)
{
    Scalar sum = 0, power = r;
    for (long n = 2; n <= n_max; ++n) {
        power *= r;
        sum += power / (Scalar(n) * Scalar(n - 1));
    }
    const Scalar k = Scalar(n_max + 1);
    const Scalar rem = 2 * M * std::pow(r, k) / (k * (k - 1) * (1 - r));
    return {r + 2 * M * sum, rem};
}

/// 2M sum_{n=max(N,2)}^{n_max} r^n / (n(n-1)), plus r when N = 1.
template <typename Scalar>
Truncated<Scalar> tail(Scalar r, Scalar M, int N, long n_max)
{
    Scalar sum = 0, power = r;
    for (long n = 2; n <= n_max; ++n) {
        power *= r;
        if (n >= N)
            sum += power / (Scalar(n) * Scalar(n - 1));
    }
    const Scalar k = Scalar(n_max + 1);
    const Scalar rem = 2 * M * std::pow(r, k) / (k * (k - 1) * (1 - r));
    return {2 * M * sum + (N == 1 ? r : Scalar(0)), rem};
}

/// sum_{n=max(t+1,2)}^{n_max} r^{2n} / (n^2 (n-1)^2)
template <typename Scalar>
Truncated<Scalar> quadratic_tail(Scalar r, int t, long n_max)
{
    const Scalar x = r * r;
    Scalar sum = 0, power = x;
    for (long n = 2; n <= n_max; ++n) {
        power *= x;
        if (n >= t + 1) {
            const Scalar b = Scalar(n) * Scalar(n - 1);
            sum += power / (b * b);
        }
    }
    const Scalar k = Scalar(n_max + 1);
    const Scalar b = k * (k - 1);
    return {sum, std::pow(x, k) / (b * b * (1 - x))};
}

/// r^2 + c sum_{n=2}^{n_max} r^{2n} / (n (n-1)^2) with c = 4M^2 (or 4M).
template <typename Scalar>
Truncated<Scalar> area(Scalar r, Scalar coefficient, long n_max)
{
    const Scalar x = r * r;
    Scalar sum = 0, power = x;
    for (long n = 2; n <= n_max; ++n) {
        power *= x;
        sum += power / (Scalar(n) * Scalar(n - 1) * Scalar(n - 1));
    }
    const Scalar k = Scalar(n_max + 1);
    return {x + coefficient * sum, coefficient * std::pow(x, k) / (k * (k - 1) * (k - 1) * (1 - x))};
}

/// 1 + 2M sum_{n=2}^{n_max} (-1)^{n-1} / (n(n-1)); alternating, so the
/// remainder is bounded by the first omitted term.
template <typename Scalar>
Truncated<Scalar> boundary_distance(Scalar M, long n_max)
{
    Scalar sum = 0;
    for (long n = n_max; n >= 2; --n) { // small terms first
        const Scalar term = Scalar(1) / (Scalar(n) * Scalar(n - 1));
        sum += (n % 2 == 0) ? -term : term;
    }
    const Scalar k = Scalar(n_max + 1);
    return {1 + 2 * M * sum, 2 * M / (k * (k - 1))};
}

/// Rogosinski head from the coefficient bound with a_1 = 1, b_1 = 0.
template <typename Scalar>
Scalar rogosinski_head(Scalar r, Scalar M, int N)
{
    const int t = (N - 1) / 2;
    Scalar squares = 0;
    for (int n = 1; n <= t; ++n) {
        const Scalar c = n == 1 ? Scalar(1) : 2 * M / (Scalar(n) * Scalar(n - 1));
        squares += c * c;
    }
    Scalar rN = 1;
    for (int k = 0; k < N; ++k)
        rN *= r;
    return squares * rN / (1 - r);
}

} // namespace bohr::oracle
