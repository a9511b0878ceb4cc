#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Core>

#include "bohr/errors.hpp"
#include "bohr/specfun.hpp"

namespace bohr {

/// Supremum of the admissible class constant, 1 / (2 (ln 4 - 1)).
template <typename Scalar = double>
Scalar class_param_sup()
{
    return Scalar(1) / (Scalar(2) * (std::log(Scalar(4)) - Scalar(1)));
}

/// Class constant M of P0_H(M); 0 <= M < class_param_sup().
template <typename Scalar>
class ClassParamT {
public:
    explicit ClassParamT(Scalar M) : value_(M)
    {
        if (!(M >= Scalar(0) && M < class_param_sup<Scalar>()))
            throw DomainError("class constant M must satisfy 0 <= M < 1/(2(ln 4 - 1)), got "
                              + std::to_string(static_cast<double>(M)));
    }
    Scalar value() const noexcept { return value_; }

private:
    Scalar value_;
};

/// Modulus r = |z| of a point strictly inside the unit disk.
template <typename Scalar>
class RadiusT {
public:
    explicit RadiusT(Scalar r) : value_(r)
    {
        if (!(r > Scalar(0) && r < Scalar(1)))
            throw DomainError("radius must satisfy 0 < r < 1, got "
                              + std::to_string(static_cast<double>(r)));
    }
    Scalar value() const noexcept { return value_; }

private:
    Scalar value_;
};

using ClassParam = ClassParamT<double>;
using Radius = RadiusT<double>;

/// Which coefficient multiplies the bracket of the planar-integral majorant.
/// `squared` (4M^2) is the value the coefficient bound actually yields;
/// `linear` (4M) is kept for comparing against reference tables.
enum class AreaVariant { squared, linear };

namespace detail {

// r + (1 - r) ln(1 - r) = sum_{n>=2} r^n / (n(n-1))
template <typename Scalar>
Scalar j3(Scalar r)
{
    return r + (Scalar(1) - r) * std::log1p(-r);
}

// (1 + x) Li2(x) + 2(x - 1) ln(1 - x) - 3x = sum_{n>=2} x^n / (n^2 (n-1)^2)
template <typename Scalar>
Scalar quadratic_bracket(Scalar x)
{
    return (Scalar(1) + x) * li2(x) + Scalar(2) * (x - Scalar(1)) * std::log1p(-x) - Scalar(3) * x;
}

template <typename Scalar>
Scalar inv_sq_binom(int n)
{
    const Scalar a = Scalar(n) * Scalar(n - 1);
    return Scalar(1) / (a * a);
}

} // namespace detail

/// G_M(r) = r + 2M (r + (1-r) ln(1-r)), the sharp growth bound of the class.
template <typename Scalar>
Scalar growth_majorant(RadiusT<Scalar> radius, ClassParamT<Scalar> M)
{
    const Scalar r = radius.value();
    return r + Scalar(2) * M.value() * detail::j3(r);
}

/// Majorant of sum_{n >= max(N,2)} (|a_n|+|b_n|) r^n, plus r when N = 1.
template <typename Scalar>
Scalar tail_majorant(RadiusT<Scalar> radius, ClassParamT<Scalar> M, int N)
{
    if (N < 1)
        throw DomainError("tail_majorant: N must be positive");
    const Scalar r = radius.value();
    Scalar tail = detail::j3(r);
    Scalar power = r;
    for (int n = 2; n <= N - 1; ++n) {
        power *= r;
        tail -= power / (Scalar(n) * Scalar(n - 1));
    }
    tail = std::max(Scalar(0), tail);
    return Scalar(2) * M.value() * tail + (N == 1 ? r : Scalar(0));
}

/// G_t(r) = sum_{n >= max(t+1, 2)} r^{2n} / (n^2 (n-1)^2), in closed form.
template <typename Scalar>
Scalar quadratic_tail(RadiusT<Scalar> radius, int t)
{
    if (t < 0)
        throw DomainError("quadratic_tail: t must be nonnegative");
    const Scalar x = radius.value() * radius.value();
    Scalar value = detail::quadratic_bracket(x);
    Scalar power = x;
    for (int n = 2; n <= t; ++n) {
        power *= x;
        value -= power * detail::inv_sq_binom<Scalar>(n);
    }
    return std::max(Scalar(0), value);
}

/// Rogosinski head sgn(t) (r^N/(1-r)) sum_{n=1}^t (|a_n|+|b_n|)^2 evaluated at
/// the coefficient bound; the n = 1 summand is (|a_1|+|b_1|)^2 = 1.
template <typename Scalar>
Scalar rogosinski_head(RadiusT<Scalar> radius, ClassParamT<Scalar> M, int N)
{
    if (N < 1)
        throw DomainError("rogosinski_head: N must be positive");
    const int t = (N - 1) / 2;
    if (t == 0)
        return Scalar(0);
    const Scalar r = radius.value();
    Scalar sum = 0;
    for (int n = 2; n <= t; ++n)
        sum += detail::inv_sq_binom<Scalar>(n);
    const Scalar m = M.value();
    return std::pow(r, Scalar(N)) / (Scalar(1) - r) * (Scalar(1) + Scalar(4) * m * m * sum);
}

/// F_M(r) = r^2 + c [r^2 Li2(r^2) - (r^2 + (1-r^2) ln(1-r^2))],
/// c = 4M^2 (squared) or 4M (linear). Bounds S_r / pi over the class.
template <typename Scalar>
Scalar area_majorant(RadiusT<Scalar> radius, ClassParamT<Scalar> M,
                     AreaVariant variant = AreaVariant::squared)
{
    const Scalar x = radius.value() * radius.value();
    const Scalar m = M.value();
    const Scalar c = variant == AreaVariant::squared ? Scalar(4) * m * m : Scalar(4) * m;
    const Scalar bracket = x * li2(x) - (x + (Scalar(1) - x) * std::log1p(-x));
    return x + c * bracket;
}

template <typename Scalar>
struct CorollaryHelpersT {
    Scalar J1; ///< r^2 + 4M^2 sum_{n>=2} r^{2n}/(n^2(n-1)^2)
    Scalar J2; ///< G_M(r)^m - 1 - 2M(1 - 2 ln 2)
    Scalar J3; ///< r + (1-r) ln(1-r)
};

template <typename Scalar>
Scalar boundary_distance(ClassParamT<Scalar> M)
{
    return Scalar(1) + Scalar(2) * M.value() * (Scalar(1) - Scalar(2) * std::numbers::ln2_v<Scalar>);
}

template <typename Scalar>
CorollaryHelpersT<Scalar> corollary_helpers(RadiusT<Scalar> radius, ClassParamT<Scalar> M, int m)
{
    if (m < 1)
        throw DomainError("corollary_helpers: m must be positive");
    const Scalar r = radius.value();
    const Scalar x = r * r;
    const Scalar k = M.value();
    const Scalar j1 = x + Scalar(4) * k * k
                              * ((Scalar(1) + x) * li2(x) - Scalar(2) * (Scalar(1) - x) * std::log1p(-x)
                                 - Scalar(3) * x);
    const Scalar j2 = std::pow(growth_majorant(radius, M), m) - boundary_distance(M);
    return {j1, j2, detail::j3(r)};
}

using CorollaryHelpers = CorollaryHelpersT<double>;

/// P_q(w) = lambda_1 w + ... + lambda_q w^q (Horner); zero for q = 0.
template <typename Derived>
typename Derived::Scalar poly_eval(typename Derived::Scalar w, const Eigen::DenseBase<Derived>& coeffs)
{
    using Scalar = typename Derived::Scalar;
    if (!(w >= Scalar(0)))
        throw DomainError("poly_eval: argument must be nonnegative");
    if ((coeffs.derived().array() < Scalar(0)).any() || coeffs.derived().hasNaN())
        throw DomainError("poly_eval: coefficients must be nonnegative");
    Scalar acc = 0;
    for (Eigen::Index j = coeffs.size() - 1; j >= 0; --j)
        acc = (acc + coeffs.derived()(j)) * w;
    return acc;
}

/// Derivative P_q'(w).
template <typename Derived>
typename Derived::Scalar poly_derivative(typename Derived::Scalar w, const Eigen::DenseBase<Derived>& coeffs)
{
    using Scalar = typename Derived::Scalar;
    Scalar acc = 0;
    for (Eigen::Index j = coeffs.size() - 1; j >= 0; --j)
        acc = acc * w + Scalar(j + 1) * coeffs.derived()(j);
    return acc;
}

} // namespace bohr
