#pragma once

#include <cstdint>

#include <Eigen/Core>

#include "bohr/functionals.hpp"
#include "bohr/radius.hpp"

namespace bohr {

/// Moduli (|a_n|, |b_n|), n = 1..n_max, of a member of P0_H(M).
/// a(0), b(0) hold a_1 = 1 and b_1 = 0.
struct CoefficientSeq {
    Eigen::ArrayXd a;
    Eigen::ArrayXd b;
    ClassParam M{0.0};

    Eigen::Index n_max() const noexcept { return a.size(); }

    /// Normalization a_1 = 1, b_1 = 0 and a_n + b_n <= 2M/(n(n-1)).
    bool satisfies_class_bounds(double slack = 1e-15) const;
};

/// Coefficient bound 2M/(n(n-1)) for n = 1..n_max, with entry 0 set to 1.
Eigen::ArrayXd coefficient_bound(ClassParam M, Eigen::Index n_max);

/// f_M(z) = z + sum 2M z^n / (n(n-1)); saturates every coefficient bound.
CoefficientSeq extremal_coefficients(ClassParam M, Eigen::Index n_max);

/// Class member with a_n + b_n = u_n 2M/(n(n-1)) and a_n = split_n (a_n + b_n),
/// for n >= 2. u and split are indexed from n = 2 and must lie in [0, 1].
CoefficientSeq class_coefficients(ClassParam M, const Eigen::ArrayXd& u, const Eigen::ArrayXd& split);

/// class_coefficients with u_n, split_n uniform on [0,1] from a seeded mt19937_64.
CoefficientSeq sample_class_coefficients(ClassParam M, std::uint64_t seed, Eigen::Index n_max);

/// f_M(r) for real r in (0,1); equals growth_majorant.
double eval_extremal(Radius r, ClassParam M);

/// sum_n (a_n + b_n) r^n, truncated at n_max.
double majorant_sum(Radius r, const CoefficientSeq& c);

struct BruteForceValue {
    double value;      ///< left-hand side of the Bohr inequality
    double remainder;  ///< certified bound on the truncation error
};

/// Evaluate the functional straight from a coefficient sequence:
///   beta |f(r)|^m + sum_{n>=N} (a_n+b_n) r^n
///   + mu sgn(t) sum_{n<=t} (a_n+b_n)^2 r^N/(1-r)
///   + lambda (1 + r/(1-r)) sum_{n>t} (a_n+b_n)^2 r^{2n}
///   + P_q(S_r/pi)          or  P_q(S_r/(pi - S_r))  for starred tags,
/// with S_r/pi = r^2 + sum n (a_n^2 - b_n^2) r^{2n} and |f(r)| bounded by
/// sum (a_n+b_n) r^n. Corollary tags take weights from corollary_params;
/// main tags use p. Throws TruncationError if the omitted tail cannot be
/// bounded by `tolerance`.
BruteForceValue lhs_bruteforce(const FunctionalId& id, const ParamSet& p, Radius r,
                               const CoefficientSeq& c, double tolerance = 1e-10);

/// Smallest power-of-two n_max whose truncation bound at r is below tolerance.
Eigen::Index required_terms(const FunctionalId& id, const ParamSet& p, Radius r,
                            double tolerance = 1e-12);

struct SharpnessVerdict {
    bool holds = false;
    double below = 0.0;     ///< extremal LHS at R - delta
    double above = 0.0;     ///< extremal LHS at R + delta
    double distance = 0.0;  ///< 1 + 2M(1 - 2 ln 2)
    double remainder = 0.0; ///< largest truncation bound used
};

/// Extremal LHS is below the boundary distance at R - delta and above it
/// at R + delta. Requires 0 < delta <= 1e-3 and R + delta inside the domain.
SharpnessVerdict sharpness_certificate(const FunctionalId& id, const ParamSet& p,
                                       const RootResult& R, double delta);

struct QuadratureResult {
    double value;
    double error_estimate; ///< difference between the last two refinements
    int radial_nodes;
    int angular_nodes;
};

/// (1/pi) * integral over |z| < r of |f_M'(z)|^2 with f_M' = 1 - 2M ln(1-z),
/// by Gauss-Legendre in the radius and the trapezoid rule in the angle,
/// refined until successive levels differ by less than 1e-8.
QuadratureResult area_quadrature_detailed(ClassParam M, double r);
double area_quadrature(ClassParam M, double r);

/// Gauss-Legendre nodes/weights on [-1, 1] (Golub-Welsch).
std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_legendre(int n);

} // namespace bohr
