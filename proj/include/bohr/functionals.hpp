#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "bohr/series.hpp"

namespace bohr {

/// Parameters (beta, mu, lambda, m, N, lambda_1..lambda_q, M) of the
/// combined Bohr-Rogosinski functional.
struct ParamSet {
    double beta = 0.0;
    double mu = 0.0;
    double lambda = 0.0;
    int m = 1;
    int N = 1;
    Eigen::VectorXd poly; ///< lambda_1 .. lambda_q
    ClassParam M{0.0};
    AreaVariant area = AreaVariant::squared;

    /// floor((N-1)/2)
    int t() const noexcept { return (N - 1) / 2; }

    /// Throws DomainError on negative weights or m, N < 1.
    void validate() const;
};

enum class Functional {
    main_phi,
    main_phi_star,
    cor_3_8,
    cor_3_9,
    cor_3_5,
    cor_3_6,
    cor_3_11,
    cor_3_12,
    cor_3_25,
    cor_3_26,
    cor_3_13,
    ana_R_mN,
    ana_Rp_mN,
    ana_R_N,
    ana_Rp_N,
    ana_r_a0,
    ana_rp_a0,
    ana_lambda_quintic,
    ana_lambda_quartic,
};

/// A tagged root equation plus the real parameters it needs:
///   cor_3_12            : {lambda_2}
///   ana_R_mN, ana_Rp_mN : {m, N}
///   ana_R_N, ana_Rp_N   : {N}
///   ana_r_a0, ana_rp_a0 : {|a_0|}
///   everything else     : {}
struct FunctionalId {
    Functional tag;
    std::vector<double> extras;

    /// Throws std::invalid_argument when extras arity does not match tag.
    void validate() const;
};

std::size_t extras_arity(Functional tag);
bool is_corollary(Functional tag);
bool is_analytic(Functional tag);
/// True for the S_r/(pi - S_r) family, whose domain ends where F_M(r) = 1.
bool is_starred(Functional tag);

/// CLI spelling, e.g. "cor3.8", "ana-rpn", "main-star".
std::string_view to_string(Functional tag);
/// Inverse of to_string; throws std::invalid_argument on unknown names.
Functional parse_functional(std::string_view name);
const std::vector<Functional>& corollary_tags();

/// FunctionalId with default extras filled in (lambda_2 from the quartic
/// constant for cor_3_12). Throws for tags whose extras have no default.
FunctionalId functional_id(Functional tag);

/// General functional with polynomial term P_q(F_M(r)).
/// N = 1..4 use the dedicated low-N forms, N >= 5 the general one.
double phi_main(Radius r, const ParamSet& p);

/// As phi_main with P_q(F_M / (1 - F_M)). Throws DomainError when
/// F_M(r) >= 1 and q > 0.
double phi_star(Radius r, const ParamSet& p);

/// The ParamSet under which the corollary's equation is a special case of
/// phi_main / phi_star.
ParamSet corollary_params(const FunctionalId& id, ClassParam M,
                          AreaVariant variant = AreaVariant::squared);

/// Left-hand side of a special-case root equation in its explicit closed form.
double corollary_lhs(const FunctionalId& id, Radius r, ClassParam M,
                     AreaVariant variant = AreaVariant::squared);

/// Residual of an analytic-class reference equation at r. For ana_r_a0 the
/// closed-form radius itself is returned (r is ignored).
double analytic_reference(const FunctionalId& id, double r);

struct ReferenceConstants {
    double bohr_radius;           ///< 1/3
    double rogosinski_radius;     ///< 1/2
    double area_weight;           ///< 16/9
    double area_weight_squared;   ///< 9/8
    double refined_radius;        ///< sqrt(5) - 2
    double refined_weight;        ///< 2 (sqrt(5) - 1)
    double quintic_root;          ///< a in (0,1) of -405 + 473a + 402a^2 + 38a^3 + 3a^4 + a^5
    double quintic_lambda;        ///< ~ 18.6095
    double quartic_root;          ///< a in (0,1) of -513 + 910a + 80a^2 + 2a^3 + a^4
    double quartic_lambda;        ///< ~ 16.4618
};

/// Computed once on first use; the polynomial roots are solved, not copied.
const ReferenceConstants& reference_constants();

/// Evaluate any non-analytic functional: main tags use p directly,
/// corollary tags use their explicit form at p.M and p.area.
double evaluate(const FunctionalId& id, Radius r, const ParamSet& p);

} // namespace bohr
