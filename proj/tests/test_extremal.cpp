#include <doctest.h>

#include <cmath>
#include <random>

#include "bohr/extremal.hpp"

using namespace bohr;

namespace {

ParamSet at(double M)
{
    ParamSet p;
    p.M = ClassParam(M);
    return p;
}

} // namespace

TEST_CASE("extremal coefficients")
{
    const auto c = extremal_coefficients(ClassParam(0.5), 4);
    CHECK(c.a(0) == 1.0);
    CHECK(c.b(0) == 0.0);
    CHECK(c.a(1) == 0.5);
    CHECK(c.b.isZero());
    CHECK(extremal_coefficients(ClassParam(1.26), 10).a(9) == doctest::Approx(0.028).epsilon(1e-15));
    CHECK(c.satisfies_class_bounds());
    CHECK_THROWS_AS(extremal_coefficients(ClassParam(0.5), 1), std::invalid_argument);
}

TEST_CASE("extremal function values")
{
    CHECK(eval_extremal(Radius(1e-12), ClassParam(0.8)) < 1e-11);
    CHECK(eval_extremal(Radius(0.5), ClassParam(0.0)) == 0.5);
    CHECK(std::abs(eval_extremal(Radius(0.5), ClassParam(0.14)) - 0.5429593947216077) < 1e-15);
    const auto c = extremal_coefficients(ClassParam(0.14), 4096);
    CHECK(std::abs(majorant_sum(Radius(0.5), c) - eval_extremal(Radius(0.5), ClassParam(0.14))) < 1e-14);
}

TEST_CASE("class members")
{
    const ClassParam M(0.9);
    const Eigen::Index K = 64;
    const auto ones = Eigen::ArrayXd::Ones(K - 1);
    const auto zeros = Eigen::ArrayXd::Zero(K - 1);
    const auto ext = class_coefficients(M, ones, ones);
    CHECK((ext.a - extremal_coefficients(M, K).a).abs().maxCoeff() == 0.0);
    CHECK(ext.b.isZero());
    const auto id = class_coefficients(M, zeros, ones);
    CHECK(id.a(0) == 1.0);
    CHECK(id.a.tail(K - 1).isZero());
    CHECK_THROWS_AS(class_coefficients(M, ones * 2.0, ones), std::invalid_argument);
    CHECK_THROWS_AS(class_coefficients(M, ones, Eigen::ArrayXd::Ones(3)), std::invalid_argument);

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto s = sample_class_coefficients(M, seed, K);
        CHECK(s.satisfies_class_bounds());
        CHECK(s.n_max() == K);
    }
    const auto s1 = sample_class_coefficients(M, 3, K), s2 = sample_class_coefficients(M, 3, K);
    CHECK((s1.a == s2.a).all());
    CHECK((s1.b == s2.b).all());
}

TEST_CASE("brute force of the extremal equals the closed-form functional")
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 150; ++i) {
        ParamSet p = at(1.29 * u(rng));
        p.beta = 2 * u(rng);
        p.mu = 2 * u(rng);
        p.lambda = 2 * u(rng);
        p.m = 1 + int(3 * u(rng));
        p.N = 1 + int(8 * u(rng));
        p.poly = Eigen::VectorXd::Constant(1 + int(2 * u(rng)), 1.0) * u(rng);
        const bool starred = u(rng) < 0.5;
        const FunctionalId id{starred ? Functional::main_phi_star : Functional::main_phi, {}};
        const double hi = starred ? starred_wall(p.M) : 1.0;
        const Radius r(std::min(0.9, 0.95 * hi) * (0.02 + 0.98 * u(rng)));
        const Eigen::Index K = required_terms(id, p, r);
        const auto bf = lhs_bruteforce(id, p, r, extremal_coefficients(p.M, K));
        const double closed = evaluate(id, r, p) + boundary_distance(p.M);
        CHECK(std::abs(bf.value - closed) <= 1e-9 * std::max(1.0, closed));
    }
}

TEST_CASE("brute force of the special-case equations")
{
    for (Functional tag : corollary_tags()) {
        const FunctionalId id = functional_id(tag);
        for (double M : {0.14, 0.7, 1.26}) {
            const ParamSet p = at(M);
            const RootResult R = radius_for(id, p);
            const Radius r(R.value);
            const auto bf = lhs_bruteforce(id, p, r, extremal_coefficients(p.M, required_terms(id, p, r)));
            CHECK(std::abs(bf.value - boundary_distance(p.M)) < 1e-8);
            const Radius below(0.8 * R.value);
            const auto bb = lhs_bruteforce(id, p, below, extremal_coefficients(p.M, required_terms(id, p, below)));
            CHECK(bb.value <= boundary_distance(p.M));
        }
    }
}

TEST_CASE("brute force degenerate and error cases")
{
    ParamSet p = at(0.5);
    p.N = 2;
    const auto ident = class_coefficients(p.M, Eigen::ArrayXd::Zero(63), Eigen::ArrayXd::Ones(63));
    CHECK(lhs_bruteforce({Functional::main_phi, {}}, p, Radius(0.6), ident).value == 0.0);

    ParamSet q = at(1.0);
    q.lambda = 1;
    CHECK_THROWS_AS(lhs_bruteforce({Functional::main_phi, {}}, q, Radius(0.9), extremal_coefficients(q.M, 8)),
                    TruncationError);
    CHECK_THROWS_AS(lhs_bruteforce({Functional::ana_R_N, {1}}, q, Radius(0.5), extremal_coefficients(q.M, 8)),
                    std::invalid_argument);
}

TEST_CASE("sharpness certificates")
{
    const ParamSet p = at(0.14);
    for (Functional tag : {Functional::cor_3_8, Functional::cor_3_13}) {
        const FunctionalId id = functional_id(tag);
        const RootResult R = radius_for(id, p);
        const SharpnessVerdict v = sharpness_certificate(id, p, R, 1e-4);
        CHECK(v.holds);
        CHECK(v.below < v.distance);
        CHECK(v.above > v.distance);
        CHECK(v.remainder <= 1e-10);
        CHECK_THROWS_AS(sharpness_certificate(id, p, R, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(sharpness_certificate(id, p, R, 1e-2), std::invalid_argument);
    }
    // a point well below the root is not a sharp radius
    const FunctionalId id = functional_id(Functional::cor_3_8);
    RootResult fake = radius_for(id, p);
    fake.value -= 0.01;
    CHECK_FALSE(sharpness_certificate(id, p, fake, 1e-4).holds);
}

TEST_CASE("Gauss-Legendre rule")
{
    const auto [x, w] = gauss_legendre(6);
    CHECK(std::abs(w.sum() - 2.0) < 1e-14);
    // exact through degree 11
    CHECK(std::abs((w.array() * x.array().pow(10)).sum() - 2.0 / 11.0) < 1e-14);
    CHECK(std::abs((w.array() * x.array().pow(7)).sum()) < 1e-14);
    CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("area quadrature")
{
    for (double r : {0.1, 0.5, 0.9})
        CHECK(std::abs(area_quadrature(ClassParam(0.0), r) - r * r) < 1e-12);
    CHECK(std::abs(area_quadrature(ClassParam(0.5), 0.5) - 0.28267471410951885) < 1e-6);
    CHECK(area_quadrature(ClassParam(0.5), 1e-4) < 1e-7);
    for (double M : {0.3, 0.9, 1.29})
        for (double r : {0.2, 0.6, 0.95}) {
            const auto q = area_quadrature_detailed(ClassParam(M), r);
            CHECK(std::abs(q.value - area_majorant(Radius(r), ClassParam(M))) < 1e-6);
            CHECK(q.error_estimate < 1e-8);
        }
    CHECK_THROWS_AS(area_quadrature(ClassParam(0.5), 0.96), DomainError);
    CHECK_THROWS_AS(area_quadrature(ClassParam(0.5), 0.0), DomainError);
}
