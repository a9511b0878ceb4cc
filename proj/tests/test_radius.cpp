#include <doctest.h>

#include <cmath>

#include "bohr/radius.hpp"

using namespace bohr;

namespace {

ParamSet at(double M)
{
    ParamSet p;
    p.M = ClassParam(M);
    return p;
}

double floor4(double x) { return std::floor(x * 1e4) / 1e4; }

} // namespace

TEST_CASE("bracket and solve on elementary functions")
{
    const auto lin = [](double r) { return 2.0 * r - (1.0 - r); };
    const Bracket b = bracket(lin, 1e-9, 1.0 - 1e-9);
    CHECK(b.lo < 1.0 / 3.0);
    CHECK(b.hi > 1.0 / 3.0);
    const RootResult R = solve(lin, b);
    CHECK(std::abs(R.value - 1.0 / 3.0) < 1e-12);
    CHECK(R.bracket.width() <= 1e-12);
    CHECK(R.bracket.lo <= 1.0 / 3.0 + 1e-15);
    CHECK(R.bracket.hi >= 1.0 / 3.0 - 1e-15);
}

TEST_CASE("solve reports failures")
{
    const auto lin = [](double r) { return r - 0.5; };
    CHECK_THROWS_AS(bracket([](double r) { return r + 1.0; }, 0.0, 1.0), NoSignChange);
    CHECK_THROWS_AS(bracket([](double r) { return r - 2.0; }, 0.0, 1.0), NoSignChange);
    CHECK_THROWS_AS(solve(lin, Bracket{0.6, 0.9}), NoSignChange);
    SolveOptions tight;
    tight.max_iterations = 2;
    CHECK_THROWS_AS(solve([](double r) { return std::exp(r) - 1.5; }, Bracket{0.0, 1.0}, tight),
                    IterationBudgetExceeded);
    SolveOptions silly;
    silly.xtol = 1e-16;
    CHECK_THROWS_AS(solve(lin, Bracket{0.0, 1.0}, silly), std::invalid_argument);
}

TEST_CASE("solve is deterministic")
{
    const auto f = [](double r) { return std::pow(r, 3) + r - 0.7; };
    const RootResult a = solve(f, Bracket{0.0, 1.0}), b = solve(f, Bracket{0.0, 1.0});
    CHECK(a.value == b.value);
    CHECK(a.iterations == b.iterations);
}

TEST_CASE("uniqueness scan")
{
    const Bracket unit{0.0, 1.0};
    CHECK(verify_unique([](double r) { return r - 0.5; }, unit, 200));
    CHECK_FALSE(verify_unique([](double r) { return std::sin(10.0 * r); }, unit, 200));
    CHECK_FALSE(verify_unique([](double r) { return r + 1.0; }, unit, 200));
    CHECK_THROWS_AS(verify_unique([](double r) { return r; }, unit, 50), std::invalid_argument);
}

TEST_CASE("bracket steps back from a domain wall")
{
    ParamSet p = at(0.7);
    p.poly = Eigen::VectorXd::Constant(1, 1e6);
    const FunctionalId id{Functional::main_phi_star, {}};
    const double wall = starred_wall(p.M);
    const auto f = [&](double r) { return evaluate(id, Radius(r), p); };
    const Bracket b = bracket(f, 1e-9, 1.0 - 1e-9);
    CHECK(b.hi <= wall);
    const RootResult R = radius_for(id, p);
    CHECK(R.value < wall);
    CHECK(R.unique);
}

TEST_CASE("radii of the main functionals")
{
    ParamSet p = at(0.70);
    p.beta = 1;
    p.lambda = 1;
    p.m = 2;
    CHECK(floor4(radius_for({Functional::main_phi, {}}, p).value) == doctest::Approx(0.2455));

    ParamSet q = at(1.26);
    q.beta = 1;
    q.poly = Eigen::VectorXd::Constant(1, 2.0 * (std::sqrt(5.0) - 1.0));
    CHECK(floor4(radius_for({Functional::main_phi_star, {}}, q).value) == doctest::Approx(0.0128));
}

TEST_CASE("radii of the special-case equations")
{
    CHECK(floor4(radius_for(functional_id(Functional::cor_3_8), at(0.14)).value) == doctest::Approx(0.3398));
    CHECK(floor4(radius_for(functional_id(Functional::cor_3_5), at(0.14)).value) == doctest::Approx(0.4658));
    CHECK(floor4(radius_for(functional_id(Functional::cor_3_11), at(0.14)).value) == doctest::Approx(0.3108));
    CHECK(floor4(radius_for(functional_id(Functional::cor_3_12), at(0.14)).value) == doctest::Approx(0.3358));
    CHECK(floor4(radius_for(functional_id(Functional::cor_3_25), at(0.14)).value) == doctest::Approx(0.4368));
    CHECK(floor4(radius_for(functional_id(Functional::cor_3_13), at(0.14)).value) == doctest::Approx(0.3045));
    // M = 0: 16 r^2 + 9 r - 9 = 0
    CHECK(std::abs(radius_for(functional_id(Functional::cor_3_5), at(0.0)).value - 0.5197503511235185) < 1e-12);
}

TEST_CASE("radius_for results carry a certified bracket")
{
    for (Functional tag : corollary_tags()) {
        const FunctionalId id = functional_id(tag);
        for (double M : {0.0, 0.5, 1.29}) {
            const ParamSet p = at(M);
            const RootResult R = radius_for(id, p);
            CHECK(R.unique);
            CHECK(R.bracket.width() <= 1e-12);
            CHECK(evaluate(id, Radius(R.bracket.lo), p) < 0.0);
            CHECK(evaluate(id, Radius(R.bracket.hi), p) > 0.0);
        }
    }
}

TEST_CASE("analytic radii")
{
    const ParamSet none;
    CHECK(std::abs(radius_for({Functional::ana_Rp_N, {1}}, none).value - 1.0 / 3.0) < 1e-12);
    CHECK(std::abs(radius_for({Functional::ana_R_N, {1}}, none).value - (std::sqrt(5.0) - 2.0)) < 1e-12);
    const RootResult ra0 = radius_for({Functional::ana_r_a0, {0.0}}, none);
    CHECK(std::abs(ra0.value - (3.0 - std::sqrt(5.0)) / 2.0) < 1e-15);
    CHECK(ra0.iterations == 0);
    const RootResult rpa0 = radius_for({Functional::ana_rp_a0, {0.0}}, none);
    CHECK(std::abs(analytic_reference({Functional::ana_rp_a0, {0.0}}, rpa0.value)) < 1e-11);
    // a later-starting tail leaves room for a larger radius
    double prev = 0.0;
    for (int N = 1; N <= 8; ++N) {
        const double v = radius_for({Functional::ana_Rp_N, {double(N)}}, none).value;
        CHECK(v > prev);
        prev = v;
    }
    RadiusOptions opt;
    opt.certify = true;
    CHECK_THROWS_AS(radius_for({Functional::ana_R_N, {1}}, none, opt), std::invalid_argument);
}

TEST_CASE("certified radius")
{
    RadiusOptions opt;
    opt.certify = true;
    const RootResult R = radius_for(functional_id(Functional::cor_3_9), at(0.42), opt);
    REQUIRE(R.sharp.has_value());
    CHECK(*R.sharp);
}

TEST_CASE("starred wall")
{
    const double w = starred_wall(ClassParam(1.0));
    CHECK(std::abs(area_majorant(Radius(w), ClassParam(1.0)) - (1.0 - 1e-9)) < 1e-9);
    CHECK(starred_wall(ClassParam(1.0), AreaVariant::linear) == doctest::Approx(w));
    CHECK(starred_wall(ClassParam(0.5), AreaVariant::linear) < starred_wall(ClassParam(0.5)));
}
