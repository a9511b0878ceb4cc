#include "checks.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "bohr/extremal.hpp"
#include "bohr/oracles.hpp"
#include "bohr/radius.hpp"
#include "bohr/specfun.hpp"
#include "parallel.hpp"
#include "tables.hpp"

namespace bohr::cli {

namespace {

std::string fmt(const char* f, double a)
{
    char buf[96];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string count_detail(int bad, int total, const std::string& what)
{
    return std::to_string(total - bad) + "/" + std::to_string(total) + " " + what;
}

ParamSet table_params(double M, AreaVariant variant = AreaVariant::squared)
{
    ParamSet p;
    p.M = ClassParam(M);
    p.area = variant;
    return p;
}

constexpr double oracle_radii[] = {0.1, 0.3, 0.5, 0.7, 0.9};
constexpr long oracle_terms = 100000;

} // namespace

std::vector<TableRoot> solve_all_tables(AreaVariant variant)
{
    std::vector<TableRoot> cells;
    for (int id : table_ids())
        for (Functional tag : table_spec(id).rows)
            for (double M : table_M_grid)
                cells.push_back({id, tag, M, 0.0});
    const auto values = parallel_map<double>(cells.size(), [&](std::size_t i) {
        return table_root(cells[i].tag, cells[i].M, variant);
    });
    for (std::size_t i = 0; i < cells.size(); ++i)
        cells[i].value = values[i];
    return cells;
}

SuiteResult check_dilogarithm()
{
    SuiteResult res{"dilogarithm", true, {}};
    constexpr double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
    double worst_reflection = 0.0;
    for (int i = 1; i <= 1000; ++i) {
        const double x = i / 1001.0;
        const double lhs = li2(x) + li2(1.0 - x);
        const double rhs = zeta2 - std::log(x) * std::log1p(-x);
        worst_reflection = std::max(worst_reflection, std::abs(lhs - rhs));
    }
    double worst_series = 0.0;
    for (int i = 0; i <= 90; ++i) {
        const double x = i / 100.0;
        const double d = std::abs(li2(x) - li2_series_oracle(x, oracle_terms));
        worst_series = std::max(worst_series, d - li2_series_remainder(x, oracle_terms));
    }
    const double half = li2(0.5) - (zeta2 / 2.0 - 0.5 * std::numbers::ln2 * std::numbers::ln2);
    res.pass = worst_reflection <= 1e-12 && worst_series <= 1e-12 && std::abs(half) <= 1e-14
               && li2(1.0) == zeta2;
    res.detail = "reflection max err " + fmt("%.1e", worst_reflection) + ", series max excess "
                 + fmt("%.1e", std::max(worst_series, 0.0));
    return res;
}

SuiteResult check_oracles()
{
    SuiteResult res{"oracles", true, {}};
    int bad = 0, total = 0;
    double worst = 0.0;
    const auto agree = [&](double closed, double value, double remainder) {
        ++total;
        const double d = std::abs(closed - value);
        worst = std::max(worst, d);
        if (!(remainder <= 1e-10 && d <= 1e-10 + remainder))
            ++bad;
    };
    for (double M : {0.0, 0.14, 0.7, 1.26}) {
        const ClassParam cm(M);
        for (double r : oracle_radii) {
            const Radius cr(r);
            auto g = oracle::growth(r, M, oracle_terms);
            agree(growth_majorant(cr, cm), g.value, g.remainder);
            for (int N = 1; N <= 6; ++N) {
                auto t = oracle::tail(r, M, N, oracle_terms);
                agree(tail_majorant(cr, cm, N), t.value, t.remainder);
                agree(rogosinski_head(cr, cm, N), oracle::rogosinski_head(r, M, N), 0.0);
            }
            for (auto [variant, c] : {std::pair{AreaVariant::squared, 4.0 * M * M},
                                      std::pair{AreaVariant::linear, 4.0 * M}}) {
                auto a = oracle::area(r, c, oracle_terms);
                agree(area_majorant(cr, cm, variant), a.value, a.remainder);
            }
        }
        auto d = oracle::boundary_distance(M, 10 * oracle_terms);
        agree(boundary_distance(cm), d.value, d.remainder);
    }
    for (double r : oracle_radii)
        for (int t = 0; t <= 4; ++t) {
            auto q = oracle::quadratic_tail(r, t, oracle_terms);
            agree(quadratic_tail(Radius(r), t), q.value, q.remainder);
        }
    res.pass = bad == 0;
    res.detail = count_detail(bad, total, "closed forms agree") + ", max diff " + fmt("%.1e", worst);
    return res;
}

SuiteResult check_monotonicity(const std::vector<TableRoot>& roots)
{
    SuiteResult res{"monotonicity", true, {}};
    int scans_bad = 0;
    const auto scans = parallel_map<int>(roots.size(), [&](std::size_t i) {
        const FunctionalId id = functional_id(roots[i].tag);
        const ParamSet p = table_params(roots[i].M);
        const auto f = [&](double r) { return evaluate(id, Radius(r), p); };
        return verify_unique(f, radius_domain(id, p), 200) ? 0 : 1;
    });
    for (int s : scans)
        scans_bad += s;

    int rows_bad = 0, rows = 0;
    for (std::size_t i = 0; i < roots.size(); i += table_M_grid.size()) {
        ++rows;
        for (std::size_t j = 1; j < table_M_grid.size(); ++j)
            if (!(roots[i + j].value < roots[i + j - 1].value)) {
                ++rows_bad;
                break;
            }
    }

    int fm_bad = 0;
    constexpr double h = 1e-6;
    for (double M : table_M_grid)
        for (int k = 1; k < 100; ++k) {
            const double r = k / 100.0;
            const double dF = area_majorant(Radius(r + h), ClassParam(M)) - area_majorant(Radius(r - h), ClassParam(M));
            if (!(dF > 0.0))
                ++fm_bad;
        }

    res.pass = scans_bad == 0 && rows_bad == 0 && fm_bad == 0;
    res.detail = count_detail(scans_bad, int(roots.size()), "grid scans increasing") + ", "
                 + count_detail(rows_bad, rows, "rows decreasing in M") + ", "
                 + count_detail(fm_bad, 99 * int(table_M_grid.size()), "F_M slopes positive");
    return res;
}

SuiteResult check_sharpness(const std::vector<TableRoot>& roots)
{
    SuiteResult res{"sharpness", true, {}};
    const auto verdicts = parallel_map<int>(roots.size(), [&](std::size_t i) {
        RootResult R;
        R.value = roots[i].value;
        return sharpness_certificate(functional_id(roots[i].tag), table_params(roots[i].M), R, 1e-4).holds ? 0 : 1;
    });
    int bad = 0;
    for (int v : verdicts)
        bad += v;
    res.pass = bad == 0;
    res.detail = count_detail(bad, int(roots.size()), "roots certified at R -/+ 1e-4");
    return res;
}

SuiteResult check_quadrature()
{
    SuiteResult res{"quadrature", true, {}};
    struct Case {
        double M, r;
    };
    std::vector<Case> cases;
    for (double M : {0.14, 0.7, 1.26})
        for (double r : {0.3, 0.5, 0.7, 0.9})
            cases.push_back({M, r});
    const auto diffs = parallel_map<std::pair<double, double>>(cases.size(), [&](std::size_t i) {
        const ClassParam M(cases[i].M);
        const Radius r(cases[i].r);
        const double q = area_quadrature(M, cases[i].r);
        return std::pair{std::abs(q - area_majorant(r, M, AreaVariant::squared)),
                         std::abs(q - area_majorant(r, M, AreaVariant::linear))};
    });
    double worst_sq = 0.0, best_lin = 1e300;
    for (auto [sq, lin] : diffs) {
        worst_sq = std::max(worst_sq, sq);
        best_lin = std::min(best_lin, lin);
    }
    // M = 1 is the only place the two variants coincide; it is not sampled
    res.pass = worst_sq <= 1e-6 && best_lin > 1e-6;
    res.detail = "squared max diff " + fmt("%.1e", worst_sq) + ", linear min diff " + fmt("%.1e", best_lin);
    return res;
}

SuiteResult check_sampled_class(const std::vector<TableRoot>& roots, std::uint64_t seed, int samples)
{
    SuiteResult res{"sampled-class", true, {}};
    const auto violations = parallel_map<int>(roots.size(), [&](std::size_t i) {
        const FunctionalId id = functional_id(roots[i].tag);
        const ParamSet p = table_params(roots[i].M);
        const Radius r(0.9 * roots[i].value);
        const Eigen::Index K = required_terms(id, p, r);
        const double d = boundary_distance(p.M);
        int bad = 0;
        for (int s = 0; s < samples; ++s) {
            const std::uint64_t cell_seed = seed * 1000003u + i * 4099u + std::uint64_t(s);
            const CoefficientSeq c = sample_class_coefficients(p.M, cell_seed, K);
            if (!(lhs_bruteforce(id, p, r, c).value <= d))
                ++bad;
        }
        return bad;
    });
    int bad = 0;
    for (int v : violations)
        bad += v;
    res.pass = bad == 0;
    res.detail = std::to_string(bad) + " violations in " + std::to_string(samples * int(roots.size()))
                 + " members at r = 0.9 R";
    return res;
}

SuiteResult check_analytic_constants()
{
    SuiteResult res{"analytic-constants", true, {}};
    const ParamSet none;
    const auto root = [&](Functional tag, std::vector<double> extras) {
        return radius_for(FunctionalId{tag, std::move(extras)}, none).value;
    };
    const auto& k = reference_constants();
    const double rp1 = root(Functional::ana_Rp_N, {1});
    const double r1 = root(Functional::ana_R_N, {1});
    const double ra0 = root(Functional::ana_r_a0, {0});
    const bool ok = std::abs(rp1 - 1.0 / 3.0) <= 1e-10 && std::abs(r1 - (std::sqrt(5.0) - 2.0)) <= 1e-10
                    && std::abs(ra0 - (3.0 - std::sqrt(5.0)) / 2.0) <= 1e-12
                    && std::abs(k.quintic_root - 0.567284) <= 1e-4 && std::abs(k.quintic_lambda - 18.6095) <= 1e-4
                    && std::abs(k.quartic_root - 0.537869) <= 1e-4 && std::abs(k.quartic_lambda - 16.4618) <= 1e-4;
    res.pass = ok;
    res.detail = "R'_1 " + fmt("%.12f", rp1) + ", R_1 " + fmt("%.12f", r1) + ", quintic lambda "
                 + fmt("%.6f", k.quintic_lambda) + ", quartic lambda " + fmt("%.6f", k.quartic_lambda);
    return res;
}

std::vector<SuiteResult> run_verify(const VerifyOptions& opt)
{
    std::vector<SuiteResult> out;
    const auto guarded = [&](const char* name, auto&& fn) {
        try {
            out.push_back(fn());
        } catch (const std::exception& e) {
            out.push_back({name, false, std::string("error: ") + e.what()});
        }
    };
    guarded("dilogarithm", check_dilogarithm);
    guarded("oracles", check_oracles);
    guarded("analytic-constants", check_analytic_constants);

    std::vector<TableRoot> roots;
    try {
        roots = solve_all_tables();
    } catch (const std::exception& e) {
        out.push_back({"table-roots", false, std::string("error: ") + e.what()});
        return out;
    }
    guarded("monotonicity", [&] { return check_monotonicity(roots); });
    guarded("sharpness", [&] { return check_sharpness(roots); });
    if (!opt.quick)
        guarded("quadrature", check_quadrature);
    guarded("sampled-class", [&] { return check_sampled_class(roots, opt.seed, opt.quick ? 20 : 200); });
    return out;
}

} // namespace bohr::cli
