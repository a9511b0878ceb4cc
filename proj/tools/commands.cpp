#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <CLI11.hpp>

#include "bohr/radius.hpp"
#include "checks.hpp"
#include "parallel.hpp"
#include "tables.hpp"

#ifndef BOHR_TABLE_DIR
#define BOHR_TABLE_DIR "tests/data/tables"
#endif

namespace bohr::cli {

namespace {

std::string fmt(const char* f, double a)
{
    char buf[96];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

const std::map<std::string, AreaVariant> variant_names{
    {"squared", AreaVariant::squared},
    {"linear", AreaVariant::linear},
};

const std::map<std::string, Rounding> rounding_names{
    {"truncate", Rounding::truncate},
    {"nearest", Rounding::nearest},
};

std::string_view variant_label(AreaVariant v)
{
    return v == AreaVariant::squared ? "squared (4M^2)" : "linear (4M)";
}

Eigen::VectorXd parse_poly(const std::string& text)
{
    std::vector<double> values;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        std::size_t used = 0;
        const double v = std::stod(cell, &used);
        if (used != cell.size())
            throw std::invalid_argument("--poly: '" + cell + "' is not a number");
        values.push_back(v);
    }
    return Eigen::Map<Eigen::VectorXd>(values.data(), Eigen::Index(values.size()));
}

struct RadiusArgs {
    std::string functional;
    double M = 0.0, beta = 0.0, mu = 0.0, lambda = 0.0;
    int m = 1, N = 1;
    std::string poly;
    AreaVariant variant = AreaVariant::squared;
    double tol = 1e-12;
    double a0 = 0.0;
    double lambda2 = 0.0;
    bool certify = false;
};

int cmd_radius(const RadiusArgs& a, const CLI::App& sub, std::ostream& out)
{
    const Functional tag = parse_functional(a.functional);
    FunctionalId id{tag, {}};
    switch (tag) {
    case Functional::cor_3_12:
        id.extras = {sub.count("--lambda2") ? a.lambda2 : reference_constants().quartic_lambda};
        break;
    case Functional::ana_R_mN:
    case Functional::ana_Rp_mN:
        id.extras = {double(a.m), double(a.N)};
        break;
    case Functional::ana_R_N:
    case Functional::ana_Rp_N:
        id.extras = {double(a.N)};
        break;
    case Functional::ana_r_a0:
    case Functional::ana_rp_a0:
        id.extras = {a.a0};
        break;
    default:
        break;
    }

    ParamSet p;
    p.beta = a.beta;
    p.mu = a.mu;
    p.lambda = a.lambda;
    p.m = a.m;
    p.N = a.N;
    p.poly = parse_poly(a.poly);
    p.M = ClassParam(a.M);
    p.area = a.variant;
    p.validate();

    RadiusOptions opt;
    opt.solve.xtol = a.tol;
    opt.solve.ftol = a.tol;
    opt.certify = a.certify;
    const RootResult R = radius_for(id, p, opt);

    out << "functional " << to_string(tag) << '\n';
    out << "value      " << fmt("%.12f", R.value) << '\n';
    out << "residual   " << fmt("%.3e", R.residual) << '\n';
    out << "bracket    [" << fmt("%.15f", R.bracket.lo) << ", " << fmt("%.15f", R.bracket.hi) << "]\n";
    out << "iterations " << R.iterations << '\n';
    out << "unique     " << (R.unique ? "yes" : "no") << '\n';
    if (R.sharp)
        out << "sharp      " << (*R.sharp ? "yes" : "no") << '\n';
    return exit_ok;
}

struct TableArgs {
    int table = 0;
    AreaVariant variant = AreaVariant::squared;
    Rounding rounding = Rounding::truncate;
    bool no_fail = false;
    std::string data_dir = BOHR_TABLE_DIR;
};

int cmd_table(const TableArgs& a, std::ostream& out, std::ostream& err)
{
    const TableSpec& spec = table_spec(a.table);
    const auto expected = load_expected(a.data_dir, a.table);

    const std::size_t cols = table_M_grid.size();
    const auto computed = parallel_map<double>(spec.rows.size() * cols, [&](std::size_t i) {
        return table_root(spec.rows[i / cols], table_M_grid[i % cols], a.variant);
    });

    out << "M,computed,expected,abs_diff,match4dp\n";
    double max_diff = 0.0;
    int matched = 0;
    for (std::size_t i = 0; i < computed.size(); ++i) {
        const double want = expected[i / cols][i % cols];
        const double diff = std::abs(computed[i] - want);
        const bool ok = matches_4dp(computed[i], want, a.rounding);
        max_diff = std::max(max_diff, diff);
        matched += ok;
        out << fmt("%.2f", table_M_grid[i % cols]) << ',' << fmt("%.10f", computed[i]) << ','
            << fmt("%.4f", want) << ',' << fmt("%.3e", diff) << ',' << (ok ? "true" : "false") << '\n';
    }
    const bool all = matched == int(computed.size());
    out << "max,,," << fmt("%.3e", max_diff) << ',' << (all ? "true" : "false") << '\n';

    err << "table " << a.table << ": variant " << variant_label(a.variant) << " matches " << matched << '/'
        << computed.size() << " entries at 4 decimals ("
        << (a.rounding == Rounding::truncate ? "truncated" : "rounded") << ")\n";
    return all || a.no_fail ? exit_ok : exit_mismatch;
}

struct FigureArgs {
    int figure = 0;
    int samples = 100;
    int curve = 1;
    AreaVariant variant = AreaVariant::squared;
};

int cmd_figure(const FigureArgs& a, std::ostream& out)
{
    const auto& curves = figure_curves(a.figure);
    if (a.curve < 1 || a.curve > int(curves.size()))
        throw std::invalid_argument("figure " + std::to_string(a.figure) + " has "
                                    + std::to_string(curves.size()) + " curve(s)");
    const Functional tag = curves[a.curve - 1];
    const double M_max = class_param_sup();
    const auto M_at = [&](std::size_t i) { return M_max * double(i + 1) / double(a.samples + 1); };
    const auto R = parallel_map<double>(std::size_t(a.samples), [&](std::size_t i) {
        return table_root(tag, M_at(i), a.variant);
    });

    out << "# figure " << a.figure << " curve " << a.curve << ": " << to_string(tag) << ", variant "
        << variant_label(a.variant) << '\n';
    out << "# M\tR\n";
    for (std::size_t i = 0; i < R.size(); ++i)
        out << fmt("%.8f", M_at(i)) << '\t' << fmt("%.10f", R[i]) << '\n';
    return exit_ok;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out)
{
    const auto results = run_verify(opt);
    std::vector<std::string> failing;
    for (const auto& r : results) {
        out << "suite " << r.name << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.detail << ")\n";
        if (!r.pass)
            failing.push_back(r.name);
    }
    out << "summary: " << results.size() - failing.size() << '/' << results.size() << " suites passed\n";
    if (failing.empty())
        return exit_ok;
    out << "failed:";
    for (const auto& f : failing)
        out << ' ' << f;
    out << '\n';
    return exit_failed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Sharp Bohr and Bohr-Rogosinski radii for harmonic mappings with bounded coefficients", "bohr"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "show help for every subcommand");
    app.set_config("--config", "", "read flags from a key=value file");
    app.fallthrough();

    RadiusArgs ra;
    auto* radius = app.add_subcommand("radius", "solve one root equation");
    radius->add_option("--functional", ra.functional, "equation tag, e.g. main, main-star, cor3.8, ana-rpn")->required();
    radius->add_option("--M", ra.M, "class parameter M in [0, 1.29434972)");
    radius->add_option("--beta", ra.beta, "weight of |f(z)|^m");
    radius->add_option("--mu", ra.mu, "weight of the Rogosinski head");
    radius->add_option("--lambda", ra.lambda, "weight of the squared tail");
    radius->add_option("--m", ra.m, "power of |f(z)|");
    radius->add_option("--N", ra.N, "first index of the tail");
    radius->add_option("--poly", ra.poly, "area polynomial coefficients lambda_1,lambda_2,...");
    radius->add_option("--variant", ra.variant, "F_M coefficient: squared (4M^2) or linear (4M)")
        ->transform(CLI::CheckedTransformer(variant_names, CLI::ignore_case));
    radius->add_option("--tol", ra.tol, "bracket width and residual tolerance")->check(CLI::Range(1e-14, 1e-3));
    radius->add_option("--a0", ra.a0, "|a_0| for ana-ra0 and ana-rpa0");
    radius->add_option("--lambda2", ra.lambda2, "second area weight for cor3.12");
    radius->add_flag("--certify", ra.certify, "attach a sharpness certificate against the extremal function");

    TableArgs ta;
    auto* table = app.add_subcommand("table", "reproduce a reference table as CSV");
    table->add_option("--table", ta.table, "table label: 1, 2, 4, 5, 6 or 7 (there is no table 3)")->required();
    table->add_option("--variant", ta.variant, "F_M coefficient: squared or linear")
        ->transform(CLI::CheckedTransformer(variant_names, CLI::ignore_case));
    table->add_option("--rounding", ta.rounding, "how computed roots are reduced to 4 decimals")
        ->transform(CLI::CheckedTransformer(rounding_names, CLI::ignore_case));
    table->add_flag("--no-fail", ta.no_fail, "exit 0 even when entries mismatch");
    table->add_option("--data-dir", ta.data_dir, "directory holding table<N>.csv");

    FigureArgs fa;
    auto* figure = app.add_subcommand("figure", "emit R(M) curve data as TSV");
    figure->add_option("--figure", fa.figure, "figure number")->required()->check(CLI::Range(1, 5));
    figure->add_option("--samples", fa.samples, "number of M values")->check(CLI::Range(50, 100000));
    figure->add_option("--curve", fa.curve, "curve of a two-curve figure")->check(CLI::Range(1, 2));
    figure->add_option("--variant", fa.variant, "F_M coefficient: squared or linear")
        ->transform(CLI::CheckedTransformer(variant_names, CLI::ignore_case));

    VerifyOptions va;
    auto* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("--seed", va.seed, "seed of the sampled-class check");
    verify->add_flag("--quick", va.quick, "skip quadrature and sample fewer class members");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return exit_ok;
        }
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (*radius)
            return cmd_radius(ra, *radius, out);
        if (*table)
            return cmd_table(ta, out, err);
        if (*figure)
            return cmd_figure(fa, out);
        return cmd_verify(va, out);
    } catch (const NoSignChange& e) {
        err << "solver error: " << e.what() << '\n';
        return exit_solver;
    } catch (const IterationBudgetExceeded& e) {
        err << "solver error: " << e.what() << '\n';
        return exit_solver;
    } catch (const TruncationError& e) {
        err << "solver error: " << e.what() << '\n';
        return exit_solver;
    } catch (const QuadratureError& e) {
        err << "solver error: " << e.what() << '\n';
        return exit_solver;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace bohr::cli
