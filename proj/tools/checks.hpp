#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bohr/functionals.hpp"

namespace bohr::cli {

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// One solved table cell.
struct TableRoot {
    int table;
    Functional tag;
    double M;
    double value;
};

/// Roots of every table row at every grid M, solved in parallel, in
/// table / row / column order.
std::vector<TableRoot> solve_all_tables(AreaVariant variant = AreaVariant::squared);

SuiteResult check_dilogarithm();
SuiteResult check_oracles();
SuiteResult check_monotonicity(const std::vector<TableRoot>& roots);
SuiteResult check_sharpness(const std::vector<TableRoot>& roots);
SuiteResult check_quadrature();
SuiteResult check_sampled_class(const std::vector<TableRoot>& roots, std::uint64_t seed, int samples);
SuiteResult check_analytic_constants();

struct VerifyOptions {
    std::uint64_t seed = 42;
    bool quick = false;
};

std::vector<SuiteResult> run_verify(const VerifyOptions& opt);

} // namespace bohr::cli
