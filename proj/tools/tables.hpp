#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "bohr/functionals.hpp"

namespace bohr::cli {

/// M values of every table column.
inline constexpr std::array<double, 9> table_M_grid{0.14, 0.28, 0.42, 0.56, 0.70,
                                                    0.84, 0.98, 1.12, 1.26};

/// Which functional each row of a table solves. Table 3 does not exist;
/// the labels run 1, 2, 4, 5, 6, 7.
struct TableSpec {
    int id;
    std::vector<Functional> rows;
};

const std::vector<int>& table_ids();
/// Throws std::invalid_argument for labels that do not exist.
const TableSpec& table_spec(int id);

/// Reference values, one vector of 9 per row, read from `dir/table<id>.csv`.
/// The file's header must list exactly table_M_grid and its rows must
/// name the functionals of table_spec(id), in order.
std::vector<std::vector<double>> load_expected(const std::filesystem::path& dir, int id);

/// Figure curves: figures 1-4 carry two curves, figure 5 one.
const std::vector<Functional>& figure_curves(int figure);

enum class Rounding { truncate, nearest };

/// Computed value reduced to 4 decimals, as an integer count of 1e-4.
long long four_decimals(double x, Rounding mode);
/// Whether `computed` prints as `expected` at 4 decimals under `mode`.
bool matches_4dp(double computed, double expected, Rounding mode);

/// Solve one table cell.
double table_root(Functional tag, double M, AreaVariant variant);

} // namespace bohr::cli
