#include "tables.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "bohr/radius.hpp"

namespace bohr::cli {

namespace {

std::vector<std::string> split_csv(const std::string& line)
{
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ','))
        out.push_back(cell);
    return out;
}

} // namespace

const std::vector<int>& table_ids()
{
    static const std::vector<int> ids{1, 2, 4, 5, 6, 7};
    return ids;
}

const TableSpec& table_spec(int id)
{
    static const std::vector<TableSpec> specs{
        {1, {Functional::cor_3_8, Functional::cor_3_9}},
        {2, {Functional::cor_3_5, Functional::cor_3_6}},
        {4, {Functional::cor_3_11}},
        {5, {Functional::cor_3_12}},
        {6, {Functional::cor_3_25, Functional::cor_3_26}},
        {7, {Functional::cor_3_13}},
    };
    for (const auto& s : specs)
        if (s.id == id)
            return s;
    if (id == 3)
        throw std::invalid_argument("there is no table 3; tables are labelled 1, 2, 4, 5, 6, 7");
    throw std::invalid_argument("unknown table " + std::to_string(id));
}

std::vector<std::vector<double>> load_expected(const std::filesystem::path& dir, int id)
{
    const TableSpec& spec = table_spec(id);
    const auto path = dir / ("table" + std::to_string(id) + ".csv");
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());

    std::vector<std::vector<double>> rows;
    bool header_seen = false;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#')
            continue;
        const auto cells = split_csv(line);
        if (cells.size() != table_M_grid.size() + 1)
            throw std::runtime_error(path.string() + ": expected 10 columns");
        if (!header_seen) {
            for (std::size_t j = 0; j < table_M_grid.size(); ++j)
                if (std::stod(cells[j + 1]) != table_M_grid[j])
                    throw std::runtime_error(path.string() + ": M grid does not match");
            header_seen = true;
            continue;
        }
        if (rows.size() >= spec.rows.size() || parse_functional(cells[0]) != spec.rows[rows.size()])
            throw std::runtime_error(path.string() + ": unexpected row '" + cells[0] + "'");
        std::vector<double> values;
        for (std::size_t j = 1; j < cells.size(); ++j)
            values.push_back(std::stod(cells[j]));
        rows.push_back(std::move(values));
    }
    if (rows.size() != spec.rows.size())
        throw std::runtime_error(path.string() + ": missing rows");
    return rows;
}

const std::vector<Functional>& figure_curves(int figure)
{
    static const std::vector<std::vector<Functional>> curves{
        {Functional::cor_3_8, Functional::cor_3_9},
        {Functional::cor_3_5, Functional::cor_3_6},
        {Functional::cor_3_11, Functional::cor_3_12},
        {Functional::cor_3_25, Functional::cor_3_26},
        {Functional::cor_3_13},
    };
    if (figure < 1 || figure > 5)
        throw std::invalid_argument("figure must be 1..5");
    return curves[figure - 1];
}

long long four_decimals(double x, Rounding mode)
{
    const double scaled = x * 1e4;
    if (mode == Rounding::nearest)
        return std::llround(scaled); // half away from zero
    return static_cast<long long>(std::floor(scaled));
}

bool matches_4dp(double computed, double expected, Rounding mode)
{
    return four_decimals(computed, mode) == std::llround(expected * 1e4);
}

double table_root(Functional tag, double M, AreaVariant variant)
{
    ParamSet p;
    p.M = ClassParam(M);
    p.area = variant;
    return radius_for(functional_id(tag), p).value;
}

} // namespace bohr::cli
