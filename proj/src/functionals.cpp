#include "bohr/functionals.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bohr/radius.hpp"

namespace bohr {

namespace {

constexpr double ln4 = 2.0 * std::numbers::ln2;

struct TagName {
    Functional tag;
    std::string_view name;
};

constexpr std::array<TagName, 19> tag_names{{
    {Functional::main_phi, "main"},
    {Functional::main_phi_star, "main-star"},
    {Functional::cor_3_8, "cor3.8"},
    {Functional::cor_3_9, "cor3.9"},
    {Functional::cor_3_5, "cor3.5"},
    {Functional::cor_3_6, "cor3.6"},
    {Functional::cor_3_11, "cor3.11"},
    {Functional::cor_3_12, "cor3.12"},
    {Functional::cor_3_25, "cor3.25"},
    {Functional::cor_3_26, "cor3.26"},
    {Functional::cor_3_13, "cor3.13"},
    {Functional::ana_R_mN, "ana-rmn"},
    {Functional::ana_Rp_mN, "ana-rpmn"},
    {Functional::ana_R_N, "ana-rn"},
    {Functional::ana_Rp_N, "ana-rpn"},
    {Functional::ana_r_a0, "ana-ra0"},
    {Functional::ana_rp_a0, "ana-rpa0"},
    {Functional::ana_lambda_quintic, "ana-quintic"},
    {Functional::ana_lambda_quartic, "ana-quartic"},
}};

double refined_weight() { return 2.0 * (std::sqrt(5.0) - 1.0); }

// Shared body of phi_main / phi_star; `poly_arg` maps F_M(r) to the
// polynomial argument.
template <typename PolyArg>
double phi_impl(Radius radius, const ParamSet& p, PolyArg poly_arg)
{
    p.validate();
    const double r = radius.value();
    const double M = p.M.value();
    const double d = boundary_distance(p.M);
    const double G = growth_majorant(radius, p.M);
    const double edge = 1.0 + r / (1.0 - r);

    double value = p.beta * std::pow(G, p.m) - d;
    if (p.poly.size() > 0)
        value += poly_eval(poly_arg(area_majorant(radius, p.M, p.area)), p.poly);

    if (p.N <= 4) {
        const CorollaryHelpers h = corollary_helpers(radius, p.M, p.m);
        const double r2 = r * r;
        switch (p.N) {
        case 1:
            value += r + 2.0 * M * h.J3 + p.lambda * edge * h.J1;
            break;
        case 2:
            value += 2.0 * M * h.J3 + p.lambda * edge * h.J1;
            break;
        case 3:
            value += 2.0 * M * (h.J3 - r2 / 2.0) + p.mu * std::pow(r, 3) / (1.0 - r)
                     + p.lambda * edge * (h.J1 - r2);
            break;
        default:
            value += 2.0 * M * (h.J3 - r2 / 2.0 - r2 * r / 6.0) + p.mu * std::pow(r, 4) / (1.0 - r)
                     + p.lambda * edge * (h.J1 - r2);
            break;
        }
        return value;
    }
    value += tail_majorant(radius, p.M, p.N) + p.mu * rogosinski_head(radius, p.M, p.N)
             + 4.0 * M * M * p.lambda * edge * quadratic_tail(radius, p.t());
    return value;
}

double starred_ratio(double F)
{
    if (!(F < 1.0))
        throw DomainError("starred functional undefined: F_M(r) >= 1");
    return F / (1.0 - F);
}

double require_int(double v, const char* what)
{
    if (!(v >= 1.0) || std::floor(v) != v)
        throw std::invalid_argument(std::string(what) + " must be a positive integer");
    return v;
}

} // namespace

void ParamSet::validate() const
{
    if (!(beta >= 0.0) || !(mu >= 0.0) || !(lambda >= 0.0))
        throw DomainError("beta, mu and lambda must be nonnegative");
    if (m < 1 || N < 1)
        throw DomainError("m and N must be positive integers");
    if ((poly.array() < 0.0).any() || poly.hasNaN())
        throw DomainError("polynomial weights must be nonnegative");
}

std::size_t extras_arity(Functional tag)
{
    switch (tag) {
    case Functional::cor_3_12:
    case Functional::ana_R_N:
    case Functional::ana_Rp_N:
    case Functional::ana_r_a0:
    case Functional::ana_rp_a0:
        return 1;
    case Functional::ana_R_mN:
    case Functional::ana_Rp_mN:
        return 2;
    default:
        return 0;
    }
}

void FunctionalId::validate() const
{
    if (extras.size() != extras_arity(tag))
        throw std::invalid_argument("functional " + std::string(to_string(tag)) + " expects "
                                    + std::to_string(extras_arity(tag)) + " extra parameter(s), got "
                                    + std::to_string(extras.size()));
}

bool is_corollary(Functional tag)
{
    return tag >= Functional::cor_3_8 && tag <= Functional::cor_3_13;
}

bool is_analytic(Functional tag) { return tag >= Functional::ana_R_mN; }

bool is_starred(Functional tag)
{
    return tag == Functional::main_phi_star || tag == Functional::cor_3_25
           || tag == Functional::cor_3_26 || tag == Functional::cor_3_13;
}

std::string_view to_string(Functional tag)
{
    for (const auto& tn : tag_names)
        if (tn.tag == tag)
            return tn.name;
    return "unknown";
}

Functional parse_functional(std::string_view name)
{
    for (const auto& tn : tag_names)
        if (tn.name == name)
            return tn.tag;
    throw std::invalid_argument("unknown functional '" + std::string(name) + "'");
}

const std::vector<Functional>& corollary_tags()
{
    static const std::vector<Functional> tags{
        Functional::cor_3_8,  Functional::cor_3_9,  Functional::cor_3_5,
        Functional::cor_3_6,  Functional::cor_3_11, Functional::cor_3_12,
        Functional::cor_3_25, Functional::cor_3_26, Functional::cor_3_13,
    };
    return tags;
}

FunctionalId functional_id(Functional tag)
{
    if (tag == Functional::cor_3_12)
        return {tag, {reference_constants().quartic_lambda}};
    if (extras_arity(tag) != 0)
        throw std::invalid_argument("functional " + std::string(to_string(tag))
                                    + " has no default extras");
    return {tag, {}};
}

double phi_main(Radius r, const ParamSet& p)
{
    return phi_impl(r, p, [](double F) { return F; });
}

double phi_star(Radius r, const ParamSet& p)
{
    return phi_impl(r, p, starred_ratio);
}

ParamSet corollary_params(const FunctionalId& id, ClassParam M, AreaVariant variant)
{
    id.validate();
    ParamSet p;
    p.M = M;
    p.area = variant;
    p.N = 1;
    p.m = 1;
    switch (id.tag) {
    case Functional::cor_3_8:
        p.beta = 1.0;
        p.lambda = 1.0;
        break;
    case Functional::cor_3_9:
        p.beta = 1.0;
        p.lambda = 1.0;
        p.m = 2;
        break;
    case Functional::cor_3_5:
    case Functional::cor_3_25:
        p.poly = Eigen::VectorXd::Constant(1, 16.0 / 9.0);
        break;
    case Functional::cor_3_6:
    case Functional::cor_3_26:
        p.poly = Eigen::VectorXd::Constant(1, 9.0 / 8.0);
        break;
    case Functional::cor_3_11:
    case Functional::cor_3_13:
        p.beta = 1.0;
        p.poly = Eigen::VectorXd::Constant(1, refined_weight());
        break;
    case Functional::cor_3_12:
        p.beta = 1.0;
        p.m = 2;
        p.poly.resize(2);
        p.poly << 16.0 / 9.0, id.extras[0];
        break;
    default:
        throw std::invalid_argument("corollary_params: not a corollary tag");
    }
    return p;
}

double corollary_lhs(const FunctionalId& id, Radius radius, ClassParam Mp, AreaVariant variant)
{
    id.validate();
    const double r = radius.value();
    const double M = Mp.value();
    const double L = std::log1p(-r);
    const auto F = [&] { return area_majorant(radius, Mp, variant); };
    const auto J1 = [&] { return corollary_helpers(radius, Mp, 1).J1; };
    const double G = growth_majorant(radius, Mp);
    const double edge = 1.0 + r / (1.0 - r);
    // r - 1 + 2M((1-r)(ln(1-r) - 1) + ln 4): shared by the beta = 0 family
    const double bare = r - 1.0 + 2.0 * M * ((1.0 - r) * (L - 1.0) + ln4);
    // r - 1 + 2M(r - 1 + ln 4 + (1-r) ln(1-r)): same quantity, other grouping
    const double bare_alt = r - 1.0 + 2.0 * M * (r - 1.0 + ln4 + (1.0 - r) * L);

    switch (id.tag) {
    case Functional::cor_3_8:
        // ln(1-r)^2 read as ln((1-r)^2)
        return 2.0 * r - 1.0 + 2.0 * M * (2.0 * r - 1.0 + ln4 + (1.0 - r) * 2.0 * L) + edge * J1();
    case Functional::cor_3_9:
        return G * G + r - 1.0 + 2.0 * M * ((1.0 - r) * (L - 1.0) + ln4) + edge * J1();
    case Functional::cor_3_5:
        return bare + 16.0 / 9.0 * F();
    case Functional::cor_3_6:
        return bare + 9.0 / 8.0 * F();
    case Functional::cor_3_11:
        // the |f(z)| term of the inequality contributes G_M(r)
        return G + bare_alt + refined_weight() * F();
    case Functional::cor_3_12: {
        const double f = F();
        return G * G + bare_alt + 16.0 / 9.0 * f + id.extras[0] * f * f;
    }
    case Functional::cor_3_25:
        return bare + 16.0 / 9.0 * starred_ratio(F());
    case Functional::cor_3_26:
        return bare + 9.0 / 8.0 * starred_ratio(F());
    case Functional::cor_3_13:
        return G + bare_alt + refined_weight() * starred_ratio(F());
    default:
        throw std::invalid_argument("corollary_lhs: not a corollary tag");
    }
}

double analytic_reference(const FunctionalId& id, double r)
{
    id.validate();
    const auto& x = id.extras;
    switch (id.tag) {
    case Functional::ana_R_mN: {
        const double m = require_int(x[0], "m"), N = require_int(x[1], "N");
        return 2.0 * (1.0 + std::pow(r, m)) * std::pow(r, N) - (1.0 - r) * (1.0 - std::pow(r, m));
    }
    case Functional::ana_Rp_mN: {
        const double m = require_int(x[0], "m"), N = require_int(x[1], "N");
        return (1.0 + std::pow(r, m)) * std::pow(r, N) - (1.0 - r) * (1.0 - std::pow(r, m));
    }
    case Functional::ana_R_N:
        return 2.0 * (1.0 + r) * std::pow(r, require_int(x[0], "N")) - (1.0 - r) * (1.0 - r);
    case Functional::ana_Rp_N:
        return (1.0 + r) * std::pow(r, require_int(x[0], "N")) - (1.0 - r) * (1.0 - r);
    case Functional::ana_r_a0:
    case Functional::ana_rp_a0: {
        const double a0 = x[0];
        if (!(a0 >= 0.0 && a0 < 1.0))
            throw DomainError("|a_0| must lie in [0, 1)");
        if (id.tag == Functional::ana_r_a0)
            return 2.0 / (3.0 + a0 + std::sqrt(5.0) * (1.0 + a0));
        return (1.0 - a0 * a0 * a0) * r * r * r - (1.0 + 2.0 * a0) * r * r - 2.0 * r + 1.0;
    }
    case Functional::ana_lambda_quintic:
        return -405.0 + r * (473.0 + r * (402.0 + r * (38.0 + r * (3.0 + r))));
    case Functional::ana_lambda_quartic:
        return -513.0 + r * (910.0 + r * (80.0 + r * (2.0 + r)));
    default:
        throw std::invalid_argument("analytic_reference: not an analytic tag");
    }
}

const ReferenceConstants& reference_constants()
{
    static const ReferenceConstants constants = [] {
        const auto root_of = [](Functional tag) {
            const FunctionalId id{tag, {}};
            const auto f = [&](double r) { return analytic_reference(id, r); };
            return solve(f, bracket(f, 0.0, 1.0)).value;
        };
        ReferenceConstants c{};
        c.bohr_radius = 1.0 / 3.0;
        c.rogosinski_radius = 0.5;
        c.area_weight = 16.0 / 9.0;
        c.area_weight_squared = 9.0 / 8.0;
        c.refined_radius = std::sqrt(5.0) - 2.0;
        c.refined_weight = refined_weight();

        const double a = root_of(Functional::ana_lambda_quintic);
        c.quintic_root = a;
        c.quintic_lambda = 4.0 * (486.0 - 261.0 * a - 324.0 * a * a + 2.0 * std::pow(a, 3)
                                  + 30.0 * std::pow(a, 4) + 3.0 * std::pow(a, 5))
                           / (81.0 * std::pow(1.0 + a, 3) * (3.0 - 5.0 * a));

        const double b = root_of(Functional::ana_lambda_quartic);
        c.quartic_root = b;
        c.quartic_lambda = (-81.0 + 1044.0 * b + 54.0 * b * b - 116.0 * std::pow(b, 3) - 5.0 * std::pow(b, 4))
                           / (162.0 * (b + 1.0) * (b + 1.0) * (2.0 * b - 1.0));
        return c;
    }();
    return constants;
}

double evaluate(const FunctionalId& id, Radius r, const ParamSet& p)
{
    switch (id.tag) {
    case Functional::main_phi:
        return phi_main(r, p);
    case Functional::main_phi_star:
        return phi_star(r, p);
    default:
        if (is_corollary(id.tag))
            return corollary_lhs(id, r, p.M, p.area);
        throw std::invalid_argument("evaluate: analytic tags are not functionals of the class");
    }
}

} // namespace bohr
