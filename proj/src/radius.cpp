#include "bohr/radius.hpp"

#include <functional>

#include "bohr/extremal.hpp"

namespace bohr {

double starred_wall(ClassParam M, AreaVariant variant)
{
    constexpr double target = 1.0 - radius_edge_gap;
    const double edge = 1.0 - radius_edge_gap;
    const auto g = [&](double r) { return area_majorant(Radius(r), M, variant) - target; };
    if (g(edge) <= 0.0)
        return edge;
    return solve(g, Bracket{radius_lo_seed, edge}).bracket.lo;
}

Bracket radius_domain(const FunctionalId& id, const ParamSet& p)
{
    if (is_analytic(id.tag))
        return {radius_lo_seed, 1.0 - radius_edge_gap};
    const bool has_poly = is_corollary(id.tag) || p.poly.size() > 0;
    if (is_starred(id.tag) && has_poly)
        return {radius_lo_seed, starred_wall(p.M, p.area)};
    return {radius_lo_seed, 1.0 - radius_edge_gap};
}

RootResult radius_for(const FunctionalId& id, const ParamSet& p, const RadiusOptions& opt)
{
    id.validate();
    if (id.tag == Functional::ana_r_a0) {
        const double v = analytic_reference(id, 0.0);
        RootResult out;
        out.value = v;
        out.bracket = {v, v};
        out.unique = true;
        return out;
    }

    std::function<double(double)> f;
    if (is_analytic(id.tag)) {
        // the cubic for r'_{a_0} decreases through its root
        const double sign = id.tag == Functional::ana_rp_a0 ? -1.0 : 1.0;
        f = [id, sign](double r) { return sign * analytic_reference(id, r); };
    } else {
        p.validate();
        f = [&id, &p](double r) { return evaluate(id, Radius(r), p); };
    }

    const Bracket domain = radius_domain(id, p);
    RootResult out = solve(f, bracket(f, domain.lo, domain.hi), opt.solve);
    out.unique = verify_unique(f, domain, opt.uniqueness_grid);
    if (opt.certify) {
        if (is_analytic(id.tag))
            throw std::invalid_argument("radius_for: no extremal certificate for analytic-class equations");
        out.sharp = sharpness_certificate(id, p, out, opt.delta).holds;
    }
    return out;
}

} // namespace bohr
