#include "bohr/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

namespace bohr {

namespace {

// Weights of a functional evaluated from coefficients, with M taken from
// the coefficient sequence.
ParamSet weights_for(const FunctionalId& id, const ParamSet& p, ClassParam M)
{
    if (is_analytic(id.tag))
        throw std::invalid_argument("lhs_bruteforce: analytic-class tags have no coefficient form");
    ParamSet q = is_corollary(id.tag) ? corollary_params(id, M, p.area) : p;
    q.M = M;
    q.validate();
    return q;
}

struct Sums {
    double modulus; // sum (a_n + b_n) r^n
    double value;
    double remainder;
};

Sums evaluate_sums(const ParamSet& q, bool starred, double r, const CoefficientSeq& c)
{
    const Eigen::Index K = c.n_max();
    const int t = q.t();
    if (K < std::max<Eigen::Index>({2, q.N, t + 1}))
        throw TruncationError("lhs_bruteforce: n_max smaller than N or t + 1");

    Eigen::ArrayXd rp(K);
    rp(0) = r;
    for (Eigen::Index i = 1; i < K; ++i)
        rp(i) = rp(i - 1) * r;
    const Eigen::ArrayXd n = Eigen::ArrayXd::LinSpaced(K, 1.0, double(K));
    const Eigen::ArrayXd s = c.a + c.b;
    const Eigen::ArrayXd weighted = s * rp;

    const double modulus = weighted.sum();
    const double tail = weighted.tail(K - q.N + 1).sum();
    const double head = t > 0 ? s.head(t).square().sum() * std::pow(r, q.N) / (1.0 - r) : 0.0;
    const double quad = weighted.square().tail(K - t).sum();
    const double area = r * r + (n * (c.a.square() - c.b.square()) * rp.square()).tail(K - 1).sum();
    const double edge = 1.0 + r / (1.0 - r);

    double value = q.beta * std::pow(modulus, q.m) + tail + q.mu * head + q.lambda * edge * quad;

    // omitted tail n > K, bounded with |a_n| + |b_n| <= 2M/(n(n-1))
    const double M = c.M.value();
    const double k = double(K);
    const double rk = std::pow(r, k + 1.0);
    const double e1 = 2.0 * M * rk / (k * (k + 1.0) * (1.0 - r));
    const double e2 = 4.0 * M * M * rk * rk / (k * k * (k + 1.0) * (k + 1.0) * (1.0 - r * r));
    const double e3 = 4.0 * M * M * rk * rk / ((k + 1.0) * k * k * (1.0 - r * r));
    double remainder = e1 + q.lambda * edge * e2;
    if (q.beta > 0.0)
        remainder += q.beta * q.m * std::pow(modulus + e1, q.m - 1) * e1;

    if (q.poly.size() > 0) {
        if (starred) {
            if (!(area + e3 < 1.0))
                throw DomainError("lhs_bruteforce: S_r/pi reaches 1");
            const double w = area / (1.0 - area);
            const double w_hi = (area + e3) / (1.0 - area - e3);
            value += poly_eval(w, q.poly);
            remainder += poly_derivative(w_hi, q.poly) * (w_hi - w);
        } else {
            value += poly_eval(area, q.poly);
            remainder += poly_derivative(area + e3, q.poly) * e3;
        }
    }
    return {modulus, value, remainder};
}

} // namespace

bool CoefficientSeq::satisfies_class_bounds(double slack) const
{
    if (a.size() != b.size() || a.size() < 1)
        return false;
    if (a(0) != 1.0 || b(0) != 0.0)
        return false;
    if ((a < 0.0).any() || (b < 0.0).any())
        return false;
    const Eigen::ArrayXd bound = coefficient_bound(M, n_max());
    return ((a + b).tail(n_max() - 1) <= bound.tail(n_max() - 1) * (1.0 + slack)).all();
}

Eigen::ArrayXd coefficient_bound(ClassParam M, Eigen::Index n_max)
{
    const Eigen::ArrayXd n = Eigen::ArrayXd::LinSpaced(n_max, 1.0, double(n_max));
    Eigen::ArrayXd bound = 2.0 * M.value() / (n * (n - 1.0));
    bound(0) = 1.0;
    return bound;
}

CoefficientSeq extremal_coefficients(ClassParam M, Eigen::Index n_max)
{
    if (n_max < 2)
        throw std::invalid_argument("extremal_coefficients: n_max must be at least 2");
    return {coefficient_bound(M, n_max), Eigen::ArrayXd::Zero(n_max), M};
}

CoefficientSeq class_coefficients(ClassParam M, const Eigen::ArrayXd& u, const Eigen::ArrayXd& split)
{
    if (u.size() != split.size())
        throw std::invalid_argument("class_coefficients: u and split sizes differ");
    if ((u < 0.0).any() || (u > 1.0).any() || (split < 0.0).any() || (split > 1.0).any())
        throw std::invalid_argument("class_coefficients: u and split must lie in [0, 1]");
    const Eigen::Index n_max = u.size() + 1;
    const Eigen::ArrayXd bound = coefficient_bound(M, n_max);
    CoefficientSeq c{Eigen::ArrayXd::Zero(n_max), Eigen::ArrayXd::Zero(n_max), M};
    c.a(0) = 1.0;
    const Eigen::ArrayXd total = u * bound.tail(n_max - 1);
    c.a.tail(n_max - 1) = split * total;
    c.b.tail(n_max - 1) = (1.0 - split) * total;
    return c;
}

CoefficientSeq sample_class_coefficients(ClassParam M, std::uint64_t seed, Eigen::Index n_max)
{
    if (n_max < 2)
        throw std::invalid_argument("sample_class_coefficients: n_max must be at least 2");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Eigen::ArrayXd u(n_max - 1), split(n_max - 1);
    for (Eigen::Index i = 0; i < n_max - 1; ++i) {
        u(i) = unit(rng);
        split(i) = unit(rng);
    }
    return class_coefficients(M, u, split);
}

double eval_extremal(Radius r, ClassParam M)
{
    return growth_majorant(r, M);
}

double majorant_sum(Radius r, const CoefficientSeq& c)
{
    double power = 1.0, sum = 0.0;
    for (Eigen::Index i = 0; i < c.n_max(); ++i) {
        power *= r.value();
        sum += (c.a(i) + c.b(i)) * power;
    }
    return sum;
}

BruteForceValue lhs_bruteforce(const FunctionalId& id, const ParamSet& p, Radius r,
                               const CoefficientSeq& c, double tolerance)
{
    id.validate();
    const ParamSet q = weights_for(id, p, c.M);
    const Sums s = evaluate_sums(q, is_starred(id.tag), r.value(), c);
    if (!(s.remainder <= tolerance))
        throw TruncationError("lhs_bruteforce: truncation bound " + std::to_string(s.remainder)
                              + " exceeds tolerance " + std::to_string(tolerance));
    return {s.value, s.remainder};
}

Eigen::Index required_terms(const FunctionalId& id, const ParamSet& p, Radius r, double tolerance)
{
    id.validate();
    const ClassParam M = p.M;
    const ParamSet q = weights_for(id, p, M);
    const Eigen::Index floor = std::max<Eigen::Index>({2, q.N, q.t() + 1});
    for (Eigen::Index K = 16; K <= (Eigen::Index(1) << 22); K *= 2) {
        if (K < floor)
            continue;
        const Sums s = evaluate_sums(q, is_starred(id.tag), r.value(), extremal_coefficients(M, K));
        if (s.remainder <= tolerance)
            return K;
    }
    throw TruncationError("required_terms: no truncation order reaches the tolerance");
}

SharpnessVerdict sharpness_certificate(const FunctionalId& id, const ParamSet& p,
                                       const RootResult& R, double delta)
{
    if (!(delta > 0.0 && delta <= 1e-3))
        throw std::invalid_argument("sharpness_certificate: delta must lie in (0, 1e-3]");
    const Bracket domain = radius_domain(id, p);
    const double lo = R.value - delta, hi = R.value + delta;
    if (!(lo > 0.0 && hi < domain.hi))
        throw DomainError("sharpness_certificate: R +/- delta leaves the admissible interval");

    const Eigen::Index K = required_terms(id, p, Radius(hi));
    const CoefficientSeq c = extremal_coefficients(p.M, K);
    const BruteForceValue below = lhs_bruteforce(id, p, Radius(lo), c);
    const BruteForceValue above = lhs_bruteforce(id, p, Radius(hi), c);

    SharpnessVerdict v;
    v.distance = boundary_distance(p.M);
    v.below = below.value;
    v.above = above.value;
    v.remainder = std::max(below.remainder, above.remainder);
    v.holds = v.below + v.remainder < v.distance && v.above > v.distance;
    return v;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_legendre(int n)
{
    if (n < 1)
        throw std::invalid_argument("gauss_legendre: n must be positive");
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd sub(std::max(n - 1, 0));
    for (int k = 1; k < n; ++k)
        sub(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
    eig.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    Eigen::VectorXd weights = 2.0 * eig.eigenvectors().row(0).transpose().array().square().matrix();
    return {eig.eigenvalues(), weights};
}

QuadratureResult area_quadrature_detailed(ClassParam M, double r)
{
    if (!(r > 0.0 && r <= 0.95))
        throw DomainError("area_quadrature: r must lie in (0, 0.95]");
    const double m = M.value();
    const auto level = [&](int n_r, int n_theta) {
        const auto [x, w] = gauss_legendre(n_r);
        const double dtheta = 2.0 * std::numbers::pi / n_theta;
        double total = 0.0;
        for (int i = 0; i < n_r; ++i) {
            const double rho = 0.5 * r * (x(i) + 1.0);
            double ring = 0.0;
            for (int j = 0; j < n_theta; ++j) {
                const std::complex<double> z = std::polar(rho, j * dtheta);
                ring += std::norm(1.0 - 2.0 * m * std::log(1.0 - z));
            }
            total += 0.5 * r * w(i) * rho * ring * dtheta;
        }
        return total / std::numbers::pi;
    };

    int n_r = 8, n_theta = 32;
    double prev = level(n_r, n_theta);
    double diff = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 8; ++k) {
        n_r = std::min(2 * n_r, 256);
        n_theta *= 2;
        const double cur = level(n_r, n_theta);
        diff = std::abs(cur - prev);
        prev = cur;
        if (k >= 2 && diff < 1e-8)
            return {cur, diff, n_r, n_theta};
    }
    throw QuadratureError("area_quadrature: refinement did not converge", diff);
}

double area_quadrature(ClassParam M, double r)
{
    return area_quadrature_detailed(M, r).value;
}

} // namespace bohr
