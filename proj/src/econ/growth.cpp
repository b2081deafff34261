#include "ifsecon/econ/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "ifsecon/errors.hpp"
#include "ifsecon/rng.hpp"

namespace ifsecon::econ {

namespace {

double production(double k) { return std::cbrt(k); }
double marginal_product(double k) { return 1.0 / (3.0 * std::cbrt(k * k)); }

double offset_for(const GrowthParams& g, double shock) {
    return std::log(shock) + std::log(g.rho) - std::log(3.0);
}

}  // namespace

GrowthParams::GrowthParams(double rho_, double lambda_a_, double lambda_b_, double q_)
    : rho(rho_), lambda_a(lambda_a_), lambda_b(lambda_b_), q(q_) {
    require(rho > 0.0 && rho < 1.0, "growth: rho must lie in (0, 1)");
    require(q > 0.0 && q < 1.0, "growth: q must lie in (0, 1)");
    require(lambda_b > 0.0 && lambda_b < 1.0 && lambda_a > 1.0 && lambda_a < 1.0 / lambda_b,
            "growth: need 1/lambda_b > lambda_a > 1 > lambda_b > 0");
}

double GrowthParams::alpha() const { return 1.5 * offset_for(*this, lambda_b); }
double GrowthParams::beta() const { return 1.5 * offset_for(*this, lambda_a); }

Policy growth_policy(const GrowthParams& g, double y) {
    require(std::isfinite(y) && y > 0.0, "growth_policy: output must be positive");
    // c >= y/2, so y - c is exact (Sterbenz) and c + k' == y holds bit-exactly.
    const double c = (1.0 - g.rho / 3.0) * y;
    return {c, y - c};
}

double euler_residual_for_share(const GrowthParams& g, double y, double share) {
    require(std::isfinite(y) && y > 0.0, "euler_residual: output must be positive");
    require(share > 0.0 && share < 1.0, "euler_residual: consumption share must lie in (0, 1)");
    const double c = share * y;
    const double k_next = y - c;
    const double lhs = 1.0 / c;
    double expectation = 0.0;
    for (auto [shock, prob] : {std::pair{g.lambda_a, g.q}, std::pair{g.lambda_b, 1.0 - g.q}}) {
        const double y_next = shock * production(k_next);
        expectation += prob * shock / (share * y_next);
    }
    const double rhs = g.rho * marginal_product(k_next) * expectation;
    return std::abs(lhs - rhs) / lhs;
}

double euler_residual(const GrowthParams& g, double y) {
    require(std::isfinite(y) && y > 0.0, "euler_residual: output must be positive");
    const Policy now = growth_policy(g, y);
    const double lhs = 1.0 / now.consumption;
    double expectation = 0.0;
    for (auto [shock, prob] : {std::pair{g.lambda_a, g.q}, std::pair{g.lambda_b, 1.0 - g.q}}) {
        const double y_next = shock * production(now.next_capital);
        expectation += prob * shock / growth_policy(g, y_next).consumption;
    }
    const double rhs = g.rho * marginal_product(now.next_capital) * expectation;
    return std::abs(lhs - rhs) / lhs;
}

PolicyTable solve_growth_numerically(const GrowthParams& g, int grid_size, int iters, double y_min,
                                     double y_max) {
    require(grid_size >= 200, "solve_growth_numerically: grid_size must be at least 200");
    require(iters >= 100, "solve_growth_numerically: iters must be at least 100");
    require(y_min > 0.0 && y_max > y_min, "solve_growth_numerically: need 0 < y_min < y_max");

    const auto n = static_cast<std::size_t>(grid_size);
    const double l0 = std::log(y_min);
    const double step = (std::log(y_max) - l0) / static_cast<double>(n - 1);
    PolicyTable table;
    table.y.resize(n);
    for (std::size_t j = 0; j < n; ++j) table.y[j] = std::exp(l0 + step * static_cast<double>(j));
    table.c.assign(n, 0.0);

    std::vector<double> value(n, 0.0), next(n, 0.0);
    // Piecewise-linear in log y, extended linearly past both ends.
    const auto interp = [&](double yv) {
        const double t = (std::log(yv) - l0) / step;
        const auto j = static_cast<std::size_t>(
            std::clamp(std::floor(t), 0.0, static_cast<double>(n - 2)));
        const double w = t - static_cast<double>(j);
        return value[j] + w * (value[j + 1] - value[j]);
    };
    const auto objective = [&](double y, double share) {
        const double kf = production((1.0 - share) * y);
        return std::log(share * y) +
               g.rho * (g.q * interp(g.lambda_a * kf) + (1.0 - g.q) * interp(g.lambda_b * kf));
    };

    constexpr double kInvPhi = 0.6180339887498949;
    for (int sweep = 1; sweep <= iters; ++sweep) {
        for (std::size_t j = 0; j < n; ++j) {
            const double y = table.y[j];
            double a = 1e-9, b = 1.0 - 1e-9;
            double x1 = b - kInvPhi * (b - a), x2 = a + kInvPhi * (b - a);
            double f1 = objective(y, x1), f2 = objective(y, x2);
            while (b - a > 1e-11) {
                if (f1 < f2) {
                    a = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = a + kInvPhi * (b - a);
                    f2 = objective(y, x2);
                } else {
                    b = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = b - kInvPhi * (b - a);
                    f1 = objective(y, x1);
                }
            }
            const double share = 0.5 * (a + b);
            next[j] = objective(y, share);
            table.c[j] = share * y;
        }
        double delta = 0.0;
        for (std::size_t j = 0; j < n; ++j) delta = std::max(delta, std::abs(next[j] - value[j]));
        value.swap(next);
        table.iterations = sweep;
        table.sup_delta = delta;
        if (delta <= 1e-10) {
            table.converged = true;
            break;
        }
    }
    return table;
}

IfsSystem log_capital_ifs(const GrowthParams& g) {
    const double alpha = g.alpha();
    const double beta = g.beta();
    const AffineMap l_b = AffineMap::scalar(1.0 / 3.0, offset_for(g, g.lambda_b));
    const AffineMap l_a = AffineMap::scalar(1.0 / 3.0, offset_for(g, g.lambda_a));
    const double scale = std::max({1.0, std::abs(alpha), std::abs(beta)});
    if (std::abs(l_b(State{alpha, 0.0})[0] - alpha) > 1e-12 * scale ||
        std::abs(l_a(State{beta, 0.0})[0] - beta) > 1e-12 * scale) {
        throw std::logic_error("log_capital_ifs: interval ends are not the map fixed points");
    }
    return IfsSystem({l_b, l_a}, Box{1, {alpha, 0.0}, {beta, 0.0}}, ProbVector({1.0 - g.q, g.q}));
}

double conjugacy_to_unit(const GrowthParams& g, double kappa) {
    const double alpha = g.alpha();
    const double beta = g.beta();
    const double tol = 1e-12 * std::max({1.0, std::abs(alpha), std::abs(beta)});
    require(kappa >= alpha - tol && kappa <= beta + tol,
            "conjugacy_to_unit: kappa outside [alpha, beta]");
    return (kappa - alpha) / (beta - alpha);
}

BoxSet conjugate_box_set(const GrowthParams& g, const BoxSet& kappa_cells, double unit_epsilon) {
    require(kappa_cells.dim() == 1, "conjugate_box_set: expects a 1-dim cell set");
    const double alpha = g.alpha();
    const double width = g.beta() - alpha;
    BoxSet out(1, unit_epsilon, State{0.0, 0.0});
    std::vector<Cell> cells;
    cells.reserve(kappa_cells.size());
    for (const Cell& c : kappa_cells.cells()) {
        const double tau = (kappa_cells.center(c)[0] - alpha) / width;
        cells.push_back(out.cell_of(State{tau, 0.0}));
    }
    return BoxSet(1, out.epsilon(), out.origin(), std::move(cells));
}

GrowthPath simulate_growth_with_shocks(const GrowthParams& g, double k0,
                                       std::span<const std::size_t> shock_indices) {
    require(std::isfinite(k0) && k0 > 0.0, "simulate_growth: k0 must be positive");
    require(!shock_indices.empty(), "simulate_growth: need at least one period");
    GrowthPath path;
    const std::size_t periods = shock_indices.size();
    for (auto* v : {&path.k, &path.y, &path.c, &path.i, &path.xi}) v->reserve(periods);
    double k = k0;
    for (std::size_t idx : shock_indices) {
        require(idx <= 1, "simulate_growth: shock index must be 0 (b) or 1 (a)");
        const double xi = g.shock(idx);
        const double y = xi * production(k);
        const Policy p = growth_policy(g, y);
        path.k.push_back(k);
        path.y.push_back(y);
        path.c.push_back(p.consumption);
        path.i.push_back(p.next_capital);
        path.xi.push_back(xi);
        k = p.next_capital;
    }
    return path;
}

GrowthPath simulate_growth(const GrowthParams& g, double k0, int T, std::uint64_t seed) {
    require(T >= 1, "simulate_growth: T must be at least 1");
    const double weights[] = {1.0 - g.q, g.q};
    CategoricalSampler sampler(weights, seed);
    std::vector<std::size_t> shocks(static_cast<std::size_t>(T) + 1);
    for (auto& s : shocks) s = sampler.next();
    return simulate_growth_with_shocks(g, k0, shocks);
}

}  // namespace ifsecon::econ
