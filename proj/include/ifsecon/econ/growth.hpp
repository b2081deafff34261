#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ifsecon/box_set.hpp"
#include "ifsecon/ifs_system.hpp"

namespace ifsecon::econ {

/// One-sector stochastic growth with u(c) = log c, f(k) = k^(1/3) and a
/// two-point multiplicative shock: lambda_a with probability q, lambda_b with
/// probability 1 - q. Requires 1/lambda_b > lambda_a > 1 > lambda_b > 0.
struct GrowthParams {
    double rho;
    double lambda_a;
    double lambda_b;
    double q;

    GrowthParams(double rho, double lambda_a, double lambda_b, double q);

    /// Index order of shocks everywhere: 0 = b (negative), 1 = a (positive).
    double shock(std::size_t index) const { return index == 0 ? lambda_b : lambda_a; }
    /// Lower and upper ends [alpha, beta] of the log-capital interval.
    double alpha() const;
    double beta() const;
};

struct Policy {
    double consumption;
    double next_capital;
};

/// c = (1 - rho/3) y and k' = y - c = rho y / 3 (to rounding), with c + k' == y bit-exactly.
Policy growth_policy(const GrowthParams& g, double y);

/// Relative gap |lhs - rhs| / lhs of the Euler equation
/// u'(c) = rho f'(k') E[xi' u'(c')] along the closed-form policy.
double euler_residual(const GrowthParams& g, double y);

/// Euler gap for the linear policy c = share * y applied today and tomorrow.
double euler_residual_for_share(const GrowthParams& g, double y, double share);

struct PolicyTable {
    std::vector<double> y;
    std::vector<double> c;
    int iterations = 0;
    double sup_delta = 0.0;
    bool converged = false;
};

/// Value-function iteration on a log-spaced output grid: linear interpolation
/// (and extrapolation) of V in log y, golden-section search over the
/// consumption share, stop at sup-norm change 1e-10 or after `iters` sweeps.
PolicyTable solve_growth_numerically(const GrowthParams& g, int grid_size, int iters,
                                     double y_min = 0.05, double y_max = 5.0);

/// Log-capital maps l_b (index 0) and l_a (index 1), kappa -> kappa/3 + offset,
/// on [alpha, beta] with pi = (1 - q, q).
IfsSystem log_capital_ifs(const GrowthParams& g);

/// tau = (kappa - alpha) / (beta - alpha), carrying l_b to tau/3 and l_a to
/// tau/3 + 2/3.
double conjugacy_to_unit(const GrowthParams& g, double kappa);

/// Image of a log-capital cell set on the unit-interval grid of edge
/// unit_epsilon: each cell center is pushed through the conjugacy and binned.
BoxSet conjugate_box_set(const GrowthParams& g, const BoxSet& kappa_cells, double unit_epsilon);

struct GrowthPath {
    std::vector<double> k, y, c, i, xi;  // n = 0..T
};

/// Closed-form economy from k0 for T periods with shocks drawn from
/// (1 - q, q) in (b, a) order.
GrowthPath simulate_growth(const GrowthParams& g, double k0, int T, std::uint64_t seed);

/// Forced-shock variant: shock_indices[n] in {0 = b, 1 = a} drives period n.
GrowthPath simulate_growth_with_shocks(const GrowthParams& g, double k0,
                                       std::span<const std::size_t> shock_indices);

}  // namespace ifsecon::econ
