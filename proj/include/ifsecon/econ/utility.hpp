#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ifsecon/ifs_system.hpp"

namespace ifsecon::econ {

// Random utility processes driven by an i.i.d. index sequence. Paths are
// indexed U_0 = k0 (the fundamental utility at the chosen state) and
// U_n = f_{sigma_n}(U_{n-1}) for n = 1..N, one shock per step.

/// U_n = xi_n U_{n-1}, xi_n drawn from rhos with weights pi.
struct MultiplicativeUtilityParams {
    std::vector<double> rhos;
    ProbVector pi;
    double k0;

    MultiplicativeUtilityParams(std::vector<double> rhos, ProbVector pi, double k0);
    /// sum_i pi_i log rho_i, the almost-sure rate of log U_n / n.
    double log_rate() const;
};

/// U_n = rho U_{n-1} + eps_n, eps_n drawn from rs with weights pi.
/// rs must be nonnegative, pairwise distinct and not all zero.
struct AffineUtilityParams {
    double rho;
    std::vector<double> rs;
    ProbVector pi;
    double k0;

    AffineUtilityParams(double rho, std::vector<double> rs, ProbVector pi, double k0);
    /// [min r / (1 - rho), max r / (1 - rho)], the interval spanned by the
    /// fixed points of the maps.
    std::pair<double, double> invariant_interval() const;
    /// The equivalent 1-dim random function system on invariant_interval().
    IfsSystem as_ifs() const;
};

struct UtilityPath {
    std::vector<double> shocks;  // shocks[n - 1] drives step n
    std::vector<double> values;  // U_0..U_n
};

UtilityPath simulate_multiplicative_utility(const MultiplicativeUtilityParams& p, int n,
                                            std::uint64_t seed);
UtilityPath simulate_affine_utility(const AffineUtilityParams& p, int n, std::uint64_t seed);

/// U_n = (prod_{i<=n} xi_i) k0 for every n.
std::vector<double> multiplicative_closed_form(double k0, std::span<const double> shocks);
/// U_n = rho^n k0 + sum_{i=1}^n rho^{n-i} eps_i for every n.
std::vector<double> affine_closed_form(double rho, double k0, std::span<const double> shocks);

}  // namespace ifsecon::econ
