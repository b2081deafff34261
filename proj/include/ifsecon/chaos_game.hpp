#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ifsecon/geometry.hpp"
#include "ifsecon/ifs_system.hpp"

namespace ifsecon {

/// Ordered sequence of states (a trajectory or chaos-game output).
struct PointCloud {
    int dim = 1;
    std::vector<State> points;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
    /// Smallest closed box holding every point.
    Box bounds() const;
};

/// Finite prefix of a code-space sequence; symbol s selects map s.
using Address = std::vector<std::size_t>;

/// Random iteration Z_{k+1} = f_{sigma_{k+1}}(Z_k) with sigma drawn from pi by
/// CategoricalSampler(pi, seed). Produces Z_1..Z_n and returns Z_{burn_in+1}..Z_n.
PointCloud chaos_game(const IfsSystem& sys, const State& x0, std::size_t n, std::size_t burn_in,
                      std::uint64_t seed);

/// f_{addr[0]} o f_{addr[1]} o ... o f_{addr[k-1]} applied to x0.
State address_point(const IfsSystem& sys, const Address& addr, const State& x0);

/// 2^-j for the 1-based first index j where the addresses differ; 0 if equal.
double baire_distance(const Address& mu, const Address& ups);

/// max over Y of | rho(Y) - sum_i pi_i rho(f_i^{-1}(Y)) | for the empirical
/// measure rho of the cloud. Membership in f_i^{-1}(Y) is decided exactly as
/// f_i(x) in Y, which needs f_i invertible (CannotInvert otherwise).
double balanced_measure_residual(const IfsSystem& sys, const PointCloud& cloud,
                                 std::span<const Box> test_sets);

/// Fraction of cloud points inside a closed box.
double empirical_measure(const PointCloud& cloud, const Box& y);

}  // namespace ifsecon
