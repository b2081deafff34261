#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ifsecon/chaos_game.hpp"

namespace ifsecon {

/// eps_k = eps0 * factor^-k for k = 0..levels-1.
struct EpsSchedule {
    double eps0;
    double factor;
    int levels;

    EpsSchedule(double eps0, double factor, int levels);
    double at(int k) const;
};

struct DimensionReport {
    double slope = 0.0;
    double intercept = 0.0;
    /// Undefined (nullopt) when every level counts a single cell.
    std::optional<double> r_squared;
    std::vector<std::pair<double, std::size_t>> counts;  // (eps, N)
    double upper_est = 0.0;
    double lower_est = 0.0;
    bool degenerate = false;
};

/// Occupied half-open cells of edge epsilon. The grid is anchored at the
/// cloud's bounding-box min corner unless an origin is supplied.
std::size_t box_count(const PointCloud& cloud, double epsilon,
                      std::optional<State> origin = std::nullopt);

/// Least-squares slope of log N against log(1/eps). upper_est and lower_est
/// are the extreme slopes between consecutive levels; the fitted slope is a
/// positive-weighted mean of them.
DimensionReport box_dimension(const PointCloud& cloud, const EpsSchedule& sched,
                              std::optional<State> origin = std::nullopt);

/// Coarsest level at a quarter of the cloud's diameter, refined by `factor`
/// while the finest level still holds at least ten points per occupied cell.
EpsSchedule default_schedule(const PointCloud& cloud, double factor = 2.0);

/// Root d of sum_i ratio_i^d = 1 by bisection.
double similarity_dimension(std::span<const double> ratios);

}  // namespace ifsecon
