#include "ifsecon/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "ifsecon/errors.hpp"

namespace ifsecon {

EpsSchedule::EpsSchedule(double eps0_, double factor_, int levels_)
    : eps0(eps0_), factor(factor_), levels(levels_) {
    require(std::isfinite(eps0) && eps0 > 0.0, "schedule: eps0 must be positive");
    require(std::isfinite(factor) && factor > 1.0, "schedule: factor must exceed 1");
    require(levels >= 3, "schedule: at least 3 levels are needed for a fit");
}

double EpsSchedule::at(int k) const { return eps0 * std::pow(factor, -k); }

std::size_t box_count(const PointCloud& cloud, double epsilon, std::optional<State> origin) {
    require(!cloud.empty(), "box_count: cloud is empty");
    require(std::isfinite(epsilon) && epsilon > 0.0, "box_count: epsilon must be positive");
    const State anchor = origin ? *origin : cloud.bounds().lo;
    std::vector<std::pair<std::int64_t, std::int64_t>> keys;
    keys.reserve(cloud.size());
    for (const State& p : cloud.points) {
        const auto i = static_cast<std::int64_t>(std::floor((p[0] - anchor[0]) / epsilon));
        const auto j = cloud.dim == 2
                           ? static_cast<std::int64_t>(std::floor((p[1] - anchor[1]) / epsilon))
                           : std::int64_t{0};
        keys.emplace_back(i, j);
    }
    std::sort(keys.begin(), keys.end());
    return static_cast<std::size_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
}

DimensionReport box_dimension(const PointCloud& cloud, const EpsSchedule& sched,
                              std::optional<State> origin) {
    require(cloud.size() >= 2, "box_dimension: need at least 2 points");
    const auto distinct = std::any_of(cloud.points.begin(), cloud.points.end(),
                                      [&](const State& p) { return p != cloud.points.front(); });
    require(distinct, "box_dimension: need at least 2 distinct points");

    DimensionReport report;
    std::vector<double> xs, ys;
    for (int k = 0; k < sched.levels; ++k) {
        const double eps = sched.at(k);
        const std::size_t n = box_count(cloud, eps, origin);
        report.counts.emplace_back(eps, n);
        xs.push_back(std::log(1.0 / eps));
        ys.push_back(std::log(static_cast<double>(n)));
    }

    const auto m = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= m;
    my /= m;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }

    if (syy == 0.0) {
        // Every level sees the same count; with a single cell the fit is undefined.
        report.degenerate = report.counts.front().second == 1;
        report.slope = 0.0;
        report.intercept = my;
        if (!report.degenerate) report.r_squared = 1.0;
        return report;
    }

    report.slope = sxy / sxx;
    report.intercept = my - report.slope * mx;
    report.r_squared = std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
    report.upper_est = -std::numeric_limits<double>::infinity();
    report.lower_est = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const double s = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
        report.upper_est = std::max(report.upper_est, s);
        report.lower_est = std::min(report.lower_est, s);
    }
    // The OLS slope is a convex combination of these; clamp away the last ulp.
    report.upper_est = std::max(report.upper_est, report.slope);
    report.lower_est = std::min(report.lower_est, report.slope);
    return report;
}

EpsSchedule default_schedule(const PointCloud& cloud, double factor) {
    require(cloud.size() >= 2, "default_schedule: need at least 2 points");
    const double diam = cloud.bounds().diameter();
    require(diam > 0.0, "default_schedule: cloud has zero extent");
    const double eps0 = diam / 4.0;
    int levels = 1;
    for (;;) {
        const double eps = eps0 * std::pow(factor, -levels);
        const double per_cell = static_cast<double>(cloud.size()) /
                                static_cast<double>(box_count(cloud, eps));
        if (per_cell < 10.0 || levels >= 40) break;
        ++levels;
    }
    return EpsSchedule(eps0, factor, std::max(levels, 3));
}

double similarity_dimension(std::span<const double> ratios) {
    require(ratios.size() >= 2, "similarity_dimension: need at least 2 ratios");
    for (double r : ratios) {
        require(std::isfinite(r) && r > 0.0 && r < 1.0,
                "similarity_dimension: ratios must lie in (0, 1)");
    }
    const auto excess = [&](double d) {
        double s = 0.0;
        for (double r : ratios) s += std::pow(r, d);
        return s - 1.0;
    };
    // excess(0) = N - 1 > 0 and excess is strictly decreasing.
    double lo = 0.0;
    double hi = 1.0;
    while (excess(hi) >= 0.0) hi *= 2.0;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (excess(mid) >= 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace ifsecon
