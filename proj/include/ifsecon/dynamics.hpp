#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ifsecon::dynamics {

/// A continuous self-map of [lo, hi].
///
/// Construction spot-checks the map on a 1024-point grid and throws
/// InvalidArgument if any image leaves the interval.
class ScalarMap {
public:
    ScalarMap(std::function<double(double)> f, double lo, double hi, std::string name = "custom");

    double operator()(double x) const { return f_(x); }
    double lo() const { return lo_; }
    double hi() const { return hi_; }
    const std::string& name() const { return name_; }
    bool contains(double x) const { return x >= lo_ && x <= hi_; }

private:
    std::function<double(double)> f_;
    double lo_;
    double hi_;
    std::string name_;
};

/// T(x) = 1 - |2x - 1| on [0, 1].
ScalarMap tent_map();
/// x -> r x (1 - x) on [0, 1], 0 <= r <= 4.
ScalarMap logistic_map(double r);
/// Linear interpolation through breakpoints with strictly increasing x; the
/// first and last x are the interval ends.
ScalarMap piecewise_linear(std::vector<std::pair<double, double>> breakpoints);
/// "tent" or "logistic:<r>".
ScalarMap named_map(const std::string& spec);

/// (x, f(x), ..., f^n(x)).
std::vector<double> iterate(const ScalarMap& m, double x, int n);

struct PeriodicOrbit {
    std::vector<double> points;  // starts at the leftmost point of the cycle
    int period = 0;
};

/// Periodic orbits of minimal period 1..max_period, found as sign changes of
/// f^p(x) - x on a uniform grid refined by bisection. Tangential roots can be
/// missed. Sorted by period, then by leftmost point.
std::vector<PeriodicOrbit> find_periodic_orbits(const ScalarMap& m, int max_period,
                                                int grid = 4096);

/// Strict Sarkovskii order n >_S m: 3 > 5 > 7 > ... > 2*3 > 2*5 > ... > 4*3 > ...
/// > 2^k > ... > 4 > 2 > 1.
bool sharkovskii_precedes(std::int64_t n, std::int64_t m);

struct PairStats {
    double sup_gap;
    double inf_gap;
};

/// max and min of |f^n(x) - f^n(y)| over the last `tail` of `horizon` steps.
PairStats liyorke_pair_stats(const ScalarMap& m, double x, double y, int horizon, int tail);

/// Smallest n <= horizon at which every one of 64 samples y in the clipped
/// delta-neighbourhood of x satisfies |f^n(x) - f^n(y)| > eps_target.
std::optional<int> sensitivity_probe(const ScalarMap& m, double x, double eps_target,
                                     double delta, int horizon);

}  // namespace ifsecon::dynamics
