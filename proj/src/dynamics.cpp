#include "ifsecon/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "ifsecon/errors.hpp"

namespace ifsecon::dynamics {

namespace {

constexpr double kRootTol = 1e-10;
constexpr double kOrbitTol = 1e-8;

double power(const ScalarMap& m, double x, int n) {
    for (int i = 0; i < n; ++i) x = m(x);
    return x;
}

}  // namespace

ScalarMap::ScalarMap(std::function<double(double)> f, double lo, double hi, std::string name)
    : f_(std::move(f)), lo_(lo), hi_(hi), name_(std::move(name)) {
    require(std::isfinite(lo) && std::isfinite(hi) && lo < hi, "scalar map: need lo < hi");
    constexpr int kProbe = 1024;
    for (int i = 0; i < kProbe; ++i) {
        const double x = lo_ + (hi_ - lo_) * i / (kProbe - 1);
        const double y = f_(x);
        require(std::isfinite(y) && y >= lo_ && y <= hi_,
                "scalar map '" + name_ + "' leaves its interval");
    }
}

ScalarMap tent_map() {
    return ScalarMap([](double x) { return 1.0 - std::abs(2.0 * x - 1.0); }, 0.0, 1.0, "tent");
}

ScalarMap logistic_map(double r) {
    require(r >= 0.0 && r <= 4.0, "logistic map needs 0 <= r <= 4");
    return ScalarMap([r](double x) { return r * x * (1.0 - x); }, 0.0, 1.0,
                     "logistic:" + std::to_string(r));
}

ScalarMap piecewise_linear(std::vector<std::pair<double, double>> bp) {
    require(bp.size() >= 2, "piecewise-linear map needs at least 2 breakpoints");
    for (std::size_t i = 1; i < bp.size(); ++i) {
        require(bp[i].first > bp[i - 1].first, "breakpoint x must be strictly increasing");
    }
    const double lo = bp.front().first;
    const double hi = bp.back().first;
    auto f = [bp](double x) {
        auto it = std::upper_bound(bp.begin(), bp.end(), x,
                                   [](double v, const auto& p) { return v < p.first; });
        if (it == bp.begin()) return bp.front().second;
        if (it == bp.end()) return bp.back().second;
        const auto& [x0, y0] = *(it - 1);
        const auto& [x1, y1] = *it;
        return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
    };
    return ScalarMap(std::move(f), lo, hi, "piecewise-linear");
}

ScalarMap named_map(const std::string& spec) {
    if (spec == "tent") return tent_map();
    const std::string prefix = "logistic:";
    if (spec.rfind(prefix, 0) == 0) {
        std::size_t used = 0;
        double r = 0.0;
        try {
            r = std::stod(spec.substr(prefix.size()), &used);
        } catch (const std::exception&) {
            throw InvalidArgument("bad logistic parameter in '" + spec + "'");
        }
        require(used == spec.size() - prefix.size(), "bad logistic parameter in '" + spec + "'");
        return logistic_map(r);
    }
    throw InvalidArgument("unknown built-in map '" + spec + "'");
}

std::vector<double> iterate(const ScalarMap& m, double x, int n) {
    require(m.contains(x), "iterate: starting point outside the interval");
    require(n >= 0, "iterate: n must be nonnegative");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    out.push_back(x);
    for (int i = 0; i < n; ++i) {
        x = m(x);
        out.push_back(x);
    }
    return out;
}

std::vector<PeriodicOrbit> find_periodic_orbits(const ScalarMap& m, int max_period, int grid) {
    require(max_period >= 1, "find_periodic_orbits: max_period must be at least 1");
    require(grid >= 64, "find_periodic_orbits: grid must be at least 64");

    std::vector<PeriodicOrbit> orbits;
    for (int p = 1; p <= max_period; ++p) {
        const auto g = [&](double x) { return power(m, x, p) - x; };

        std::vector<double> roots;
        double x_prev = m.lo();
        double g_prev = g(x_prev);
        if (g_prev == 0.0) roots.push_back(x_prev);
        for (int i = 1; i < grid; ++i) {
            const double x = i == grid - 1 ? m.hi() : m.lo() + (m.hi() - m.lo()) * i / (grid - 1);
            const double gx = g(x);
            if (gx == 0.0) {
                roots.push_back(x);
            } else if (g_prev != 0.0 && (g_prev < 0.0) != (gx < 0.0)) {
                // Bisect past the 1e-10 target down to adjacent doubles so the
                // cycle residual stays small even after p expanding steps.
                double a = x_prev, b = x, ga = g_prev;
                while (true) {
                    const double mid = 0.5 * (a + b);
                    if (mid <= a || mid >= b) break;
                    const double gm = g(mid);
                    if (gm == 0.0) {
                        a = b = mid;
                        break;
                    }
                    if ((gm < 0.0) == (ga < 0.0)) {
                        a = mid;
                        ga = gm;
                    } else {
                        b = mid;
                    }
                }
                roots.push_back(0.5 * (a + b));
            }
            x_prev = x;
            g_prev = gx;
        }
        std::sort(roots.begin(), roots.end());

        std::vector<PeriodicOrbit> found;
        double last_root = -std::numeric_limits<double>::infinity();
        for (double r : roots) {
            if (r - last_root <= kOrbitTol) continue;
            last_root = r;

            bool minimal = true;
            for (int q = 1; q < p && minimal; ++q) {
                if (p % q == 0 && std::abs(power(m, r, q) - r) <= kOrbitTol) minimal = false;
            }
            if (!minimal) continue;

            const bool known = std::any_of(found.begin(), found.end(), [&](const PeriodicOrbit& o) {
                return std::any_of(o.points.begin(), o.points.end(),
                                   [&](double v) { return std::abs(v - r) <= kOrbitTol; });
            });
            if (known) continue;

            // Roots arrive in increasing order, so r is the leftmost point of its cycle.
            PeriodicOrbit orbit{iterate(m, r, p - 1), p};
            if (std::abs(m(orbit.points.back()) - orbit.points.front()) > kOrbitTol) continue;
            found.push_back(std::move(orbit));
        }
        orbits.insert(orbits.end(), found.begin(), found.end());
    }
    return orbits;
}

bool sharkovskii_precedes(std::int64_t n, std::int64_t m) {
    require(n >= 1 && m >= 1, "sharkovskii_precedes: arguments must be positive");
    // Key: non-powers of two (0, 2-adic order, odd part) come first in
    // lexicographic order; powers of two (1, -exponent) follow, descending.
    const auto key = [](std::int64_t v) {
        int twos = 0;
        while (v % 2 == 0) {
            v /= 2;
            ++twos;
        }
        return v > 1 ? std::make_tuple(0, twos, v) : std::make_tuple(1, -twos, std::int64_t{0});
    };
    return key(n) < key(m);
}

PairStats liyorke_pair_stats(const ScalarMap& m, double x, double y, int horizon, int tail) {
    require(x != y, "liyorke_pair_stats: x and y must differ");
    require(m.contains(x) && m.contains(y), "liyorke_pair_stats: points outside the interval");
    require(tail >= 1 && horizon > tail, "liyorke_pair_stats: need horizon > tail >= 1");
    PairStats stats{0.0, std::numeric_limits<double>::infinity()};
    for (int n = 1; n <= horizon; ++n) {
        x = m(x);
        y = m(y);
        if (n > horizon - tail) {
            const double gap = std::abs(x - y);
            stats.sup_gap = std::max(stats.sup_gap, gap);
            stats.inf_gap = std::min(stats.inf_gap, gap);
        }
    }
    return stats;
}

std::optional<int> sensitivity_probe(const ScalarMap& m, double x, double eps_target, double delta,
                                     int horizon) {
    require(delta > 0.0 && horizon >= 1, "sensitivity_probe: need delta > 0 and horizon >= 1");
    require(m.contains(x), "sensitivity_probe: x outside the interval");
    constexpr int kSamples = 64;
    const double a = std::max(m.lo(), x - delta);
    const double b = std::min(m.hi(), x + delta);
    std::vector<double> ys;
    for (int j = 0; j < kSamples; ++j) {
        const double y = a + (j + 0.5) * (b - a) / kSamples;
        if (y != x) ys.push_back(y);
    }
    if (ys.empty()) return std::nullopt;
    for (int n = 1; n <= horizon; ++n) {
        x = m(x);
        double nearest = std::numeric_limits<double>::infinity();
        for (double& y : ys) {
            y = m(y);
            nearest = std::min(nearest, std::abs(y - x));
        }
        if (nearest > eps_target) return n;
    }
    return std::nullopt;
}

}  // namespace ifsecon::dynamics
