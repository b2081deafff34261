#include "ifsecon/ifs_system.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ifsecon/errors.hpp"

namespace ifsecon {

ProbVector::ProbVector(std::vector<double> weights) : weights_(std::move(weights)) {
    require(weights_.size() >= 2, "probability vector needs at least 2 weights");
    for (double w : weights_) {
        require(std::isfinite(w) && w > 0.0, "probability weights must be strictly positive");
    }
    const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
    require(std::abs(total - 1.0) <= 1e-12, "probability weights must sum to 1");
}

namespace {

double scale_of(const Box& box) {
    double s = 1.0;
    for (int k = 0; k < box.dim; ++k) s = std::max({s, std::abs(box.lo[k]), std::abs(box.hi[k])});
    return s;
}

}  // namespace

bool polygon_contains(std::span<const State> poly, const State& x, double tol) {
    // Convex polygon, either orientation: x is inside iff it is not strictly
    // outside any edge.
    const std::size_t n = poly.size();
    double area2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const State& p = poly[i];
        const State& q = poly[(i + 1) % n];
        area2 += p[0] * q[1] - q[0] * p[1];
    }
    const double orient = area2 >= 0.0 ? 1.0 : -1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const State& p = poly[i];
        const State& q = poly[(i + 1) % n];
        const double ex = q[0] - p[0], ey = q[1] - p[1];
        const double len = std::hypot(ex, ey);
        if (len == 0.0) continue;
        const double cross = (ex * (x[1] - p[1]) - ey * (x[0] - p[0])) / len;
        if (orient * cross < -tol) return false;
    }
    return true;
}

IfsSystem::IfsSystem(std::vector<AffineMap> maps, Box bounding_box, std::optional<ProbVector> pi,
                     std::vector<State> region)
    : maps_(std::move(maps)), box_(bounding_box), pi_(std::move(pi)), region_(std::move(region)) {
    require(maps_.size() >= 2, "an iterated function system needs N >= 2 maps");
    const int d = maps_.front().dim();
    for (const auto& m : maps_) require(m.dim() == d, "all maps must share one dimension");
    require(box_.dim == d, "bounding box dimension does not match the maps");
    for (int k = 0; k < d; ++k) {
        require(std::isfinite(box_.lo[k]) && std::isfinite(box_.hi[k]) && box_.lo[k] <= box_.hi[k],
                "bounding box must satisfy lo <= hi");
    }
    if (pi_) require(pi_->size() == maps_.size(), "probability vector length must equal N");

    const double tol = 1e-12 * scale_of(box_);
    if (region_.empty()) {
        // Image of a box under an affine map is the hull of the corner images.
        for (std::size_t i = 0; i < maps_.size(); ++i) {
            for (const State& corner : box_.corners()) {
                if (!box_.contains(maps_[i](corner), tol)) {
                    throw InvalidArgument("map " + std::to_string(i) +
                                          " does not send the bounding box into itself");
                }
            }
        }
    } else {
        require(d == 2 && region_.size() >= 3, "an invariant region must be a 2-dim polygon");
        for (const State& v : region_) {
            require(box_.contains(v, tol), "invariant region must lie inside the bounding box");
        }
        for (std::size_t i = 0; i < maps_.size(); ++i) {
            for (const State& v : region_) {
                if (!polygon_contains(region_, maps_[i](v), tol)) {
                    throw InvalidArgument("map " + std::to_string(i) +
                                          " does not send the invariant region into itself");
                }
            }
        }
    }
}

double IfsSystem::lambda() const {
    double l = 0.0;
    for (const auto& m : maps_) l = std::max(l, m.lipschitz());
    return l;
}

bool IfsSystem::contains(const State& x, double tol) const {
    if (!box_.contains(x, tol)) return false;
    return region_.empty() || polygon_contains(region_, x, tol);
}

int IfsSystem::apriori_iterations(double eps) const {
    const double diam = diameter();
    if (diam <= eps) return 0;
    return static_cast<int>(std::ceil(std::log(eps / diam) / std::log(lambda())));
}

IfsSystem cantor_system(double c) {
    require(std::isfinite(c) && c > 2.0, "cantor_system: c must exceed 2");
    std::vector<AffineMap> maps{AffineMap::scalar(1.0 / c, 0.0),
                                AffineMap::scalar(1.0 / c, 1.0 - 1.0 / c)};
    Box box{1, {0.0, 0.0}, {1.0, 0.0}};
    return IfsSystem(std::move(maps), box, ProbVector({0.5, 0.5}));
}

IfsSystem de_rham_system(double a_re, double a_im) {
    auto [f1, f2] = koch_maps(a_re, a_im);
    std::vector<State> triangle{{0.0, 0.0}, {1.0, 0.0}, {a_re, a_im}};
    Box box{2,
            {std::min(0.0, a_re), std::min(0.0, a_im)},
            {std::max(1.0, a_re), std::max(0.0, a_im)}};
    // A real a collapses the triangle to a segment; the box is then invariant.
    if (a_im == 0.0) triangle.clear();
    return IfsSystem({f1, f2}, box, ProbVector({0.5, 0.5}), std::move(triangle));
}

bool cantor_membership(double x, int depth, double tol, double c) {
    double lo = 0.0;
    double width = 1.0;
    if (x < lo - tol || x > lo + width + tol) return false;
    for (int k = 0; k < depth; ++k) {
        const double sub = width / c;
        const double left_hi = lo + sub;
        const double right_lo = lo + width - sub;
        if (x <= left_hi) {
            width = sub;
        } else if (x >= right_lo) {
            lo = right_lo;
            width = sub;
        } else {
            // In the removed gap; both gap endpoints survive every later level.
            return std::min(x - left_hi, right_lo - x) <= tol;
        }
    }
    return true;
}

}  // namespace ifsecon
