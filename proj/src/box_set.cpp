#include "ifsecon/box_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ifsecon/errors.hpp"

namespace ifsecon {

namespace {

// Grid coordinates within this many cells of an integer are treated as lying
// on the grid line, absorbing rounding in corner images.
constexpr double kSnap = 1e-9;

void canonicalize(std::vector<Cell>& cells) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
}

std::int64_t floor_index(double t) { return static_cast<std::int64_t>(std::floor(t + kSnap)); }

}  // namespace

BoxSet::BoxSet(int dim, double epsilon, const State& origin, std::vector<Cell> cells)
    : dim_(dim), epsilon_(epsilon), origin_(origin), cells_(std::move(cells)) {
    require(dim == 1 || dim == 2, "box set dimension must be 1 or 2");
    require(std::isfinite(epsilon) && epsilon > 0.0, "box set epsilon must be positive");
    if (dim_ == 1) {
        origin_[1] = 0.0;
        for (auto& c : cells_) c[1] = 0;
    }
    canonicalize(cells_);
}

BoxSet BoxSet::cover(const Box& box, double epsilon) {
    require(std::isfinite(epsilon) && epsilon > 0.0, "cover: epsilon must be positive");
    std::array<std::int64_t, kMaxDim> count{1, 1};
    for (int k = 0; k < box.dim; ++k) {
        const double span = (box.hi[k] - box.lo[k]) / epsilon;
        count[k] = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(span - kSnap)));
    }
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(count[0] * count[1]));
    for (std::int64_t i = 0; i < count[0]; ++i) {
        for (std::int64_t j = 0; j < count[1]; ++j) cells.push_back({i, j});
    }
    return BoxSet(box.dim, epsilon, box.lo, std::move(cells));
}

bool BoxSet::contains(const Cell& c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

Cell BoxSet::cell_of(const State& x) const {
    Cell c{0, 0};
    for (int k = 0; k < dim_; ++k) c[k] = floor_index((x[k] - origin_[k]) / epsilon_);
    return c;
}

State BoxSet::center(const Cell& c) const {
    State s{0.0, 0.0};
    for (int k = 0; k < dim_; ++k) s[k] = origin_[k] + (static_cast<double>(c[k]) + 0.5) * epsilon_;
    return s;
}

bool BoxSet::same_grid(const BoxSet& other) const {
    return dim_ == other.dim_ && epsilon_ == other.epsilon_ && origin_ == other.origin_;
}

BoxSet hutchinson_step(const IfsSystem& sys, const BoxSet& b) {
    require(!b.empty(), "hutchinson_step: input set is empty");
    require(b.dim() == sys.dim(), "hutchinson_step: dimension mismatch");
    const int dim = b.dim();
    const double eps = b.epsilon();
    const State& origin = b.origin();

    std::vector<Cell> out;
    out.reserve(b.size() * sys.size() * 2);
    std::vector<State> corners;
    for (const Cell& cell : b.cells()) {
        const State lo = {origin[0] + static_cast<double>(cell[0]) * eps,
                          origin[1] + static_cast<double>(cell[1]) * eps};
        const Box cell_box{dim, lo, {lo[0] + eps, lo[1] + eps}};
        corners = cell_box.corners();
        for (const AffineMap& f : sys.maps()) {
            State img_lo{std::numeric_limits<double>::infinity(), 0.0};
            State img_hi{-std::numeric_limits<double>::infinity(), 0.0};
            if (dim == 2) {
                img_lo[1] = img_lo[0];
                img_hi[1] = img_hi[0];
            }
            for (const State& p : corners) {
                const State q = f(p);
                for (int k = 0; k < dim; ++k) {
                    img_lo[k] = std::min(img_lo[k], q[k]);
                    img_hi[k] = std::max(img_hi[k], q[k]);
                }
            }
            std::array<std::int64_t, kMaxDim> first{0, 0};
            std::array<std::int64_t, kMaxDim> last{0, 0};
            for (int k = 0; k < dim; ++k) {
                const double t_lo = (img_lo[k] - origin[k]) / eps;
                const double t_hi = (img_hi[k] - origin[k]) / eps;
                first[k] = floor_index(t_lo);
                last[k] = static_cast<std::int64_t>(std::ceil(t_hi - kSnap)) - 1;
                if (last[k] < first[k]) last[k] = first[k];
            }
            for (std::int64_t i = first[0]; i <= last[0]; ++i) {
                for (std::int64_t j = first[1]; j <= last[1]; ++j) out.push_back({i, j});
            }
        }
    }
    return BoxSet(dim, eps, origin, std::move(out));
}

namespace {

// Largest distance (in cell units, squared) from a cell of `from` to the
// nearest cell of `to`. `to` is sorted lexicographically, so candidates are
// scanned outward along the first axis until that axis alone exceeds the best.
double directed_sq(const std::vector<Cell>& from, const std::vector<Cell>& to) {
    double worst = 0.0;
    for (const Cell& c : from) {
        const auto pos = std::lower_bound(to.begin(), to.end(), c);
        double best = std::numeric_limits<double>::infinity();
        auto consider = [&](const Cell& t) {
            const double dx = static_cast<double>(t[0] - c[0]);
            const double dy = static_cast<double>(t[1] - c[1]);
            best = std::min(best, dx * dx + dy * dy);
        };
        for (auto it = pos; it != to.end(); ++it) {
            const double dx = static_cast<double>((*it)[0] - c[0]);
            if (dx * dx > best || best <= worst) break;
            consider(*it);
        }
        for (auto it = pos; it != to.begin();) {
            --it;
            const double dx = static_cast<double>((*it)[0] - c[0]);
            if (dx * dx > best || best <= worst) break;
            consider(*it);
        }
        // best <= worst means this cell cannot raise the maximum.
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace

double hausdorff_distance(const BoxSet& u, const BoxSet& v) {
    require(!u.empty() && !v.empty(), "hausdorff_distance: sets must be nonempty");
    require(u.same_grid(v), "hausdorff_distance: sets are on different grids");
    if (u.cells() == v.cells()) return 0.0;
    const double sq = std::max(directed_sq(u.cells(), v.cells()), directed_sq(v.cells(), u.cells()));
    return std::sqrt(sq) * u.epsilon();
}

AttractorResult compute_attractor(const IfsSystem& sys, double epsilon, int max_iter) {
    require(std::isfinite(epsilon) && epsilon > 0.0, "compute_attractor: epsilon must be positive");
    require(max_iter >= 1, "compute_attractor: max_iter must be at least 1");
    AttractorResult result{BoxSet::cover(sys.bounding_box(), epsilon)};
    result.apriori_iterations = sys.apriori_iterations(epsilon);
    for (int n = 1; n <= max_iter; ++n) {
        BoxSet next = hutchinson_step(sys, result.cells);
        result.final_dh = hausdorff_distance(result.cells, next);
        result.cells = std::move(next);
        result.iterations = n;
        if (result.final_dh == 0.0 ||
            (result.final_dh <= epsilon && n >= result.apriori_iterations)) {
            result.converged = true;
            break;
        }
    }
    return result;
}

std::size_t connected_groups(const BoxSet& b) {
    const auto& cells = b.cells();
    std::vector<bool> seen(cells.size(), false);
    std::vector<std::size_t> stack;
    std::size_t groups = 0;
    auto index_of = [&](const Cell& c) -> std::ptrdiff_t {
        const auto it = std::lower_bound(cells.begin(), cells.end(), c);
        return (it != cells.end() && *it == c) ? it - cells.begin() : -1;
    };
    for (std::size_t s = 0; s < cells.size(); ++s) {
        if (seen[s]) continue;
        ++groups;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            const Cell c = cells[stack.back()];
            stack.pop_back();
            for (int k = 0; k < b.dim(); ++k) {
                for (int step : {-1, 1}) {
                    Cell n = c;
                    n[k] += step;
                    const auto idx = index_of(n);
                    if (idx >= 0 && !seen[static_cast<std::size_t>(idx)]) {
                        seen[static_cast<std::size_t>(idx)] = true;
                        stack.push_back(static_cast<std::size_t>(idx));
                    }
                }
            }
        }
    }
    return groups;
}

double region_occupancy(const BoxSet& b, std::span<const State> polygon) {
    require(b.dim() == 2 && polygon.size() >= 3, "region_occupancy: needs a 2-dim polygon");
    State lo{polygon[0]}, hi{polygon[0]};
    for (const State& p : polygon) {
        for (int k = 0; k < 2; ++k) {
            lo[k] = std::min(lo[k], p[k]);
            hi[k] = std::max(hi[k], p[k]);
        }
    }
    const Cell first = b.cell_of(lo);
    const Cell last = b.cell_of(hi);
    std::size_t inside = 0, hit = 0;
    for (std::int64_t i = first[0]; i <= last[0]; ++i) {
        for (std::int64_t j = first[1]; j <= last[1]; ++j) {
            const Cell c{i, j};
            if (!polygon_contains(polygon, b.center(c), 0.0)) continue;
            ++inside;
            if (b.contains(c)) ++hit;
        }
    }
    return inside == 0 ? 0.0 : static_cast<double>(hit) / static_cast<double>(inside);
}

}  // namespace ifsecon
