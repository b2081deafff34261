#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "ifsecon/geometry.hpp"
#include "ifsecon/ifs_system.hpp"

namespace ifsecon {

using Cell = std::array<std::int64_t, kMaxDim>;

/// A finite union of half-open grid cells prod [origin + j eps, origin + (j+1) eps).
/// Cells are kept sorted and unique so that equality and export are canonical.
class BoxSet {
public:
    BoxSet(int dim, double epsilon, const State& origin, std::vector<Cell> cells = {});

    /// Cells covering a closed box; the far faces of the box fall in the last cell.
    static BoxSet cover(const Box& box, double epsilon);

    int dim() const { return dim_; }
    double epsilon() const { return epsilon_; }
    const State& origin() const { return origin_; }
    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    bool contains(const Cell& c) const;

    /// Half-open cell containing x (boundary points go to the higher index).
    Cell cell_of(const State& x) const;
    State center(const Cell& c) const;

    bool same_grid(const BoxSet& other) const;
    bool operator==(const BoxSet& other) const {
        return same_grid(other) && cells_ == other.cells_;
    }

private:
    int dim_;
    double epsilon_;
    State origin_;
    std::vector<Cell> cells_;
};

/// One application of H(B) = union_i f_i(B) at the grid of b. Each cell's corners
/// are mapped, and every grid cell meeting the interior of the images' bounding
/// box is claimed (an image face lying on a grid line does not claim the
/// neighbouring cell; a degenerate axis claims the cell holding it).
BoxSet hutchinson_step(const IfsSystem& sys, const BoxSet& b);

/// Hausdorff distance between cell-center sets on a shared grid.
double hausdorff_distance(const BoxSet& u, const BoxSet& v);

struct AttractorResult {
    BoxSet cells;
    int iterations = 0;
    double final_dh = 0.0;
    bool converged = false;
    int apriori_iterations = 0;
};

/// Iterate hutchinson_step from the cover of the bounding box. Stops once the
/// successive distance is zero (a grid fixed point), or at most epsilon after
/// at least the contraction-bound iterate count; otherwise after max_iter with
/// converged = false.
AttractorResult compute_attractor(const IfsSystem& sys, double epsilon, int max_iter);

/// Number of face-connected components of the cell set.
std::size_t connected_groups(const BoxSet& b);

/// Fraction of grid cells with center inside the convex polygon that are present.
double region_occupancy(const BoxSet& b, std::span<const State> polygon);

}  // namespace ifsecon
