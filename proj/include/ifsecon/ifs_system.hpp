#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ifsecon/affine_map.hpp"
#include "ifsecon/geometry.hpp"

namespace ifsecon {

/// Strictly positive weights over map indices 0..N-1 summing to 1 (within 1e-12).
class ProbVector {
public:
    explicit ProbVector(std::vector<double> weights);

    std::size_t size() const { return weights_.size(); }
    double operator[](std::size_t i) const { return weights_[i]; }
    std::span<const double> weights() const { return weights_; }

private:
    std::vector<double> weights_;
};

/// An iterated function system: N >= 2 contractions of a common dimension,
/// a closed bounding box and, optionally, the probability vector that turns it
/// into a random function system.
///
/// Invariance is validated on construction. Without a region, every map must
/// send the bounding box into itself. Some systems (De Rham's Peano curve) have
/// no invariant axis-aligned box at all, so a 2-dim system may instead carry a
/// convex invariant polygon inside the box; then every map must send the
/// polygon into itself. Violations throw InvalidArgument.
class IfsSystem {
public:
    IfsSystem(std::vector<AffineMap> maps, Box bounding_box,
              std::optional<ProbVector> pi = std::nullopt,
              std::vector<State> region = {});

    int dim() const { return maps_.front().dim(); }
    std::size_t size() const { return maps_.size(); }
    const std::vector<AffineMap>& maps() const { return maps_; }
    const AffineMap& map(std::size_t i) const { return maps_[i]; }
    const Box& bounding_box() const { return box_; }
    const std::optional<ProbVector>& pi() const { return pi_; }
    const std::vector<State>& region() const { return region_; }
    bool has_region() const { return !region_.empty(); }

    /// Largest Lipschitz constant over the maps.
    double lambda() const;
    double diameter() const { return box_.diameter(); }

    /// Membership in the invariant set used for starting states: the region
    /// polygon if present, the bounding box otherwise.
    bool contains(const State& x, double tol = 1e-12) const;

    /// Contraction-bound iterate count ceil(log(eps / diam) / log(lambda)).
    int apriori_iterations(double eps) const;

private:
    std::vector<AffineMap> maps_;
    Box box_;
    std::optional<ProbVector> pi_;
    std::vector<State> region_;
};

bool polygon_contains(std::span<const State> convex_polygon, const State& x, double tol);

/// Maps x/c and x/c + (1 - 1/c) on [0, 1], equal weights. Requires c > 2.
IfsSystem cantor_system(double c);

/// De Rham's pair on the triangle (0, a, 1), equal weights. The bounding box
/// is the triangle's box and the triangle is the invariant region.
/// a = 1/2 + i sqrt(3)/6 gives the Koch curve, a = 1/2 + i/2 the Peano curve.
IfsSystem de_rham_system(double a_re, double a_im);

/// Distance-to-C_depth test for the Cantor set with parameter c (x/c and
/// x/c + 1 - 1/c on [0, 1]): true iff x lies within tol of one of the 2^depth
/// closed intervals of the depth-level construction. Interval endpoints
/// are kept exactly rather than rescaling x, so rounding does not grow with
/// depth.
bool cantor_membership(double x, int depth = 20, double tol = 1e-9, double c = 3.0);

}  // namespace ifsecon
