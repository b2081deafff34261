#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "ifsecon/chaos_game.hpp"
#include "ifsecon/geometry.hpp"

namespace ifsecon {

/// Hit-count raster of a world box. The box is scaled uniformly to fit the
/// canvas and centered (letterboxed); the y axis points up.
class RenderCanvas {
public:
    RenderCanvas(int width, int height, const Box& world);

    int width() const { return width_; }
    int height() const { return height_; }
    /// Column and row (row 0 at the top), clamped to the pixels covering the world box.
    std::pair<int, int> pixel_of(const State& p) const;
    void add(const State& p);
    std::uint64_t count(int col, int row) const;
    std::uint64_t max_count() const;

    /// 255 (count / max)^gamma rounded half-up. An occupied pixel never
    /// drops to 0, so the nonzero set does not depend on gamma.
    std::vector<std::uint8_t> intensities(double gamma) const;
    void write_pgm(std::ostream& out, double gamma) const;

private:
    int width_;
    int height_;
    State center_;
    double scale_;
    std::pair<int, int> cols_;
    std::pair<int, int> rows_;
    std::vector<std::uint64_t> counts_;
};

/// Canvas over the cloud's bounds with every point added. Throws
/// InvalidArgument on an empty cloud.
RenderCanvas rasterize(const PointCloud& cloud, int width, int height);

}  // namespace ifsecon
