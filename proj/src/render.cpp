#include "ifsecon/render.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "ifsecon/errors.hpp"

namespace ifsecon {

RenderCanvas::RenderCanvas(int width, int height, const Box& world)
    : width_(width), height_(height), center_{0.0, 0.0}, scale_(1.0) {
    require(width >= 1 && height >= 1, "render: width and height must be at least 1");
    const double w = world.hi[0] - world.lo[0];
    const double h = world.dim == 2 ? world.hi[1] - world.lo[1] : 0.0;
    require(std::isfinite(w) && std::isfinite(h) && w >= 0.0 && h >= 0.0, "render: bad world box");
    center_ = {0.5 * (world.lo[0] + world.hi[0]),
               world.dim == 2 ? 0.5 * (world.lo[1] + world.hi[1]) : 0.0};
    double s = std::numeric_limits<double>::infinity();
    if (w > 0.0) s = std::min(s, width / w);
    if (h > 0.0) s = std::min(s, height / h);
    scale_ = std::isfinite(s) ? s : 1.0;
    // Pixel span of the world box; points on its far edges land inside it.
    const auto span = [](double mid, double half, int size) {
        const int first = static_cast<int>(std::max(0.0, std::floor(mid - half)));
        const int last = static_cast<int>(std::min(size - 1.0, std::ceil(mid + half) - 1.0));
        return std::pair<int, int>{first, std::max(first, last)};
    };
    cols_ = span(0.5 * width, 0.5 * w * scale_, width);
    rows_ = span(0.5 * height, 0.5 * h * scale_, height);
    counts_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
}

std::pair<int, int> RenderCanvas::pixel_of(const State& p) const {
    const double u = (p[0] - center_[0]) * scale_ + 0.5 * width_;
    const double v = 0.5 * height_ - (p[1] - center_[1]) * scale_;
    const int col = static_cast<int>(std::clamp(std::floor(u), double(cols_.first), double(cols_.second)));
    const int row = static_cast<int>(std::clamp(std::floor(v), double(rows_.first), double(rows_.second)));
    return {col, row};
}

void RenderCanvas::add(const State& p) {
    const auto [col, row] = pixel_of(p);
    ++counts_[static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
              static_cast<std::size_t>(col)];
}

std::uint64_t RenderCanvas::count(int col, int row) const {
    require(col >= 0 && col < width_ && row >= 0 && row < height_, "render: pixel out of range");
    return counts_[static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
                   static_cast<std::size_t>(col)];
}

std::uint64_t RenderCanvas::max_count() const {
    return *std::max_element(counts_.begin(), counts_.end());
}

std::vector<std::uint8_t> RenderCanvas::intensities(double gamma) const {
    require(std::isfinite(gamma) && gamma > 0.0, "render: gamma must be positive");
    const double top = static_cast<double>(max_count());
    std::vector<std::uint8_t> out(counts_.size(), 0);
    if (top == 0.0) return out;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (counts_[i] == 0) continue;
        const double v = std::floor(255.0 * std::pow(static_cast<double>(counts_[i]) / top, gamma) + 0.5);
        out[i] = static_cast<std::uint8_t>(std::clamp(v, 1.0, 255.0));
    }
    return out;
}

void RenderCanvas::write_pgm(std::ostream& out, double gamma) const {
    const auto px = intensities(gamma);
    out << "P5\n" << width_ << ' ' << height_ << "\n255\n";
    out.write(reinterpret_cast<const char*>(px.data()), static_cast<std::streamsize>(px.size()));
}

RenderCanvas rasterize(const PointCloud& cloud, int width, int height) {
    require(!cloud.empty(), "render: empty point cloud");
    RenderCanvas canvas(width, height, cloud.bounds());
    for (const State& p : cloud.points) canvas.add(p);
    return canvas;
}

}  // namespace ifsecon
