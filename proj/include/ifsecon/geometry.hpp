#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace ifsecon {

// States live in R^1 or R^2. Unused components of a 1-dim state are zero.
inline constexpr int kMaxDim = 2;

using State = std::array<double, kMaxDim>;
using Matrix = std::array<std::array<double, kMaxDim>, kMaxDim>;

/// Closed axis-aligned box [lo, hi] in the first `dim` coordinates.
struct Box {
    int dim = 1;
    State lo{};
    State hi{};

    bool contains(const State& x, double tol = 0.0) const {
        for (int k = 0; k < dim; ++k) {
            if (x[k] < lo[k] - tol || x[k] > hi[k] + tol) return false;
        }
        return true;
    }

    double diameter() const {
        double s = 0.0;
        for (int k = 0; k < dim; ++k) s += (hi[k] - lo[k]) * (hi[k] - lo[k]);
        return std::sqrt(s);
    }

    std::vector<State> corners() const {
        std::vector<State> out;
        if (dim == 1) {
            out.push_back({lo[0], 0.0});
            out.push_back({hi[0], 0.0});
        } else {
            out.push_back({lo[0], lo[1]});
            out.push_back({hi[0], lo[1]});
            out.push_back({lo[0], hi[1]});
            out.push_back({hi[0], hi[1]});
        }
        return out;
    }
};

inline double distance(const State& a, const State& b, int dim) {
    double s = 0.0;
    for (int k = 0; k < dim; ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
    return std::sqrt(s);
}

/// Largest singular value of the leading dim x dim block.
inline double spectral_norm(const Matrix& m, int dim) {
    if (dim == 1) return std::abs(m[0][0]);
    const double a = m[0][0], b = m[0][1], c = m[1][0], d = m[1][1];
    const double frob2 = a * a + b * b + c * c + d * d;
    const double det = a * d - b * c;
    const double disc = std::sqrt(std::max(0.0, frob2 * frob2 - 4.0 * det * det));
    return std::sqrt(0.5 * (frob2 + disc));
}

inline double determinant(const Matrix& m, int dim) {
    return dim == 1 ? m[0][0] : m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

}  // namespace ifsecon
