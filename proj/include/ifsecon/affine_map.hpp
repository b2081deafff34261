#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ifsecon/geometry.hpp"

namespace ifsecon {

/// A strict contraction x -> D x + e on R^1 or R^2.
///
/// The Lipschitz constant is the spectral norm of D and is cached on
/// construction; construction throws NotContractive unless it lies in (0, 1).
class AffineMap {
public:
    AffineMap(int dim, const Matrix& matrix, const State& offset);

    /// Convenience for 1-dim maps x -> scale * x + shift.
    static AffineMap scalar(double scale, double shift);

    int dim() const { return dim_; }
    const Matrix& matrix() const { return matrix_; }
    const State& offset() const { return offset_; }
    double lipschitz() const { return lipschitz_; }

    State operator()(const State& x) const {
        if (dim_ == 1) return {matrix_[0][0] * x[0] + offset_[0], 0.0};
        return {matrix_[0][0] * x[0] + matrix_[0][1] * x[1] + offset_[0],
                matrix_[1][0] * x[0] + matrix_[1][1] * x[1] + offset_[1]};
    }

    bool invertible() const;

    /// The unique fixed point, solving (I - D) x = e.
    State fixed_point() const;

private:
    int dim_;
    Matrix matrix_;
    State offset_;
    double lipschitz_;
};

/// apply_map: checked application to a coordinate vector of length dim.
std::vector<double> apply_map(const AffineMap& m, std::span<const double> x);

/// De Rham's pair f1(z) = a conj(z), f2(z) = (1 - a) conj(z) + a on C = R^2.
/// Requires |a| < 1 and |1 - a| < 1.
std::pair<AffineMap, AffineMap> koch_maps(double a_re, double a_im);

}  // namespace ifsecon
