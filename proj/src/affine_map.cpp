#include "ifsecon/affine_map.hpp"

#include <cmath>
#include <string>

#include "ifsecon/errors.hpp"

namespace ifsecon {

AffineMap::AffineMap(int dim, const Matrix& matrix, const State& offset)
    : dim_(dim), matrix_{}, offset_{} {
    require(dim == 1 || dim == 2, "affine map dimension must be 1 or 2");
    for (int r = 0; r < dim; ++r) {
        offset_[r] = offset[r];
        for (int c = 0; c < dim; ++c) matrix_[r][c] = matrix[r][c];
    }
    lipschitz_ = spectral_norm(matrix_, dim_);
    if (!(lipschitz_ > 0.0 && lipschitz_ < 1.0)) {
        throw NotContractive("affine map is not a strict contraction (lipschitz = " +
                             std::to_string(lipschitz_) + ")");
    }
}

AffineMap AffineMap::scalar(double scale, double shift) {
    Matrix m{};
    m[0][0] = scale;
    return AffineMap(1, m, State{shift, 0.0});
}

bool AffineMap::invertible() const { return determinant(matrix_, dim_) != 0.0; }

State AffineMap::fixed_point() const {
    if (dim_ == 1) return {offset_[0] / (1.0 - matrix_[0][0]), 0.0};
    // (I - D) is nonsingular because every eigenvalue of D has modulus < 1.
    const double a = 1.0 - matrix_[0][0], b = -matrix_[0][1];
    const double c = -matrix_[1][0], d = 1.0 - matrix_[1][1];
    const double det = a * d - b * c;
    return {(d * offset_[0] - b * offset_[1]) / det, (a * offset_[1] - c * offset_[0]) / det};
}

std::vector<double> apply_map(const AffineMap& m, std::span<const double> x) {
    if (static_cast<int>(x.size()) != m.dim()) {
        throw InvalidArgument("apply_map: state has length " + std::to_string(x.size()) +
                              ", map has dim " + std::to_string(m.dim()));
    }
    State s{};
    for (std::size_t k = 0; k < x.size(); ++k) s[k] = x[k];
    const State y = m(s);
    return {y.begin(), y.begin() + m.dim()};
}

std::pair<AffineMap, AffineMap> koch_maps(double a_re, double a_im) {
    const double mod_a = std::hypot(a_re, a_im);
    const double mod_b = std::hypot(1.0 - a_re, -a_im);
    if (!(mod_a < 1.0) || !(mod_b < 1.0)) {
        throw NotContractive("koch_maps: need |a| < 1 and |1 - a| < 1");
    }
    // w * conj(z) for w = p + iq acts on (x, y) as [[p, q], [q, -p]].
    const auto reflect_scale = [](double p, double q) {
        Matrix m{};
        m[0][0] = p;
        m[0][1] = q;
        m[1][0] = q;
        m[1][1] = -p;
        return m;
    };
    AffineMap f1(2, reflect_scale(a_re, a_im), State{0.0, 0.0});
    AffineMap f2(2, reflect_scale(1.0 - a_re, -a_im), State{a_re, a_im});
    return {f1, f2};
}

}  // namespace ifsecon
