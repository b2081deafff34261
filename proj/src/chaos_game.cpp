#include "ifsecon/chaos_game.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ifsecon/errors.hpp"
#include "ifsecon/rng.hpp"

namespace ifsecon {

Box PointCloud::bounds() const {
    require(!points.empty(), "bounds of an empty cloud");
    Box b{dim, points.front(), points.front()};
    for (const State& p : points) {
        for (int k = 0; k < dim; ++k) {
            b.lo[k] = std::min(b.lo[k], p[k]);
            b.hi[k] = std::max(b.hi[k], p[k]);
        }
    }
    return b;
}

PointCloud chaos_game(const IfsSystem& sys, const State& x0, std::size_t n, std::size_t burn_in,
                      std::uint64_t seed) {
    if (!sys.pi()) throw MissingProbability("chaos_game: system has no probability vector");
    require(n > burn_in, "chaos_game: n must exceed burn_in");
    require(sys.contains(x0), "chaos_game: starting state lies outside the invariant set");

    CategoricalSampler sampler(sys.pi()->weights(), seed);
    PointCloud cloud{sys.dim(), {}};
    cloud.points.reserve(n - burn_in);
    State z = x0;
    if (sys.dim() == 1) z[1] = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        z = sys.map(sampler.next())(z);
        if (k > burn_in) cloud.points.push_back(z);
    }
    return cloud;
}

State address_point(const IfsSystem& sys, const Address& addr, const State& x0) {
    for (std::size_t s : addr) {
        require(s < sys.size(), "address_point: symbol " + std::to_string(s) + " out of range");
    }
    require(sys.contains(x0), "address_point: starting state lies outside the invariant set");
    State z = x0;
    for (auto it = addr.rbegin(); it != addr.rend(); ++it) z = sys.map(*it)(z);
    return z;
}

double baire_distance(const Address& mu, const Address& ups) {
    require(mu.size() == ups.size(), "baire_distance: addresses differ in length");
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] != ups[i]) return std::ldexp(1.0, -static_cast<int>(i + 1));
    }
    return 0.0;
}

double empirical_measure(const PointCloud& cloud, const Box& y) {
    require(!cloud.empty(), "empirical_measure: cloud is empty");
    std::size_t hits = 0;
    for (const State& p : cloud.points) hits += y.contains(p) ? 1 : 0;
    return static_cast<double>(hits) / static_cast<double>(cloud.size());
}

double balanced_measure_residual(const IfsSystem& sys, const PointCloud& cloud,
                                 std::span<const Box> test_sets) {
    if (!sys.pi()) throw MissingProbability("balanced_measure_residual: system has no probability vector");
    require(!cloud.empty(), "balanced_measure_residual: cloud is empty");
    require(cloud.dim == sys.dim(), "balanced_measure_residual: dimension mismatch");
    for (const auto& f : sys.maps()) {
        if (!f.invertible()) throw CannotInvert("balanced_measure_residual: singular map");
    }
    const auto& pi = *sys.pi();
    const double n = static_cast<double>(cloud.size());
    double worst = 0.0;
    for (const Box& y : test_sets) {
        require(y.dim == sys.dim(), "balanced_measure_residual: test set dimension mismatch");
        const double direct = empirical_measure(cloud, y);
        double pulled = 0.0;
        for (std::size_t i = 0; i < sys.size(); ++i) {
            std::size_t hits = 0;
            for (const State& p : cloud.points) hits += y.contains(sys.map(i)(p)) ? 1 : 0;
            pulled += pi[i] * static_cast<double>(hits) / n;
        }
        worst = std::max(worst, std::abs(direct - pulled));
    }
    return worst;
}

}  // namespace ifsecon
