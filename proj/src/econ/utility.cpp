#include "ifsecon/econ/utility.hpp"

#include <algorithm>
#include <cmath>

#include "ifsecon/errors.hpp"
#include "ifsecon/rng.hpp"

namespace ifsecon::econ {

namespace {

bool pairwise_distinct(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

}  // namespace

MultiplicativeUtilityParams::MultiplicativeUtilityParams(std::vector<double> rhos_, ProbVector pi_,
                                                         double k0_)
    : rhos(std::move(rhos_)), pi(std::move(pi_)), k0(k0_) {
    require(rhos.size() == pi.size(), "multiplicative utility: need one weight per rho");
    for (double r : rhos) require(r > 0.0 && r < 1.0, "multiplicative utility: rho_i must lie in (0, 1)");
    require(pairwise_distinct(rhos), "multiplicative utility: rho_i must be pairwise distinct");
    require(std::isfinite(k0), "multiplicative utility: k0 must be finite");
}

double MultiplicativeUtilityParams::log_rate() const {
    double s = 0.0;
    for (std::size_t i = 0; i < rhos.size(); ++i) s += pi[i] * std::log(rhos[i]);
    return s;
}

AffineUtilityParams::AffineUtilityParams(double rho_, std::vector<double> rs_, ProbVector pi_,
                                         double k0_)
    : rho(rho_), rs(std::move(rs_)), pi(std::move(pi_)), k0(k0_) {
    require(rho > 0.0 && rho < 1.0, "affine utility: rho must lie in (0, 1)");
    require(rs.size() == pi.size(), "affine utility: need one weight per r");
    for (double r : rs) require(std::isfinite(r) && r >= 0.0, "affine utility: r_i must be nonnegative");
    require(std::any_of(rs.begin(), rs.end(), [](double r) { return r > 0.0; }),
            "affine utility: at least one r_i must be positive");
    require(pairwise_distinct(rs), "affine utility: r_i must be pairwise distinct");
    require(std::isfinite(k0), "affine utility: k0 must be finite");
}

std::pair<double, double> AffineUtilityParams::invariant_interval() const {
    const auto [lo, hi] = std::minmax_element(rs.begin(), rs.end());
    return {*lo / (1.0 - rho), *hi / (1.0 - rho)};
}

IfsSystem AffineUtilityParams::as_ifs() const {
    std::vector<AffineMap> maps;
    for (double r : rs) maps.push_back(AffineMap::scalar(rho, r));
    const auto [lo, hi] = invariant_interval();
    return IfsSystem(std::move(maps), Box{1, {lo, 0.0}, {hi, 0.0}}, pi);
}

UtilityPath simulate_multiplicative_utility(const MultiplicativeUtilityParams& p, int n,
                                            std::uint64_t seed) {
    require(n >= 1, "simulate_multiplicative_utility: n must be at least 1");
    CategoricalSampler sampler(p.pi.weights(), seed);
    UtilityPath path;
    path.shocks.reserve(static_cast<std::size_t>(n));
    path.values.reserve(static_cast<std::size_t>(n) + 1);
    path.values.push_back(p.k0);
    for (int k = 1; k <= n; ++k) {
        const double xi = p.rhos[sampler.next()];
        path.shocks.push_back(xi);
        path.values.push_back(xi * path.values.back());
    }
    return path;
}

UtilityPath simulate_affine_utility(const AffineUtilityParams& p, int n, std::uint64_t seed) {
    require(n >= 1, "simulate_affine_utility: n must be at least 1");
    CategoricalSampler sampler(p.pi.weights(), seed);
    UtilityPath path;
    path.shocks.reserve(static_cast<std::size_t>(n));
    path.values.reserve(static_cast<std::size_t>(n) + 1);
    path.values.push_back(p.k0);
    for (int k = 1; k <= n; ++k) {
        const double eps = p.rs[sampler.next()];
        path.shocks.push_back(eps);
        path.values.push_back(p.rho * path.values.back() + eps);
    }
    return path;
}

std::vector<double> multiplicative_closed_form(double k0, std::span<const double> shocks) {
    std::vector<double> out{k0};
    double prod = 1.0;
    for (double xi : shocks) {
        prod *= xi;
        out.push_back(prod * k0);
    }
    return out;
}

std::vector<double> affine_closed_form(double rho, double k0, std::span<const double> shocks) {
    std::vector<double> out{k0};
    for (std::size_t n = 1; n <= shocks.size(); ++n) {
        double u = std::pow(rho, static_cast<double>(n)) * k0;
        for (std::size_t i = 1; i <= n; ++i) {
            u += std::pow(rho, static_cast<double>(n - i)) * shocks[i - 1];
        }
        out.push_back(u);
    }
    return out;
}

}  // namespace ifsecon::econ
