#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace ifsecon {

/// Deterministic categorical sampler used by every random simulation.
///
/// The engine is std::mt19937_64 seeded with the 64-bit seed, whose update
/// rule is fixed by the C++ standard. A uniform u in [0, 1) is formed from the
/// top 53 bits of one engine output, u = (x >> 11) * 2^-53, and the index is
/// the first i (in index order) with u < cumulative[i]. Standard-library
/// distributions are avoided because their algorithms vary between vendors.
class CategoricalSampler {
public:
    CategoricalSampler(std::span<const double> weights, std::uint64_t seed)
        : engine_(seed) {
        cumulative_.reserve(weights.size());
        double acc = 0.0;
        for (double w : weights) {
            acc += w;
            cumulative_.push_back(acc);
        }
    }

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::size_t next() {
        const double u = uniform();
        for (std::size_t i = 0; i + 1 < cumulative_.size(); ++i) {
            if (u < cumulative_[i]) return i;
        }
        return cumulative_.size() - 1;
    }

private:
    std::mt19937_64 engine_;
    std::vector<double> cumulative_;
};

}  // namespace ifsecon
