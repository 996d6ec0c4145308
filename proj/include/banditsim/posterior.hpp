#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "banditsim/random.hpp"

namespace banditsim {

// Running-average belief for one arm (or one cluster): empirical mean and
// pull count. A fresh state has mean 0 and count 0, which is also what the
// sampler treats as the prior N(0, 1).
struct PosteriorState {
    double empirical_mean = 0.0;
    std::uint64_t pull_count = 0;
};

inline PosteriorState posterior_update(const PosteriorState& state, double reward) {
    if (!std::isfinite(reward)) {
        throw std::invalid_argument("posterior_update: reward must be finite");
    }
    const double n = static_cast<double>(state.pull_count);
    return PosteriorState{(state.empirical_mean * n + reward) / (n + 1.0), state.pull_count + 1};
}

// One draw from N(empirical_mean, 1/(pull_count + 1)).
inline double posterior_sample(const PosteriorState& state, RandomStream& rng) {
    const double stddev = 1.0 / std::sqrt(static_cast<double>(state.pull_count) + 1.0);
    return state.empirical_mean + stddev * rng.gaussian();
}

}  // namespace banditsim
