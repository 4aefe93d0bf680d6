#include "rodeo/sampler.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rodeo {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t a,
                            std::uint64_t b, std::uint64_t c) {
    std::uint64_t state = seed;
    std::uint64_t out = splitmix64(state);
    state ^= a;
    out ^= splitmix64(state);
    state ^= b;
    out ^= splitmix64(state);
    state ^= c;
    out ^= splitmix64(state);
    return out;
}

NormalSampler::NormalSampler(std::uint64_t seed, std::uint64_t stream)
    : rng_(derive_stream(seed, stream)) {}

double NormalSampler::next_uniform() {
    // Top 53 bits -> [0, 1) with full double resolution.
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

double NormalSampler::next() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller; u1 shifted into (0, 1] so the log never sees zero.
    const double u1 = (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = next_uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

std::vector<double> sample_times(const TimeSampler& sampler) {
    if (!(sampler.sigma > 0.0)) {
        throw std::invalid_argument("sample_times: sigma must be > 0");
    }
    if (sampler.n_times < 1) {
        throw std::invalid_argument("sample_times: need at least one draw");
    }
    NormalSampler normal(sampler.seed, sampler.stream);
    std::vector<double> times(sampler.n_times);
    for (double& t : times) {
        t = sampler.mu + sampler.sigma * normal.next();
    }
    return times;
}

}  // namespace rodeo
