#pragma once

#include <cstdint>
#include <random>
#include <vector>

// Deterministic Gaussian sampling of evolution times.
//
// Generator: a SplitMix64 hash folds (seed, stream) into one 64-bit state
// that seeds MT19937-64; uniforms come from the top 53 bits of each output
// word and normals from the Box-Muller transform. Every stage is fully
// specified, so sequences are bit-identical across platforms and runs, and
// distinct stream indices give independent sequences.
namespace rodeo {

struct TimeSampler {
    double mu = 0.0;        // mean evolution time
    double sigma = 1.0;     // standard deviation, > 0
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    long long n_times = 1;
};

// One SplitMix64 step (also usable as a stand-alone mixer).
std::uint64_t splitmix64(std::uint64_t& state);

// Folds up to three tags into a seed; used to derive per-grid-point streams
// so results do not depend on execution order or worker count.
std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t a,
                            std::uint64_t b = 0, std::uint64_t c = 0);

class NormalSampler {
public:
    NormalSampler(std::uint64_t seed, std::uint64_t stream);

    double next();          // standard normal deviate
    double next_uniform();  // uniform in [0, 1)

private:
    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// n_times draws from Normal(mu, sigma^2). Throws std::invalid_argument when
// sigma <= 0 or n_times < 1.
std::vector<double> sample_times(const TimeSampler& sampler);

}  // namespace rodeo
