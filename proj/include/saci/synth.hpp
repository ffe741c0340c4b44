#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "saci/series.hpp"

namespace saci {

/// Recipe for a planted-causality dataset. The seed fully determines the
/// output; n - true_lag must be at least 10.
struct PlantedSpec {
    std::size_t n = 500;
    int true_lag = 3;
    std::vector<double> cause_weights = {0.8};
    double noise_sigma = 0.6;
    std::size_t n_noise_frames = 20;
    std::uint64_t seed = 42;
    Granularity granularity = Granularity::day;
    int64_t start = 0;
};

struct PlantedDataset {
    std::vector<SeriesFrame> causes;   // max-abs normalized, variant "N"
    std::vector<SeriesFrame> noises;   // ditto
    EffectSeries effect;               // raw planted effect
    SeriesFrame prices;                // base + cumulative sum of the effect
    // ground truth
    std::vector<FrameKey> true_cause_keys;
    int true_lag = 0;
    std::string generator;             // RNG identity, e.g. "mt19937_64-boxmuller"
};

/// Deterministic generator: each true cause is standard normal noise,
/// effect(t) = sum_i w_i * cause_i(t - true_lag) + noise_sigma * eta(t), and
/// noise frames are independent standard normals. Gaussians come from
/// mt19937_64 draws through a Box-Muller transform so the sequence is pinned
/// to the recorded generator identity. Throws Errc::spec_invalid.
PlantedDataset generate_planted(const PlantedSpec& spec);

}  // namespace saci
