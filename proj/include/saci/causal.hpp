#pragma once

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "saci/series.hpp"

namespace saci {

/// One sweep result; zero-variance pairs are recorded as markers and treated
/// as correlation 0 downstream.
struct CorrEntry {
    double p = 0.0;
    bool zero_variance = false;
};

/// Correlation weights P(l, c, m, variant) over a lag interval, dense over
/// (frame, lag).
class CorrelationMatrix {
public:
    CorrelationMatrix() = default;
    CorrelationMatrix(std::vector<FrameKey> keys, int lag_min, int lag_max);

    int lag_min() const { return lag_min_; }
    int lag_max() const { return lag_max_; }
    std::size_t lag_count() const { return static_cast<std::size_t>(lag_max_ - lag_min_ + 1); }
    const std::vector<FrameKey>& keys() const { return keys_; }

    CorrEntry& at(std::size_t key_index, int lag);
    const CorrEntry& at(std::size_t key_index, int lag) const;

    /// Entry for a frame identity; throws Errc::missing_term_frame when the
    /// key was not part of the sweep.
    const CorrEntry& at(const FrameKey& key, int lag) const;
    bool contains(const FrameKey& key) const;

private:
    int lag_min_ = 0;
    int lag_max_ = 0;
    std::vector<FrameKey> keys_;
    std::unordered_map<std::string, std::size_t> index_;  // key.str() -> row
    std::vector<CorrEntry> entries_;                      // row-major [key][lag]
};

/// Representability weights per channel. Channels that are not listed (market
/// data channels, fully represented) default to 1.0.
struct ChannelWeights {
    std::unordered_map<std::string, double> weights;

    double at(const std::string& channel) const {
        auto it = weights.find(channel);
        return it == weights.end() ? 1.0 : it->second;
    }
};

/// Lagged-correlation sweep of every frame against the effect over
/// [lag_min, lag_max]. Entries are independent and computed in parallel;
/// the merge is deterministic. Throws Errc::lag_out_of_range when the
/// interval does not fit the grid.
CorrelationMatrix lag_sweep(std::span<const SeriesFrame> frames, const EffectSeries& effect,
                            int lag_min, int lag_max);

namespace reference {

/// Naive serial double loop over (frame, lag) with its own correlation
/// arithmetic; kept as the independent oracle for the parallel kernel.
CorrelationMatrix lag_sweep_serial(std::span<const SeriesFrame> frames,
                                   const EffectSeries& effect, int lag_min, int lag_max);

}  // namespace reference

struct AssemblyPolicy {
    double min_abs_p = 0.0;            // candidates need |P| strictly above this
    double min_gain = 1e-9;            // required correlation improvement per accepted term
    bool stop_on_first_failure = false;  // stricter reading: first rejection ends assembly
};

struct SaciTerm {
    std::string channel;
    std::string metric;
    std::string variant;
    double weight = 0.0;  // P(l,c,m,v) * W(c)
};

/// The assembled indicator: ordered accepted terms with their weights, the
/// achieved training correlation at `lag`, and the grid span it was fit on.
struct SaciModel {
    int lag = 0;
    std::vector<SaciTerm> terms;
    double training_correlation = 0.0;
    std::size_t train_begin = 0;
    std::size_t train_end = 0;  // exclusive
};

struct AssemblyResult {
    SaciModel model;
    SeriesFrame y;  // indicator series on the training grid
    std::vector<double> correlation_path;  // after each accepted term, strictly increasing
};

/// Greedy assembly of Y(d) = sum of X(c,m,d) * P(l,c,m) * W(c): candidates
/// are ordered by W(c)*|P| descending (ties lexicographic by key), the first
/// is always accepted, and each later term is kept iff it raises the lagged
/// correlation of Y with the effect by more than policy.min_gain. Rejected
/// candidates are skipped unless policy.stop_on_first_failure is set.
/// Throws Errc::no_candidates when nothing is admissible.
AssemblyResult assemble_saci(std::span<const SeriesFrame> frames, const EffectSeries& effect,
                             int lag, const CorrelationMatrix& correlations,
                             const ChannelWeights& channel_weights,
                             const AssemblyPolicy& policy = {});

/// Evaluates a model on any span: Y(d) = sum over terms of X(c,m,d) * weight.
/// Throws Errc::missing_term_frame when a term's frame is not supplied.
SeriesFrame apply_saci(const SaciModel& model, std::span<const SeriesFrame> frames);

}  // namespace saci
