#pragma once

#include <cstdint>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "saci/errors.hpp"

namespace saci {

/// Bucket width of a time grid.
enum class Granularity { day, hour, minute, second };

int64_t period_seconds(Granularity g);
std::string_view to_string(Granularity g);
Granularity granularity_from_string(std::string_view name);

/// Uniform bucket grid over UTC epoch seconds. `start` is aligned to the
/// granularity boundary; bucket i covers [start + i*period, start + (i+1)*period).
struct TimeGrid {
    int64_t start = 0;
    Granularity granularity = Granularity::day;
    std::size_t count = 0;

    int64_t period() const { return period_seconds(granularity); }
    int64_t bucket_start(std::size_t i) const { return start + static_cast<int64_t>(i) * period(); }
    int64_t end() const { return bucket_start(count); }

    /// Bucket index of timestamp t, or nullopt when t falls outside the grid.
    std::optional<std::size_t> index_of(int64_t t) const;

    bool operator==(const TimeGrid&) const = default;
};

/// Builds the grid covering [start, end). A start that is not aligned to the
/// granularity is floored to the boundary before counting buckets.
TimeGrid build_grid(int64_t start, int64_t end, Granularity g);

/// One metric's values on a grid. A value at an absent position is exactly
/// 0.0 — the neutral fill in the normalized [-1,+1] space; sparsity is
/// expressed separately through channel representability weights.
struct SeriesFrame {
    std::string channel;
    std::string metric;
    std::string variant;  // "" for raw series, else one of the transform suffixes
    TimeGrid grid;
    std::vector<double> values;          // length == grid.count
    std::vector<std::uint8_t> present;   // length == grid.count, {0,1}

    static SeriesFrame make_absent(std::string channel, std::string metric,
                                   std::string variant, TimeGrid grid);

    std::size_t size() const { return values.size(); }
    void set(std::size_t i, double v) {
        values[i] = v;
        present[i] = 1;
    }
    void clear(std::size_t i) {
        values[i] = 0.0;
        present[i] = 0;
    }
    bool is_present(std::size_t i) const { return present[i] != 0; }
    std::size_t present_count() const;
};

/// The designated target series of the causal analysis (price difference by
/// default). Wrapped so cause and effect cannot be swapped accidentally.
struct EffectSeries {
    SeriesFrame frame;
};

/// Identity of a frame inside a frame set; total ordering is lexicographic by
/// (channel, metric, variant).
struct FrameKey {
    std::string channel;
    std::string metric;
    std::string variant;

    auto operator<=>(const FrameKey&) const = default;
    std::string str() const { return channel + "/" + metric + (variant.empty() ? "" : "/" + variant); }
};

FrameKey key_of(const SeriesFrame& frame);

/// Sub-frame over grid indices [begin, end); the slice gets its own grid
/// starting at the begin bucket.
SeriesFrame slice_frame(const SeriesFrame& frame, std::size_t begin, std::size_t end);

}  // namespace saci
