#include "saci/series.hpp"

#include <algorithm>

namespace saci {

int64_t period_seconds(Granularity g) {
    switch (g) {
        case Granularity::day: return 86400;
        case Granularity::hour: return 3600;
        case Granularity::minute: return 60;
        case Granularity::second: return 1;
    }
    return 1;
}

std::string_view to_string(Granularity g) {
    switch (g) {
        case Granularity::day: return "day";
        case Granularity::hour: return "hour";
        case Granularity::minute: return "minute";
        case Granularity::second: return "second";
    }
    return "day";
}

Granularity granularity_from_string(std::string_view name) {
    if (name == "day") return Granularity::day;
    if (name == "hour") return Granularity::hour;
    if (name == "minute") return Granularity::minute;
    if (name == "second") return Granularity::second;
    throw Error(Errc::config_error, "unknown granularity '" + std::string(name) + "'");
}

namespace {
// Floor division that is exact for negative timestamps as well.
int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
}  // namespace

std::optional<std::size_t> TimeGrid::index_of(int64_t t) const {
    if (t < start) return std::nullopt;
    const int64_t idx = floor_div(t - start, period());
    if (idx < 0 || static_cast<std::size_t>(idx) >= count) return std::nullopt;
    return static_cast<std::size_t>(idx);
}

TimeGrid build_grid(int64_t start, int64_t end, Granularity g) {
    if (end <= start) {
        throw Error(Errc::non_positive_span,
                    "grid span [" + std::to_string(start) + ", " + std::to_string(end) +
                        ") is empty");
    }
    const int64_t period = period_seconds(g);
    const int64_t aligned = floor_div(start, period) * period;
    const int64_t span = end - aligned;
    const int64_t count = floor_div(span + period - 1, period);
    return TimeGrid{aligned, g, static_cast<std::size_t>(count)};
}

SeriesFrame SeriesFrame::make_absent(std::string channel, std::string metric, std::string variant,
                                     TimeGrid grid) {
    SeriesFrame frame;
    frame.channel = std::move(channel);
    frame.metric = std::move(metric);
    frame.variant = std::move(variant);
    frame.grid = grid;
    frame.values.assign(grid.count, 0.0);
    frame.present.assign(grid.count, 0);
    return frame;
}

std::size_t SeriesFrame::present_count() const {
    return static_cast<std::size_t>(std::count(present.begin(), present.end(), std::uint8_t{1}));
}

FrameKey key_of(const SeriesFrame& frame) {
    return FrameKey{frame.channel, frame.metric, frame.variant};
}

SeriesFrame slice_frame(const SeriesFrame& frame, std::size_t begin, std::size_t end) {
    if (begin > end || end > frame.size()) {
        throw Error(Errc::size_mismatch, "slice [" + std::to_string(begin) + ", " +
                                             std::to_string(end) + ") out of range for frame of " +
                                             std::to_string(frame.size()) + " buckets");
    }
    SeriesFrame out;
    out.channel = frame.channel;
    out.metric = frame.metric;
    out.variant = frame.variant;
    out.grid = TimeGrid{frame.grid.bucket_start(begin), frame.grid.granularity, end - begin};
    out.values.assign(frame.values.begin() + static_cast<std::ptrdiff_t>(begin),
                      frame.values.begin() + static_cast<std::ptrdiff_t>(end));
    out.present.assign(frame.present.begin() + static_cast<std::ptrdiff_t>(begin),
                       frame.present.begin() + static_cast<std::ptrdiff_t>(end));
    return out;
}

}  // namespace saci
