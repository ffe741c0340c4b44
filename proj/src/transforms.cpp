#include "saci/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "saci/logging.hpp"

namespace saci {

bool is_valid_variant(std::string_view suffix) {
    if (suffix.empty()) return true;  // raw, untransformed series
    return std::find(kVariantSuffixes.begin(), kVariantSuffixes.end(), suffix) !=
           kVariantSuffixes.end();
}

SeriesFrame differentiate(const SeriesFrame& x) {
    if (x.size() < 2) {
        throw Error(Errc::too_short, "cannot differentiate a frame of " +
                                         std::to_string(x.size()) + " buckets");
    }
    SeriesFrame y = SeriesFrame::make_absent(x.channel, x.metric, x.variant, x.grid);
    for (std::size_t t = 1; t < x.size(); ++t) {
        if (x.is_present(t) && x.is_present(t - 1)) {
            y.set(t, x.values[t] - x.values[t - 1]);
        }
    }
    return y;
}

SeriesFrame signed_log(const SeriesFrame& x) {
    SeriesFrame y = x;
    for (std::size_t t = 0; t < y.size(); ++t) {
        const double v = x.values[t];
        y.values[t] = std::copysign(std::log10(1.0 + std::abs(v)), v);
    }
    return y;
}

SeriesFrame max_abs_normalize(const SeriesFrame& x, std::optional<std::size_t> train_count) {
    const std::size_t fit_end = std::min(train_count.value_or(x.size()), x.size());
    double max_abs = 0.0;
    for (std::size_t t = 0; t < fit_end; ++t) {
        if (x.is_present(t)) max_abs = std::max(max_abs, std::abs(x.values[t]));
    }
    SeriesFrame y = x;
    if (max_abs == 0.0) return y;  // all zeros on the fit slice: leave unchanged

    std::size_t clamped = 0;
    for (std::size_t t = 0; t < y.size(); ++t) {
        double v = x.values[t] / max_abs;
        if (v > 1.0) {
            v = 1.0;
            ++clamped;
        } else if (v < -1.0) {
            v = -1.0;
            ++clamped;
        }
        y.values[t] = v;
    }
    if (clamped > 0) {
        log_warn(key_of(x).str() + ": " + std::to_string(clamped) +
                 " out-of-sample value(s) beyond the training max-abs were clamped to [-1,1]");
    }
    return y;
}

std::array<SeriesFrame, 4> expand_variants(const SeriesFrame& x,
                                           std::optional<std::size_t> train_count) {
    if (x.size() < 2) {
        throw Error(Errc::too_short, "variant expansion needs at least 2 buckets");
    }
    const SeriesFrame diff = differentiate(x);
    std::array<SeriesFrame, 4> out = {
        max_abs_normalize(x, train_count),
        max_abs_normalize(signed_log(x), train_count),
        max_abs_normalize(diff, train_count),
        max_abs_normalize(signed_log(diff), train_count),
    };
    for (std::size_t i = 0; i < out.size(); ++i) out[i].variant = std::string(kVariantSuffixes[i]);
    return out;
}

}  // namespace saci
