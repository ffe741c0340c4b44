#include "saci/correlation.hpp"

#include <cmath>
#include <limits>

namespace saci {

namespace {

struct PairWindow {
    const double* x;
    const double* y;
    std::size_t n;
};

// Two-pass Pearson over a pair window; NaN signals zero variance.
double pearson_window(PairWindow w) noexcept {
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < w.n; ++i) {
        mx += w.x[i];
        my += w.y[i];
    }
    mx /= static_cast<double>(w.n);
    my /= static_cast<double>(w.n);

    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < w.n; ++i) {
        const double dx = w.x[i] - mx;
        const double dy = w.y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return sxy / (std::sqrt(sxx) * std::sqrt(syy));
}

}  // namespace

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw Error(Errc::size_mismatch, "pearson over sequences of " + std::to_string(x.size()) +
                                             " and " + std::to_string(y.size()) + " values");
    }
    if (x.size() < 3) {
        throw Error(Errc::too_short, "pearson needs at least 3 pairs, got " +
                                         std::to_string(x.size()));
    }
    const double r = pearson_window({x.data(), y.data(), x.size()});
    if (std::isnan(r)) {
        throw Error(Errc::zero_variance, "constant sequence has no defined correlation");
    }
    return r;
}

namespace detail {

double lagged_pearson_unchecked(const SeriesFrame& cause, const SeriesFrame& effect,
                                int lag) noexcept {
    // Pairs (cause[t], effect[t + lag]) over all t where both indices are
    // valid: t in [max(0, -lag), n - max(0, lag)).
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(cause.size());
    const std::ptrdiff_t begin = lag < 0 ? -static_cast<std::ptrdiff_t>(lag) : 0;
    const std::ptrdiff_t end = lag > 0 ? n - lag : n;
    const std::size_t overlap = static_cast<std::size_t>(end - begin);
    return pearson_window({cause.values.data() + begin,
                           effect.values.data() + begin + lag, overlap});
}

}  // namespace detail

double lagged_pearson(const SeriesFrame& cause, const EffectSeries& effect, int lag) {
    if (cause.grid != effect.frame.grid) {
        throw Error(Errc::size_mismatch, "cause and effect are on different grids");
    }
    const std::size_t n = cause.size();
    if (n < 3) {
        throw Error(Errc::too_short, "lagged correlation needs a grid of at least 3 buckets");
    }
    const std::size_t abs_lag = static_cast<std::size_t>(lag < 0 ? -static_cast<int64_t>(lag) : lag);
    if (abs_lag >= n - 2) {
        throw Error(Errc::lag_out_of_range, "lag " + std::to_string(lag) + " leaves fewer than 3 of " +
                                                std::to_string(n) + " buckets overlapping");
    }
    const double r = detail::lagged_pearson_unchecked(cause, effect.frame, lag);
    if (std::isnan(r)) {
        throw Error(Errc::zero_variance, "constant window in lagged correlation of " +
                                             key_of(cause).str() + " at lag " + std::to_string(lag));
    }
    return r;
}

}  // namespace saci
