#pragma once

#include <span>

#include "saci/series.hpp"

namespace saci {

/// Sample Pearson correlation coefficient of two equal-length sequences.
/// Requires n >= 3 and nonzero variance on both sides; throws
/// Errc::too_short / Errc::zero_variance / Errc::size_mismatch otherwise.
double pearson(std::span<const double> x, std::span<const double> y);

/// Pearson correlation of the pairs (cause[t], effect[t + lag]) over every t
/// where both indices are valid — the full overlapping window, no padding.
///
/// lag > 0 means the cause precedes the effect by `lag` buckets (the causal
/// direction of interest); lag < 0 means the cause trails the effect. Throws
/// Errc::lag_out_of_range when |lag| >= count - 2 (overlap would drop below
/// three pairs) and Errc::zero_variance when either window is constant.
double lagged_pearson(const SeriesFrame& cause, const EffectSeries& effect, int lag);

namespace detail {

/// Exception-free kernel used by the parallel sweep: returns the correlation,
/// or NaN when either window of the overlap has zero variance. Preconditions
/// (shared grid, lag in range) must be checked by the caller.
double lagged_pearson_unchecked(const SeriesFrame& cause, const SeriesFrame& effect,
                                int lag) noexcept;

}  // namespace detail

}  // namespace saci
