#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "saci/series.hpp"

namespace saci {

/// Transform suffixes, applied left-to-right: D = first difference,
/// L = signed decimal logarithm, N = max-abs normalization to [-1,+1].
/// Every candidate variant ends in N; raw frames carry the empty suffix.
inline constexpr std::array<std::string_view, 4> kVariantSuffixes = {"N", "LN", "DN", "DLN"};

bool is_valid_variant(std::string_view suffix);

/// y(t) = x(t) - x(t-1). y(0) is absent; an absent x(t) makes both y(t) and
/// y(t+1) absent. Throws Errc::too_short for frames shorter than 2.
SeriesFrame differentiate(const SeriesFrame& x);

/// y = sign(x) * log10(1 + |x|), elementwise; odd, order-preserving, total.
SeriesFrame signed_log(const SeriesFrame& x);

/// y = x / M with M = max over present entries of |x|. When M == 0 the frame
/// is returned unchanged (all zeros).
///
/// With `train_count` set, M is computed over present entries in
/// [0, train_count) only and reused beyond it; out-of-sample values that then
/// fall outside [-1,+1] are clamped and a warning is logged.
SeriesFrame max_abs_normalize(const SeriesFrame& x,
                              std::optional<std::size_t> train_count = std::nullopt);

/// The four candidate variants of a raw metric frame:
///   N = norm(x), LN = norm(log(x)), DN = norm(diff(x)), DLN = norm(log(diff(x))).
/// `train_count` is forwarded to every normalization.
std::array<SeriesFrame, 4> expand_variants(const SeriesFrame& x,
                                           std::optional<std::size_t> train_count = std::nullopt);

}  // namespace saci
