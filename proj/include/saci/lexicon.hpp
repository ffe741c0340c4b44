#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "saci/series.hpp"

namespace saci {

struct Post {
    int64_t t = 0;  // epoch seconds
    std::string channel;
    std::string text;
};

/// One scoring category: a set of n-grams (1..8 lowercase tokens) with
/// per-entry weights, default 1.0.
class Lexicon {
public:
    static constexpr std::size_t kMaxNgram = 8;

    explicit Lexicon(std::string category) : category_(std::move(category)) {}

    const std::string& category() const { return category_; }
    std::size_t size() const { return entry_count_; }
    std::size_t max_n() const { return max_n_; }

    /// Throws Errc::spec_invalid on empty entries, n > 8 or duplicates.
    void add(std::vector<std::string> tokens, double weight = 1.0);

    /// Weight of the exact n-gram spanning tokens[start, start+n), if present.
    std::optional<double> lookup(std::span<const std::string> tokens, std::size_t start,
                                 std::size_t n) const;

private:
    std::string category_;
    std::size_t entry_count_ = 0;
    std::size_t max_n_ = 0;
    // n -> joined tokens -> weight
    std::unordered_map<std::size_t, std::unordered_map<std::string, double>> by_n_;
};

/// Lowercases and splits on whitespace/punctuation boundaries; punctuation is
/// dropped. ASCII alphanumerics and non-ASCII bytes count as word characters.
std::vector<std::string> tokenize(std::string_view text);

struct NgramMatch {
    std::size_t start = 0;
    std::size_t length = 0;
    double weight = 1.0;
};

/// Accepted n-gram occurrences per category under the order-priority rule:
/// longer matches are accepted first and any shorter match whose token span
/// is strictly contained in an accepted longer match is disregarded.
/// Overlapping matches of equal length are all kept.
std::map<std::string, std::vector<NgramMatch>> match_ngrams(std::span<const std::string> tokens,
                                                            std::span<const Lexicon> lexicons);

/// Post-level scores. sen/pos/neg/con need the `positive` and `negative`
/// base categories; every other category yields a share in [0,1].
struct PostScores {
    int64_t t = 0;
    std::string channel;
    double sen = 0.0;  // (CP - CN) / (CP + CN), 0 when both masses are 0
    double pos = 0.0;  // min(CP / T, 1)
    double neg = 0.0;  // -min(CN / T, 1)
    double con = 0.0;  // sqrt(pos * |neg|)
    std::size_t token_count = 0;
    std::map<std::string, double> raw_mass;        // per category, after optional log scaling
    std::map<std::string, double> category_share;  // non-base categories: clip(mass / T, 0, 1)
};

/// Scores one post. With `log_scaling` every category mass is rescaled as
/// log10(1 + mass) before normalization by the token count. Throws
/// Errc::missing_category when the base sentiment lexicons are absent.
PostScores score_post(const Post& post, std::span<const Lexicon> lexicons, bool log_scaling);

/// Media metric names emitted per channel: the four sentiment metrics, one
/// share metric per extra category, and the bucket volume auxiliaries.
std::vector<std::string> media_metric_names(std::span<const Lexicon> lexicons);

/// Per-channel per-metric frames on the grid: arithmetic mean of post-level
/// values per bucket (word_count sums tokens, post_count counts posts),
/// empty buckets absent, each frame max-abs normalized (variant "N").
std::vector<SeriesFrame> aggregate_channel(std::span<const PostScores> scores,
                                           const TimeGrid& grid,
                                           std::span<const Lexicon> lexicons,
                                           std::optional<std::size_t> train_count = std::nullopt);

/// W(c) = fraction of buckets with at least one post, read off the frame's
/// presence mask. All frames of one channel share that mask.
double representability(const SeriesFrame& channel_frame);

}  // namespace saci
