#include "saci/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "saci/transforms.hpp"

namespace saci {

namespace {

// Joined key for n-gram lookup; '\x1f' cannot appear in tokens.
std::string join_tokens(std::span<const std::string> tokens, std::size_t start, std::size_t n) {
    std::string key;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) key.push_back('\x1f');
        key += tokens[start + i];
    }
    return key;
}

}  // namespace

void Lexicon::add(std::vector<std::string> tokens, double weight) {
    if (tokens.empty() || tokens.size() > kMaxNgram) {
        throw Error(Errc::spec_invalid, "lexicon '" + category_ + "': n-grams must have 1.." +
                                            std::to_string(kMaxNgram) + " tokens");
    }
    for (std::string& token : tokens) {
        std::transform(token.begin(), token.end(), token.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    }
    const std::string key = join_tokens(tokens, 0, tokens.size());
    auto& bucket = by_n_[tokens.size()];
    if (!bucket.emplace(key, weight).second) {
        throw Error(Errc::spec_invalid, "lexicon '" + category_ + "': duplicate n-gram");
    }
    ++entry_count_;
    max_n_ = std::max(max_n_, tokens.size());
}

std::optional<double> Lexicon::lookup(std::span<const std::string> tokens, std::size_t start,
                                      std::size_t n) const {
    const auto bucket = by_n_.find(n);
    if (bucket == by_n_.end()) return std::nullopt;
    const auto hit = bucket->second.find(join_tokens(tokens, start, n));
    if (hit == bucket->second.end()) return std::nullopt;
    return hit->second;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (const char raw : text) {
        const unsigned char c = static_cast<unsigned char>(raw);
        const bool word_char = std::isalnum(c) != 0 || c >= 0x80;
        if (word_char) {
            current.push_back(static_cast<char>(std::tolower(c)));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

std::map<std::string, std::vector<NgramMatch>> match_ngrams(std::span<const std::string> tokens,
                                                            std::span<const Lexicon> lexicons) {
    struct Candidate {
        std::size_t start;
        std::size_t length;
        std::size_t lexicon;
        double weight;
    };
    std::vector<Candidate> candidates;
    std::size_t max_n = 0;
    for (const Lexicon& lexicon : lexicons) max_n = std::max(max_n, lexicon.max_n());
    max_n = std::min(max_n, tokens.size());

    for (std::size_t n = max_n; n >= 1; --n) {
        for (std::size_t start = 0; start + n <= tokens.size(); ++start) {
            for (std::size_t li = 0; li < lexicons.size(); ++li) {
                if (auto weight = lexicons[li].lookup(tokens, start, n)) {
                    candidates.push_back({start, n, li, *weight});
                }
            }
        }
        if (n == 1) break;
    }

    // Candidates are already ordered by length descending, then start, then
    // lexicon; accept unless strictly contained in an accepted longer span.
    struct Span {
        std::size_t start;
        std::size_t end;
        std::size_t length;
    };
    std::vector<Span> accepted_spans;
    std::map<std::string, std::vector<NgramMatch>> accepted;
    for (const Candidate& c : candidates) {
        const std::size_t end = c.start + c.length;
        const bool swallowed =
            std::any_of(accepted_spans.begin(), accepted_spans.end(), [&](const Span& s) {
                return s.length > c.length && s.start <= c.start && end <= s.end;
            });
        if (swallowed) continue;
        accepted_spans.push_back({c.start, end, c.length});
        accepted[lexicons[c.lexicon].category()].push_back({c.start, c.length, c.weight});
    }
    return accepted;
}

namespace {

const Lexicon* find_category(std::span<const Lexicon> lexicons, std::string_view category) {
    for (const Lexicon& lexicon : lexicons) {
        if (lexicon.category() == category) return &lexicon;
    }
    return nullptr;
}

}  // namespace

PostScores score_post(const Post& post, std::span<const Lexicon> lexicons, bool log_scaling) {
    if (find_category(lexicons, "positive") == nullptr ||
        find_category(lexicons, "negative") == nullptr) {
        throw Error(Errc::missing_category,
                    "sentiment scoring needs 'positive' and 'negative' lexicons");
    }
    const std::vector<std::string> tokens = tokenize(post.text);
    const auto matches = match_ngrams(tokens, lexicons);

    PostScores scores;
    scores.t = post.t;
    scores.channel = post.channel;
    scores.token_count = tokens.size();

    for (const Lexicon& lexicon : lexicons) scores.raw_mass[lexicon.category()] = 0.0;
    for (const auto& [category, hits] : matches) {
        double mass = 0.0;
        for (const NgramMatch& hit : hits) mass += hit.weight;
        scores.raw_mass[category] = mass;
    }
    if (log_scaling) {
        for (auto& [category, mass] : scores.raw_mass) mass = std::log10(1.0 + mass);
    }

    const double t_norm = static_cast<double>(std::max<std::size_t>(scores.token_count, 1));
    const double cp = scores.raw_mass.at("positive");
    const double cn = scores.raw_mass.at("negative");
    scores.pos = std::min(cp / t_norm, 1.0);
    scores.neg = -std::min(cn / t_norm, 1.0);
    scores.sen = (cp + cn) > 0.0 ? (cp - cn) / (cp + cn) : 0.0;
    scores.con = std::sqrt(scores.pos * std::abs(scores.neg));
    for (const auto& [category, mass] : scores.raw_mass) {
        if (category == "positive" || category == "negative") continue;
        scores.category_share[category] = std::clamp(mass / t_norm, 0.0, 1.0);
    }
    return scores;
}

std::vector<std::string> media_metric_names(std::span<const Lexicon> lexicons) {
    std::vector<std::string> names = {"sen", "pos", "neg", "con"};
    std::set<std::string> extra;
    for (const Lexicon& lexicon : lexicons) {
        if (lexicon.category() != "positive" && lexicon.category() != "negative") {
            extra.insert(lexicon.category());
        }
    }
    names.insert(names.end(), extra.begin(), extra.end());
    names.push_back("word_count");
    names.push_back("post_count");
    return names;
}

std::vector<SeriesFrame> aggregate_channel(std::span<const PostScores> scores,
                                           const TimeGrid& grid,
                                           std::span<const Lexicon> lexicons,
                                           std::optional<std::size_t> train_count) {
    const std::vector<std::string> metrics = media_metric_names(lexicons);

    std::set<std::string> channel_set;
    for (const PostScores& s : scores) channel_set.insert(s.channel);

    std::vector<SeriesFrame> out;
    for (const std::string& channel : channel_set) {
        // metric -> per-bucket sums; mean for score metrics, plain sums for
        // the volume auxiliaries.
        std::vector<std::vector<double>> sums(metrics.size(), std::vector<double>(grid.count, 0.0));
        std::vector<std::size_t> posts_in_bucket(grid.count, 0);

        for (const PostScores& s : scores) {
            if (s.channel != channel) continue;
            const auto idx = grid.index_of(s.t);
            if (!idx) continue;
            ++posts_in_bucket[*idx];
            for (std::size_t m = 0; m < metrics.size(); ++m) {
                const std::string& metric = metrics[m];
                double value = 0.0;
                if (metric == "sen") value = s.sen;
                else if (metric == "pos") value = s.pos;
                else if (metric == "neg") value = s.neg;
                else if (metric == "con") value = s.con;
                else if (metric == "word_count") value = static_cast<double>(s.token_count);
                else if (metric == "post_count") value = 1.0;
                else {
                    const auto it = s.category_share.find(metric);
                    value = it == s.category_share.end() ? 0.0 : it->second;
                }
                sums[m][*idx] += value;
            }
        }

        for (std::size_t m = 0; m < metrics.size(); ++m) {
            SeriesFrame frame = SeriesFrame::make_absent(channel, metrics[m], "", grid);
            const bool is_volume = metrics[m] == "word_count" || metrics[m] == "post_count";
            for (std::size_t t = 0; t < grid.count; ++t) {
                if (posts_in_bucket[t] == 0) continue;
                const double value =
                    is_volume ? sums[m][t] : sums[m][t] / static_cast<double>(posts_in_bucket[t]);
                frame.set(t, value);
            }
            SeriesFrame normalized = max_abs_normalize(frame, train_count);
            normalized.variant = "N";
            out.push_back(std::move(normalized));
        }
    }
    return out;
}

double representability(const SeriesFrame& channel_frame) {
    if (channel_frame.size() == 0) return 0.0;
    return static_cast<double>(channel_frame.present_count()) /
           static_cast<double>(channel_frame.size());
}

}  // namespace saci
