#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "saci/causal.hpp"
#include "saci/evaluation.hpp"
#include "saci/lexicon.hpp"
#include "saci/market.hpp"
#include "saci/series.hpp"

namespace saci::io {

// Frame interchange CSV: t,channel,metric,variant,value,present — one row per
// grid bucket per frame, t in UTC epoch seconds, present in {0,1}. Values are
// written with enough digits to round-trip exactly.
void write_frames_csv(const std::filesystem::path& path, std::span<const SeriesFrame> frames);
std::vector<SeriesFrame> read_frames_csv(const std::filesystem::path& path, const TimeGrid& grid);

/// Timestamp span [min_t, max_t + period) of a frames CSV, or nullopt for a
/// header-only file.
std::optional<std::pair<int64_t, int64_t>> frames_csv_span(const std::filesystem::path& path,
                                                           Granularity g);

// trades CSV: t_ms,price,amount,side
std::vector<Trade> read_trades_csv(const std::filesystem::path& path);
void write_trades_csv(const std::filesystem::path& path, std::span<const Trade> trades);

// LOB JSON Lines: {"t": <ms>, "bids": [[p,v],...], "asks": [[p,v],...]},
// bids price-descending, asks price-ascending.
std::vector<LobSnapshot> read_lob_jsonl(const std::filesystem::path& path);
void write_lob_jsonl(const std::filesystem::path& path, std::span<const LobSnapshot> snapshots);

// posts JSON Lines: {"t": <s>, "channel": "...", "text": "..."}
std::vector<Post> read_posts_jsonl(const std::filesystem::path& path);
void write_posts_jsonl(const std::filesystem::path& path, std::span<const Post> posts);

// Lexicon file: one entry per line, tokens space-separated, optional trailing
// <TAB>weight; the file name minus extension is the category.
Lexicon read_lexicon_file(const std::filesystem::path& path);
std::vector<Lexicon> read_lexicon_dir(const std::filesystem::path& dir);

// Correlation report CSV: lag,channel,metric,variant,pearson,zero_variance.
// Rows are frame-major in sweep order, lags ascending.
void write_correlation_csv(const std::filesystem::path& path, const CorrelationMatrix& matrix);
struct CorrelationRow {
    int lag = 0;
    FrameKey key;
    double pearson = 0.0;
    bool zero_variance = false;
};
std::vector<CorrelationRow> read_correlation_csv(const std::filesystem::path& path);

// Channel weight table: channel,weight
void write_channel_weights_csv(const std::filesystem::path& path, const ChannelWeights& weights);
ChannelWeights read_channel_weights_csv(const std::filesystem::path& path);

// Ranked term listing: channel,metric,variant,weight (weight descending)
void write_saci_terms_csv(const std::filesystem::path& path, const SaciModel& model);

// Indicator sweep: lag,correlation
void write_saci_sweep_csv(const std::filesystem::path& path,
                          std::span<const std::pair<int, double>> sweep);
std::vector<std::pair<int, double>> read_saci_sweep_csv(const std::filesystem::path& path);

// Evaluation report CSV: predictor,horizon,n,mape,da
void write_eval_csv(const std::filesystem::path& path, std::span<const EvalRow> rows);
std::vector<EvalRow> read_eval_csv(const std::filesystem::path& path);

// SACI model file (JSON); round-trips losslessly through apply_saci.
void write_saci_model(const std::filesystem::path& path, const SaciModel& model);
SaciModel read_saci_model(const std::filesystem::path& path);

/// Lossless double formatting used by every CSV writer.
std::string format_double(double v);

}  // namespace saci::io
