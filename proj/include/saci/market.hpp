#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "saci/series.hpp"

namespace saci {

enum class Side { buy, sell };

Side side_from_string(std::string_view s);
std::string_view to_string(Side s);

/// One executed trade; `side` is the taker/aggressor side.
struct Trade {
    int64_t t_ms = 0;      // epoch milliseconds
    double price = 0.0;    // quote currency per base unit, > 0
    double amount = 0.0;   // base currency quantity, > 0
    Side side = Side::buy;
};

/// Resting order book at one instant. Bids are expected price-descending,
/// asks price-ascending; feature extraction does not rely on the ordering.
struct LobSnapshot {
    int64_t t_ms = 0;
    std::vector<std::pair<double, double>> bids;  // (price, volume)
    std::vector<std::pair<double, double>> asks;
};

/// Per-bucket trade aggregate. Per-side means are absent (nullopt) when that
/// side traded nothing in the bucket; sums and counts are plain zeros.
struct OhlcvExtended {
    double open = 0.0;
    double high = 0.0;
    double low = 0.0;
    double close = 0.0;
    std::size_t buy_count = 0;
    std::size_t sell_count = 0;
    double buy_base_volume = 0.0;
    double sell_base_volume = 0.0;
    double buy_quote_volume = 0.0;   // sum of price * amount over buy trades
    double sell_quote_volume = 0.0;
    std::optional<double> buy_avg_price;    // plain mean of buy prices
    std::optional<double> sell_avg_price;
    std::optional<double> buy_vwap_base;    // weighted by base amount
    std::optional<double> sell_vwap_base;
    std::optional<double> buy_vwap_quote;   // weighted by quote volume
    std::optional<double> sell_vwap_quote;
};

/// Book-shape metrics of one snapshot.
struct LobFeatures {
    double min_ask = 0.0;
    double max_bid = 0.0;
    double ask_vwap = 0.0;
    double bid_vwap = 0.0;
    double ask_volume = 0.0;
    double bid_volume = 0.0;
    double spread_best = 0.0;        // min_ask - max_bid
    double spread_vwap = 0.0;        // ask_vwap - bid_vwap
    double price_imbalance = 0.0;    // imbalance(max_bid, min_ask)
    double volume_imbalance = 0.0;   // imbalance(bid_volume, ask_volume)
};

/// Bounded skew (a - b) / (a + b) in [-1,+1]; 0 on the degenerate a + b == 0.
double imbalance(double a, double b);

/// Aggregates trades into one OhlcvExtended per grid bucket. Trades outside
/// the grid span are dropped; buckets without trades are nullopt. Input does
/// not have to be sorted.
std::vector<std::optional<OhlcvExtended>> aggregate_trades(std::span<const Trade> trades,
                                                           const TimeGrid& grid);

/// Book-shape metrics of a single snapshot. Throws Errc::empty_side /
/// Errc::crossed_book on invalid books.
LobFeatures lob_features(const LobSnapshot& snapshot);

/// Frozen market metric identifiers, in emission order.
const std::vector<std::string>& trade_metric_names();
const std::vector<std::string>& lob_metric_names();

/// One raw frame per OhlcvExtended field plus the imbalance metrics
/// (trade_count_imbalance, trade_base_volume_imbalance,
/// trade_quote_volume_imbalance, trade_avg_price_imbalance and
/// trade_quote_volume_imbalance_by_change, the last one denominated by
/// max(|PD(t)|, 1e-9 * median |close|)).
std::vector<SeriesFrame> trade_metric_frames(std::span<const std::optional<OhlcvExtended>> ohlcv,
                                             const TimeGrid& grid,
                                             const std::string& channel);

/// One raw frame per LobFeatures field; the last snapshot in a bucket
/// represents the bucket. Every in-span snapshot is validated.
std::vector<SeriesFrame> lob_feature_frames(std::span<const LobSnapshot> snapshots,
                                            const TimeGrid& grid,
                                            const std::string& channel);

/// PD(t) = close(t) - close(t-1); PD(0) absent, absent closes propagate.
EffectSeries price_difference(const SeriesFrame& close);

}  // namespace saci
