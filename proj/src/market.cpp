#include "saci/market.hpp"

#include <algorithm>
#include <cmath>

#include "saci/errors.hpp"

namespace saci {

Side side_from_string(std::string_view s) {
    if (s == "buy") return Side::buy;
    if (s == "sell") return Side::sell;
    throw Error(Errc::parse_error, "unknown trade side '" + std::string(s) + "'");
}

std::string_view to_string(Side s) { return s == Side::buy ? "buy" : "sell"; }

double imbalance(double a, double b) {
    const double total = a + b;
    if (total == 0.0) return 0.0;
    return (a - b) / total;
}

namespace {

std::optional<std::size_t> bucket_of_ms(const TimeGrid& grid, int64_t t_ms) {
    // Millisecond stamps bucket by their integer second; sub-second trades on
    // a second grid land in the floor second.
    int64_t t_s = t_ms / 1000;
    if (t_ms < 0 && t_ms % 1000 != 0) --t_s;
    return grid.index_of(t_s);
}

struct SideAccum {
    std::size_t count = 0;
    double base_volume = 0.0;
    double quote_volume = 0.0;
    double price_sum = 0.0;
    double price_by_base = 0.0;   // sum price * amount
    double price_by_quote = 0.0;  // sum price * (price * amount)

    void add(const Trade& trade) {
        const double quote = trade.price * trade.amount;
        ++count;
        base_volume += trade.amount;
        quote_volume += quote;
        price_sum += trade.price;
        price_by_base += trade.price * trade.amount;
        price_by_quote += trade.price * quote;
    }
};

}  // namespace

std::vector<std::optional<OhlcvExtended>> aggregate_trades(std::span<const Trade> trades,
                                                           const TimeGrid& grid) {
    // Bin first, then aggregate buckets independently (parallelizable since
    // buckets never share a trade).
    std::vector<std::vector<const Trade*>> buckets(grid.count);
    std::vector<Trade> sorted;
    std::span<const Trade> ordered = trades;
    if (!std::is_sorted(trades.begin(), trades.end(),
                        [](const Trade& a, const Trade& b) { return a.t_ms < b.t_ms; })) {
        sorted.assign(trades.begin(), trades.end());
        std::stable_sort(sorted.begin(), sorted.end(),
                         [](const Trade& a, const Trade& b) { return a.t_ms < b.t_ms; });
        ordered = sorted;
    }
    for (const Trade& trade : ordered) {
        if (auto idx = bucket_of_ms(grid, trade.t_ms)) buckets[*idx].push_back(&trade);
    }

    std::vector<std::optional<OhlcvExtended>> out(grid.count);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(grid.count); ++i) {
        const auto& bucket = buckets[static_cast<std::size_t>(i)];
        if (bucket.empty()) continue;

        OhlcvExtended bar;
        bar.open = bucket.front()->price;
        bar.close = bucket.back()->price;
        bar.high = bar.open;
        bar.low = bar.open;
        SideAccum buy;
        SideAccum sell;
        for (const Trade* trade : bucket) {
            bar.high = std::max(bar.high, trade->price);
            bar.low = std::min(bar.low, trade->price);
            (trade->side == Side::buy ? buy : sell).add(*trade);
        }
        bar.buy_count = buy.count;
        bar.sell_count = sell.count;
        bar.buy_base_volume = buy.base_volume;
        bar.sell_base_volume = sell.base_volume;
        bar.buy_quote_volume = buy.quote_volume;
        bar.sell_quote_volume = sell.quote_volume;
        if (buy.count > 0) {
            bar.buy_avg_price = buy.price_sum / static_cast<double>(buy.count);
            bar.buy_vwap_base = buy.price_by_base / buy.base_volume;
            bar.buy_vwap_quote = buy.price_by_quote / buy.quote_volume;
        }
        if (sell.count > 0) {
            bar.sell_avg_price = sell.price_sum / static_cast<double>(sell.count);
            bar.sell_vwap_base = sell.price_by_base / sell.base_volume;
            bar.sell_vwap_quote = sell.price_by_quote / sell.quote_volume;
        }
        out[static_cast<std::size_t>(i)] = bar;
    }
    return out;
}

LobFeatures lob_features(const LobSnapshot& snapshot) {
    if (snapshot.bids.empty() || snapshot.asks.empty()) {
        throw Error(Errc::empty_side, "book at t=" + std::to_string(snapshot.t_ms) +
                                          " has an empty side");
    }
    LobFeatures f;
    double bid_pv = 0.0;
    double ask_pv = 0.0;
    f.max_bid = snapshot.bids.front().first;
    f.min_ask = snapshot.asks.front().first;
    for (const auto& [price, volume] : snapshot.bids) {
        f.max_bid = std::max(f.max_bid, price);
        f.bid_volume += volume;
        bid_pv += price * volume;
    }
    for (const auto& [price, volume] : snapshot.asks) {
        f.min_ask = std::min(f.min_ask, price);
        f.ask_volume += volume;
        ask_pv += price * volume;
    }
    if (f.max_bid >= f.min_ask) {
        throw Error(Errc::crossed_book, "book at t=" + std::to_string(snapshot.t_ms) +
                                            " is crossed (best bid " + std::to_string(f.max_bid) +
                                            " >= best ask " + std::to_string(f.min_ask) + ")");
    }
    f.bid_vwap = bid_pv / f.bid_volume;
    f.ask_vwap = ask_pv / f.ask_volume;
    f.spread_best = f.min_ask - f.max_bid;
    f.spread_vwap = f.ask_vwap - f.bid_vwap;
    f.price_imbalance = imbalance(f.max_bid, f.min_ask);
    f.volume_imbalance = imbalance(f.bid_volume, f.ask_volume);
    return f;
}

const std::vector<std::string>& trade_metric_names() {
    static const std::vector<std::string> names = {
        "trade_open",
        "trade_high",
        "trade_low",
        "trade_close",
        "trade_buy_count",
        "trade_sell_count",
        "trade_buy_base_volume",
        "trade_sell_base_volume",
        "trade_buy_quote_volume",
        "trade_sell_quote_volume",
        "trade_buy_avg_price",
        "trade_sell_avg_price",
        "trade_buy_vwap_base",
        "trade_sell_vwap_base",
        "trade_buy_vwap_quote",
        "trade_sell_vwap_quote",
        "trade_count_imbalance",
        "trade_base_volume_imbalance",
        "trade_quote_volume_imbalance",
        "trade_avg_price_imbalance",
        "trade_quote_volume_imbalance_by_change",
    };
    return names;
}

const std::vector<std::string>& lob_metric_names() {
    static const std::vector<std::string> names = {
        "lob_min_ask",
        "lob_max_bid",
        "lob_ask_vwap",
        "lob_bid_vwap",
        "lob_ask_volume",
        "lob_bid_volume",
        "lob_spread_best",
        "lob_spread_vwap",
        "lob_price_imbalance",
        "lob_volume_imbalance",
    };
    return names;
}

std::vector<SeriesFrame> trade_metric_frames(std::span<const std::optional<OhlcvExtended>> ohlcv,
                                             const TimeGrid& grid, const std::string& channel) {
    if (ohlcv.size() != grid.count) {
        throw Error(Errc::size_mismatch, "ohlcv sequence does not match the grid");
    }
    std::vector<SeriesFrame> frames;
    frames.reserve(trade_metric_names().size());
    for (const std::string& name : trade_metric_names()) {
        frames.push_back(SeriesFrame::make_absent(channel, name, "", grid));
    }

    auto frame = [&](std::size_t metric_index) -> SeriesFrame& { return frames[metric_index]; };

    for (std::size_t t = 0; t < grid.count; ++t) {
        if (!ohlcv[t].has_value()) continue;
        const OhlcvExtended& bar = *ohlcv[t];
        frame(0).set(t, bar.open);
        frame(1).set(t, bar.high);
        frame(2).set(t, bar.low);
        frame(3).set(t, bar.close);
        frame(4).set(t, static_cast<double>(bar.buy_count));
        frame(5).set(t, static_cast<double>(bar.sell_count));
        frame(6).set(t, bar.buy_base_volume);
        frame(7).set(t, bar.sell_base_volume);
        frame(8).set(t, bar.buy_quote_volume);
        frame(9).set(t, bar.sell_quote_volume);
        if (bar.buy_avg_price) frame(10).set(t, *bar.buy_avg_price);
        if (bar.sell_avg_price) frame(11).set(t, *bar.sell_avg_price);
        if (bar.buy_vwap_base) frame(12).set(t, *bar.buy_vwap_base);
        if (bar.sell_vwap_base) frame(13).set(t, *bar.sell_vwap_base);
        if (bar.buy_vwap_quote) frame(14).set(t, *bar.buy_vwap_quote);
        if (bar.sell_vwap_quote) frame(15).set(t, *bar.sell_vwap_quote);
        frame(16).set(t, imbalance(static_cast<double>(bar.buy_count),
                                   static_cast<double>(bar.sell_count)));
        frame(17).set(t, imbalance(bar.buy_base_volume, bar.sell_base_volume));
        frame(18).set(t, imbalance(bar.buy_quote_volume, bar.sell_quote_volume));
        if (bar.buy_avg_price && bar.sell_avg_price) {
            frame(19).set(t, imbalance(*bar.buy_avg_price, *bar.sell_avg_price));
        }
    }

    // quote_volume_imbalance denominated by the price change magnitude, with a
    // relative floor so flat buckets cannot blow the ratio up.
    const SeriesFrame& close = frame(3);
    const EffectSeries pd = price_difference(close);
    std::vector<double> abs_closes;
    for (std::size_t t = 0; t < grid.count; ++t) {
        if (close.is_present(t)) abs_closes.push_back(std::abs(close.values[t]));
    }
    if (!abs_closes.empty()) {
        std::sort(abs_closes.begin(), abs_closes.end());
        const std::size_t mid = abs_closes.size() / 2;
        const double median = abs_closes.size() % 2 == 1
                                  ? abs_closes[mid]
                                  : 0.5 * (abs_closes[mid - 1] + abs_closes[mid]);
        const double eps = 1e-9 * median;
        const SeriesFrame& qvi = frame(18);
        SeriesFrame& by_change = frame(20);
        for (std::size_t t = 0; t < grid.count; ++t) {
            if (!qvi.is_present(t) || !pd.frame.is_present(t)) continue;
            const double denom = std::max(std::abs(pd.frame.values[t]), eps);
            if (denom == 0.0) continue;  // every close is exactly 0: leave absent
            by_change.set(t, qvi.values[t] / denom);
        }
    }
    return frames;
}

std::vector<SeriesFrame> lob_feature_frames(std::span<const LobSnapshot> snapshots,
                                            const TimeGrid& grid, const std::string& channel) {
    std::vector<SeriesFrame> frames;
    frames.reserve(lob_metric_names().size());
    for (const std::string& name : lob_metric_names()) {
        frames.push_back(SeriesFrame::make_absent(channel, name, "", grid));
    }

    // Last snapshot in a bucket represents the bucket (closing semantics);
    // every in-span snapshot is still validated.
    std::vector<const LobSnapshot*> representative(grid.count, nullptr);
    std::vector<const LobSnapshot*> in_span;
    for (const LobSnapshot& snapshot : snapshots) {
        int64_t t_s = snapshot.t_ms / 1000;
        if (snapshot.t_ms < 0 && snapshot.t_ms % 1000 != 0) --t_s;
        const auto idx = grid.index_of(t_s);
        if (!idx) continue;
        in_span.push_back(&snapshot);
        const LobSnapshot*& slot = representative[*idx];
        if (slot == nullptr || snapshot.t_ms >= slot->t_ms) slot = &snapshot;
    }
    for (const LobSnapshot* snapshot : in_span) {
        lob_features(*snapshot);  // validation only; throws on bad books
    }

    for (std::size_t t = 0; t < grid.count; ++t) {
        if (representative[t] == nullptr) continue;
        const LobFeatures f = lob_features(*representative[t]);
        frames[0].set(t, f.min_ask);
        frames[1].set(t, f.max_bid);
        frames[2].set(t, f.ask_vwap);
        frames[3].set(t, f.bid_vwap);
        frames[4].set(t, f.ask_volume);
        frames[5].set(t, f.bid_volume);
        frames[6].set(t, f.spread_best);
        frames[7].set(t, f.spread_vwap);
        frames[8].set(t, f.price_imbalance);
        frames[9].set(t, f.volume_imbalance);
    }
    return frames;
}

EffectSeries price_difference(const SeriesFrame& close) {
    SeriesFrame pd = SeriesFrame::make_absent(close.channel, "pd", "", close.grid);
    for (std::size_t t = 1; t < close.size(); ++t) {
        if (close.is_present(t) && close.is_present(t - 1)) {
            pd.set(t, close.values[t] - close.values[t - 1]);
        }
    }
    return EffectSeries{std::move(pd)};
}

}  // namespace saci
