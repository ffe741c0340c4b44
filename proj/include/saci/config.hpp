#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "saci/causal.hpp"
#include "saci/series.hpp"
#include "saci/synth.hpp"

namespace saci {

/// Pipeline settings shared by every subcommand. Loaded from a line-oriented
/// `key = value` file, then overridden key-by-key from the command line.
/// Keys are documented in docs/config.md.
struct PipelineConfig {
    Granularity granularity = Granularity::day;
    std::optional<int64_t> start;  // epoch seconds; inferred from inputs when absent
    std::optional<int64_t> end;

    // inputs
    std::optional<std::filesystem::path> trades;
    std::optional<std::filesystem::path> lob;
    std::optional<std::filesystem::path> posts;
    std::optional<std::filesystem::path> lexicons;
    std::vector<std::filesystem::path> frames;  // candidate frame CSVs
    std::optional<std::filesystem::path> effect;
    std::optional<std::filesystem::path> weights;  // channel weight table
    std::optional<std::filesystem::path> prices;
    std::optional<std::filesystem::path> model;

    std::string market_channel = "market";
    std::string effect_metric = "pd";
    std::string price_metric = "trade_close";

    int lag_min = -10;
    int lag_max = 10;
    std::optional<int> lag;  // assembly lag; picked from the sweep when absent

    double train_fraction = 0.75;
    AssemblyPolicy policy;
    bool use_weights = true;
    bool log_scaling = true;
    int horizon = 1;

    std::filesystem::path out = "out";

    // synth
    PlantedSpec planted;

    /// Number of leading buckets in the training slice of an n-bucket grid.
    std::size_t train_count(std::size_t n) const;
};

/// Parses one `key = value` assignment into the config. Unknown keys and
/// malformed values throw Errc::config_error (with file:line when reading
/// from a file).
void apply_config_entry(PipelineConfig& config, const std::string& key, const std::string& value);

PipelineConfig load_config_file(const std::filesystem::path& path);

}  // namespace saci
