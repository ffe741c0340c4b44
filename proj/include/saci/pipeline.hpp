#pragma once

#include <filesystem>
#include <vector>

#include "saci/config.hpp"
#include "saci/series.hpp"

namespace saci {

/// Orchestration entry points behind the CLI subcommands. Each reads its
/// inputs, runs the stage and writes the stage's artifacts under config.out.
/// File lists returned are the artifacts written, for logging and tests.

std::vector<std::filesystem::path> run_features(const PipelineConfig& config);
std::vector<std::filesystem::path> run_score(const PipelineConfig& config);
std::vector<std::filesystem::path> run_correlate(const PipelineConfig& config);
std::vector<std::filesystem::path> run_saci(const PipelineConfig& config);
std::vector<std::filesystem::path> run_evaluate(const PipelineConfig& config);
std::vector<std::filesystem::path> run_synth(const PipelineConfig& config);

}  // namespace saci
