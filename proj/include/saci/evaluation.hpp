#pragma once

#include <span>
#include <string>
#include <vector>

#include "saci/causal.hpp"
#include "saci/series.hpp"

namespace saci {

/// Predicted price per bucket, aligned to the price grid.
struct PredictionSeries {
    int horizon = 1;  // buckets ahead the prediction claims to look
    SeriesFrame frame;
};

/// pred(t) = price(t - horizon): the last-known-price baseline.
PredictionSeries predict_lkp(const SeriesFrame& prices, int horizon = 1);

/// pred(t) = price(t): the oracle that copies the truth; exists only to
/// bound achievable scores.
PredictionSeries predict_fkp(const SeriesFrame& prices, int horizon = 1);

/// Mean of |pred - actual| / |actual| over buckets where both are present.
/// Throws Errc::empty_overlap / Errc::zero_actual.
double mape(const PredictionSeries& pred, const SeriesFrame& actual);

/// Fraction of evaluated buckets where sign(pred(t) - actual(t-1)) equals
/// sign(actual(t) - actual(t-1)); a zero sign matches only a zero sign.
/// Evaluates every t with pred(t), actual(t) and actual(t-1) present.
double directional_accuracy(const PredictionSeries& pred, const SeriesFrame& actual);

/// Direction-only forecast from the indicator: for lag l >= 1,
/// pred(t + l) = price(t + l - 1) + sign(Y(t)) * |median nonzero PD on the
/// model's training span|. Magnitude is deliberately crude; only the
/// direction is claimed.
PredictionSeries saci_direction_predictor(const SaciModel& model,
                                          std::span<const SeriesFrame> frames,
                                          const SeriesFrame& prices);

struct EvalRow {
    std::string predictor;
    int horizon = 1;
    std::size_t n = 0;  // overlap size used for MAPE
    double mape = 0.0;
    double da = 0.0;
};

/// Scores one prediction against actual prices.
EvalRow evaluate_prediction(const std::string& name, const PredictionSeries& pred,
                            const SeriesFrame& actual);

}  // namespace saci
