#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tempagg/process.hpp"

namespace tempagg {

/// Named series keyed by identifier; map keeps evaluation order stable.
using SeriesDataset = std::map<std::string, DemandSeries>;

/// Long-format CSV: header `series_id,period,value`, 1-based integer period.
SeriesDataset load_series(const std::string& path);

void save_series(const SeriesDataset& dataset, const std::string& path);

/// Drop series shorter than min_len; truncate longer than max_len to their
/// most recent max_len observations.
SeriesDataset screen_series(const SeriesDataset& dataset, std::size_t min_len = 320,
                            std::size_t max_len = 500);

struct AcfLagSummary {
    int lag;
    double q1;
    double median;
    double q3;
    std::vector<double> values;  // one per usable series, identifier order
};

struct AcfProfile {
    std::vector<AcfLagSummary> lags;
    std::vector<std::string> skipped;  // too short or zero variance
};

AcfProfile acf_profile(const SeriesDataset& dataset, int max_lag = 12);

/// Smoothing-constant policy for rolling-origin runs: either one fixed value
/// or a per-window in-sample fit over {0.05, 0.10, ..., 1.00}.
struct SmoothingPolicy {
    std::optional<double> fixed;  // nullopt => fit in-sample

    static SmoothingPolicy fit_insample() { return {}; }
    static SmoothingPolicy fixed_value(double v) { return {v}; }
};

struct RollingOriginRow {
    int m;
    int n;
    double avg_mse_na;
    double avg_mse_noa;
    double avg_mse_oa;
    double ratio_noa_na;
    double ratio_oa_na;
    std::size_t origins_evaluated;
    std::size_t series_count;
    std::size_t degenerate_series;  // zero-MSE windows, ratio pinned to 1
};

struct RollingOriginReport {
    std::vector<RollingOriginRow> rows;
    std::vector<std::string> skipped;  // series too short for one origin
};

/// Slide an n-observation window one period at a time over each series,
/// forecast the next m periods with all three approaches, and average the
/// squared errors across origins, then across series.
RollingOriginRow rolling_origin_eval(const SeriesDataset& dataset, int n, int m,
                                     const SmoothingPolicy& policy,
                                     std::vector<std::string>* skipped = nullptr);

void export_rolling_report(const RollingOriginReport& report,
                           const std::string& path);

/// Synthetic stand-in for an external monthly dataset: `count` simulated
/// ARMA(1,1) series with documented seeds (seed + series index).
SeriesDataset generate_dataset(const ArmaParams& params, std::size_t count,
                               std::size_t length, std::uint64_t seed);

}  // namespace tempagg
