#pragma once

#include <span>

#include "tempagg/process.hpp"
#include "tempagg/transforms.hpp"

namespace tempagg {

enum class Approach { NA, NOA, OA };

const char* approach_name(Approach a);

/// SES configuration; initialization is pinned to the first observation.
struct SesConfig {
    double alpha;

    explicit SesConfig(double alpha);
};

struct CumulativeForecast {
    double value;
    Approach approach;
    int m;
};

/// One-step-ahead SES forecast over a finite history, forward recursion
/// f <- alpha * d + (1 - alpha) * f started from the oldest observation.
double ses_one_step(std::span<const double> series, const SesConfig& config);

/// m-period cumulative forecast from the raw series: m * ses_one_step.
CumulativeForecast cumulative_forecast_na(const DemandSeries& series, int m,
                                          const SesConfig& config);

/// SES applied to the non-overlapping aggregated series.
CumulativeForecast cumulative_forecast_noa(const DemandSeries& series, int m,
                                           const SesConfig& config);

/// SES applied to the overlapping aggregated series.
CumulativeForecast cumulative_forecast_oa(const DemandSeries& series, int m,
                                          const SesConfig& config);

}  // namespace tempagg
