#include "tempagg/forecasting.hpp"

#include <stdexcept>
#include <string>

namespace tempagg {

const char* approach_name(Approach a) {
    switch (a) {
        case Approach::NA: return "na";
        case Approach::NOA: return "noa";
        case Approach::OA: return "oa";
    }
    return "?";
}

SesConfig::SesConfig(double alpha) : alpha(alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("SesConfig: alpha must be in (0, 1], got " +
                                    std::to_string(alpha));
    }
}

double ses_one_step(std::span<const double> series, const SesConfig& config) {
    if (series.empty()) {
        throw std::invalid_argument("ses_one_step: series must be non-empty");
    }
    double f = series.front();
    for (std::size_t i = 1; i < series.size(); ++i) {
        f = config.alpha * series[i] + (1.0 - config.alpha) * f;
    }
    return f;
}

CumulativeForecast cumulative_forecast_na(const DemandSeries& series, int m,
                                          const SesConfig& config) {
    if (m < 1) throw std::invalid_argument("cumulative_forecast_na: m must be >= 1");
    return {m * ses_one_step(series.values, config), Approach::NA, m};
}

CumulativeForecast cumulative_forecast_noa(const DemandSeries& series, int m,
                                           const SesConfig& config) {
    const auto buckets = aggregate_non_overlapping(series, m);
    return {ses_one_step(buckets.values, config), Approach::NOA, m};
}

CumulativeForecast cumulative_forecast_oa(const DemandSeries& series, int m,
                                          const SesConfig& config) {
    const auto buckets = aggregate_overlapping(series, m);
    return {ses_one_step(buckets.values, config), Approach::OA, m};
}

}  // namespace tempagg
