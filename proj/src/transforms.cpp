#include "tempagg/transforms.hpp"

#include <numeric>
#include <stdexcept>

namespace tempagg {

namespace {
void require_window(const DemandSeries& series, int m, const char* op) {
    if (m < 1) throw std::invalid_argument(std::string(op) + ": m must be >= 1");
    if (series.size() < static_cast<std::size_t>(m)) {
        throw std::invalid_argument(std::string(op) +
                                    ": insufficient history for one bucket");
    }
}
}  // namespace

AggregatedSeries aggregate_non_overlapping(const DemandSeries& series, int m) {
    require_window(series, m, "aggregate_non_overlapping");
    const std::size_t n = series.size();
    const std::size_t buckets = n / m;
    const std::size_t start = n - buckets * m;  // oldest remainder dropped

    AggregatedSeries out{{}, AggregationScheme::NonOverlapping, m, n};
    out.values.reserve(buckets);
    for (std::size_t b = 0; b < buckets; ++b) {
        const auto first = series.values.begin() + start + b * m;
        out.values.push_back(std::accumulate(first, first + m, 0.0));
    }
    return out;
}

AggregatedSeries aggregate_overlapping(const DemandSeries& series, int m) {
    require_window(series, m, "aggregate_overlapping");
    const std::size_t n = series.size();

    AggregatedSeries out{{}, AggregationScheme::Overlapping, m, n};
    out.values.reserve(n - m + 1);
    double window = std::accumulate(series.values.begin(),
                                    series.values.begin() + m, 0.0);
    out.values.push_back(window);
    for (std::size_t j = m; j < n; ++j) {
        window += series.values[j] - series.values[j - m];
        out.values.push_back(window);
    }
    return out;
}

double cumulative_actual(const DemandSeries& series, std::size_t t, int m) {
    if (m < 1) throw std::invalid_argument("cumulative_actual: m must be >= 1");
    if (t + m > series.size()) {
        throw std::out_of_range("cumulative_actual: window exceeds series length");
    }
    return std::accumulate(series.values.begin() + t,
                           series.values.begin() + t + m, 0.0);
}

}  // namespace tempagg
