#pragma once

#include <cstddef>
#include <vector>

#include "tempagg/process.hpp"

namespace tempagg {

enum class AggregationScheme { NonOverlapping, Overlapping };

/// A temporally aggregated series of bucket sums, in chronological order.
struct AggregatedSeries {
    std::vector<double> values;
    AggregationScheme scheme;
    int m;
    std::size_t source_length;
};

/// Disjoint buckets of m consecutive observations, anchored at the most
/// recent observation. When m does not divide N the oldest remainder
/// observations are dropped; output length is floor(N/m).
AggregatedSeries aggregate_non_overlapping(const DemandSeries& series, int m);

/// Moving-window sums of m consecutive observations; output length N - m + 1.
AggregatedSeries aggregate_overlapping(const DemandSeries& series, int m);

/// d_t + d_{t+1} + ... + d_{t+m-1} for a zero-based position t.
double cumulative_actual(const DemandSeries& series, std::size_t t, int m);

}  // namespace tempagg
