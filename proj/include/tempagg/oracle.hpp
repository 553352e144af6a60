#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tempagg/forecasting.hpp"
#include "tempagg/process.hpp"

namespace tempagg {

/// The cumulative forecast error D_T - F expressed as a linear combination of
/// raw demands (d_{t-n}, ..., d_{t-1}, d_t, ..., d_{t+m-1}). Weights sum to
/// zero and the m future positions carry +1 each.
struct ErrorWeightVector {
    std::vector<double> weights;  // size n + m
    Approach approach;
    int n;
    int m;
    double smoothing;
};

ErrorWeightVector build_error_weights(Approach approach, int n, int m,
                                      double smoothing);

/// w' Gamma w over the raw autocovariance matrix; the exact MSE of the
/// linearized error.
double exact_mse(const ArmaParams& params, const ErrorWeightVector& weights);

struct MonteCarloEstimate {
    double mean_squared_error;
    double standard_error;
    std::size_t replications;
    std::uint64_t seed;
};

/// Simulation-based MSE estimate going through the transforms/forecasting
/// code path; deterministic per seed (replication r uses seed + r).
MonteCarloEstimate monte_carlo_mse(const ArmaParams& params, int n, int m,
                                   double smoothing, Approach approach,
                                   std::size_t replications, std::uint64_t seed);

}  // namespace tempagg
