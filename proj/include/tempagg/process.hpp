#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tempagg {

/// Parameters of a stationary ARMA(1,1) demand process
///   d_t = c + phi * d_{t-1} + e_t - theta * e_{t-1},  e_t ~ N(0, sigma2).
/// Stationarity and invertibility are enforced strictly at construction.
struct ArmaParams {
    double c;
    double phi;
    double theta;
    double sigma2;

    ArmaParams(double c, double phi, double theta, double sigma2);

    /// Process mean c / (1 - phi).
    double mean() const { return c / (1.0 - phi); }
};

/// A finite, chronologically ordered demand history.
struct DemandSeries {
    std::vector<double> values;
    long origin_index = 0;

    std::size_t size() const { return values.size(); }
};

/// 1 + phi + ... + phi^{m-1}, computed as an explicit partial sum so that
/// phi = 0 and phi near 1 are both exact.
double geometric_sum(double phi, int m);

/// Autocovariance gamma_k of the raw process, exact for any lag k >= 0.
double autocovariance(const ArmaParams& params, int lag);

/// Autocorrelation rho_k = gamma_k / gamma_0 for lag >= 1.
double autocorrelation(const ArmaParams& params, int lag);

/// Variance of a sum of m consecutive observations (the aggregate bucket
/// variance, identical for the non-overlapping and overlapping schemes).
double noa_variance(const ArmaParams& params, int m);

/// Autocovariance at bucket lag k >= 1 of the non-overlapping aggregated
/// series: phi^{m(k-1)} * gamma_1 * S_m^2 with S_m the geometric sum.
double noa_autocovariance(const ArmaParams& params, int m, int lag);

/// Autocovariance at lag k >= 0 of the overlapping (moving-window) aggregated
/// series: sum over the m x m pairwise raw autocovariances.
double oa_autocovariance(const ArmaParams& params, int m, int lag);

/// cov(D_T, d_{t-k}) for k >= 1, where D_T is the sum of the next m demands:
/// phi^{k-1} * gamma_1 * S_m.
double aggregate_demand_cross_cov(const ArmaParams& params, int m, int lag);

/// Draw a stationary-regime sample path. Deterministic for a given seed; the
/// recursion starts at the process mean and the first `burn_in` observations
/// are discarded.
DemandSeries simulate(const ArmaParams& params, std::size_t length,
                      std::uint64_t seed, std::size_t burn_in = 500);

}  // namespace tempagg
