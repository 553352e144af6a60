#pragma once

#include <string>
#include <vector>

#include "tempagg/process.hpp"

namespace tempagg {

/// Shape of the autocorrelation function over positive lags.
enum class AcfClass { NegativeAllLags, PositiveAllLags, Oscillating, WhiteNoise };

const char* acf_class_name(AcfClass c);

enum class RecommendedApproach { UseOriginalSeries, UseOverlappingTA, UseEitherTA };

struct Recommendation {
    RecommendedApproach approach;
    std::string rationale;
};

/// Classify from the process parameters: phi = theta collapses to white
/// noise, phi < 0 makes the ACF alternate in sign, otherwise the sign of
/// rho_1 carries through all lags.
AcfClass classify_params(const ArmaParams& params, double tol = 1e-9);

/// Sample autocorrelations at lags 1..max_lag (mean-corrected).
std::vector<double> sample_acf(const DemandSeries& series, int max_lag);

/// Empirical analogue of classify_params using the 1.96/sqrt(N) band.
AcfClass classify_series(const DemandSeries& series, int max_lag);

/// Aggregate-or-not rule keyed on the ACF class.
Recommendation recommend(AcfClass acf_class);

}  // namespace tempagg
