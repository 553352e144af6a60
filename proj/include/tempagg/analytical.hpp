#pragma once

#include "tempagg/forecasting.hpp"
#include "tempagg/process.hpp"

namespace tempagg {

/// A fully specified analytical MSE evaluation.
struct MseQuery {
    ArmaParams params;
    int n;             // raw history length
    int m;             // aggregation level == forecast horizon
    double smoothing;  // alpha / beta_N / beta_o depending on approach
    Approach approach;

    MseQuery(ArmaParams params, int n, int m, double smoothing, Approach approach);
};

/// MSE with its variance/covariance decomposition:
/// mse = var_demand + var_forecast - 2 * cov_demand_forecast.
struct MseResult {
    double mse;
    double var_demand;
    double var_forecast;
    double cov_demand_forecast;
};

// Building blocks. The forecast is always a finite SES with first-observation
// initialization, so its variance and its covariance with the next aggregate
// bucket have closed forms in the process autocovariances.

double var_forecast_na(const ArmaParams& params, int n, double alpha);
double cov_demand_forecast_na(const ArmaParams& params, int n, int m, double alpha);
double var_forecast_noa(const ArmaParams& params, int n, int m, double beta);
double cov_noa(const ArmaParams& params, int n, int m, double beta);
double var_forecast_oa(const ArmaParams& params, int n, int m, double beta);
double cov_oa(const ArmaParams& params, int n, int m, double beta);

MseResult mse_na(const MseQuery& query);
MseResult mse_noa(const MseQuery& query);
MseResult mse_oa(const MseQuery& query);

/// Dispatch on query.approach.
MseResult mse(const MseQuery& query);

// Single-expression transcriptions kept as cross-checks of the composed path.
// The NA and NOA forms agree with the composition; the OA form drops several
// finite-history terms and is expected to deviate for small N (see tests).
double mse_na_flattened(const ArmaParams& params, int n, int m, double alpha);
double mse_noa_flattened(const ArmaParams& params, int n, int m, double beta);
double mse_oa_flattened(const ArmaParams& params, int n, int m, double beta);

struct OptimalSmoothing {
    double smoothing;
    MseResult result;
};

/// Grid argmin of the analytical MSE over {step, 2*step, ..., 1.0};
/// ties break toward the smaller constant.
OptimalSmoothing optimize_smoothing(const ArmaParams& params, int n, int m,
                                    Approach approach, double grid_step = 0.01);

}  // namespace tempagg
