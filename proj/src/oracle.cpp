#include "tempagg/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "tempagg/transforms.hpp"

namespace tempagg {

namespace {

// SES weight on the k-th most recent value of an M-long history,
// init folded into the oldest term.
double ses_weight(int k, int M, double beta) {
    double w = (k == M) ? 1.0 : beta;
    for (int i = 1; i < k; ++i) w *= 1.0 - beta;
    return w;
}

}  // namespace

ErrorWeightVector build_error_weights(Approach approach, int n, int m,
                                      double smoothing) {
    if (n < 1 || m < 1) throw std::invalid_argument("build_error_weights: n, m must be >= 1");
    if (approach != Approach::NA && n < m) {
        throw std::invalid_argument("build_error_weights: insufficient history");
    }
    if (!(smoothing > 0.0 && smoothing <= 1.0)) {
        throw std::invalid_argument("build_error_weights: smoothing must be in (0, 1]");
    }

    // Index layout: position i in [0, n) is d_{t-n+i}; positions [n, n+m)
    // are the future demands d_t .. d_{t+m-1}.
    ErrorWeightVector ev{std::vector<double>(n + m, 0.0), approach, n, m, smoothing};
    for (int i = 0; i < m; ++i) ev.weights[n + i] = 1.0;

    auto past = [&](int k) -> double& {  // k-th most recent past demand
        return ev.weights[n - k];
    };

    switch (approach) {
        case Approach::NA:
            for (int k = 1; k <= n; ++k) past(k) -= m * ses_weight(k, n, smoothing);
            break;
        case Approach::NOA: {
            const int M = n / m;
            for (int k = 1; k <= M; ++k) {
                const double w = ses_weight(k, M, smoothing);
                for (int l = 1; l <= m; ++l) past((k - 1) * m + l) -= w;
            }
            break;
        }
        case Approach::OA: {
            const int M = n - m + 1;
            for (int k = 1; k <= M; ++k) {
                const double w = ses_weight(k, M, smoothing);
                for (int l = 0; l < m; ++l) past(k + l) -= w;
            }
            break;
        }
    }
    return ev;
}

double exact_mse(const ArmaParams& params, const ErrorWeightVector& ev) {
    const auto& w = ev.weights;
    const std::size_t size = w.size();
    double mse = 0.0;
    for (std::size_t lag = 0; lag < size; ++lag) {
        double coeff = 0.0;
        for (std::size_t i = 0; i + lag < size; ++i) coeff += w[i] * w[i + lag];
        if (lag > 0) coeff *= 2.0;
        mse += coeff * autocovariance(params, static_cast<int>(lag));
    }
    return mse;
}

MonteCarloEstimate monte_carlo_mse(const ArmaParams& params, int n, int m,
                                   double smoothing, Approach approach,
                                   std::size_t replications, std::uint64_t seed) {
    if (replications < 2) {
        throw std::invalid_argument("monte_carlo_mse: replications must be >= 2");
    }
    const SesConfig config(smoothing);
    double sum = 0.0, sum_sq = 0.0;
    for (std::size_t r = 0; r < replications; ++r) {
        const DemandSeries path = simulate(params, n + m, seed + r);
        DemandSeries history;
        history.values.assign(path.values.begin(), path.values.begin() + n);
        double forecast = 0.0;
        switch (approach) {
            case Approach::NA:
                forecast = cumulative_forecast_na(history, m, config).value;
                break;
            case Approach::NOA:
                forecast = cumulative_forecast_noa(history, m, config).value;
                break;
            case Approach::OA:
                forecast = cumulative_forecast_oa(history, m, config).value;
                break;
        }
        const double err = cumulative_actual(path, n, m) - forecast;
        const double sq = err * err;
        sum += sq;
        sum_sq += sq * sq;
    }
    const double mean = sum / replications;
    const double var_of_sq =
        (sum_sq - replications * mean * mean) / (replications - 1);
    const double se = std::sqrt(std::max(var_of_sq, 0.0) / replications);
    return {mean, se, replications, seed};
}

}  // namespace tempagg
