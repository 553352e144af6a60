#include "tempagg/analytical.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace tempagg {

namespace {

void check_history(int n, int m, Approach approach) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (approach != Approach::NA && n < m) {
        throw std::invalid_argument("insufficient history for one bucket: n=" +
                                    std::to_string(n) + ", m=" + std::to_string(m));
    }
}

// Finite SES with first-observation initialization puts weight
//   a_k = beta (1-beta)^{k-1}   on the k-th most recent value, k < M,
//   a_M = (1-beta)^{M-1}        on the oldest value (SES term + init).
//
// Variance of the forecast of a stationary series with autocovariances g:
//   var = g[0] * sum_k a_k^2 + 2 * sum_{l=1}^{M-1} g[l] * c_l,
//   c_l = sum_{k=1}^{M-l} a_k a_{k+l}.
// Both coefficient sums collapse to the geometric forms below.
double ses_forecast_variance(const std::vector<double>& g, double beta) {
    const int M = static_cast<int>(g.size());
    const double q = 1.0 - beta;
    double q_pow = 1.0;                      // q^l
    std::vector<double> q_powers(2 * M + 1);
    q_powers[0] = 1.0;
    for (int i = 1; i <= 2 * M; ++i) q_powers[i] = q_powers[i - 1] * q;

    const double diag = beta * (1.0 - q_powers[2 * M]) / (2.0 - beta) +
                        2.0 * beta * q_powers[2 * M - 1] + q_powers[2 * M];
    double var = g[0] * diag;
    for (int l = 1; l <= M - 1; ++l) {
        q_pow *= q;
        const double c = (beta / (2.0 - beta)) * q_pow *
                             (1.0 - q_powers[2 * (M - l)]) +
                         beta * q_powers[2 * M - l - 1];
        var += 2.0 * g[l] * c;
    }
    return var;
}

// cov(D_T, forecast) given h[k] = cov(D_T, k-th most recent value), k = 1..M.
double ses_cross_cov(const std::vector<double>& h, double beta) {
    const int M = static_cast<int>(h.size()) - 1;
    const double q = 1.0 - beta;
    double cov = 0.0;
    double q_pow = 1.0;  // q^{k-1}
    for (int k = 1; k <= M - 1; ++k) {
        cov += beta * q_pow * h[k];
        q_pow *= q;
    }
    cov += q_pow * h[M];  // q^{M-1}, oldest value carries the init weight too
    return cov;
}

// Raw autocovariances gamma_0 .. gamma_{count-1}.
std::vector<double> raw_gamma_table(const ArmaParams& p, int count) {
    std::vector<double> g(count);
    g[0] = autocovariance(p, 0);
    if (count > 1) g[1] = autocovariance(p, 1);
    for (int l = 2; l < count; ++l) g[l] = g[l - 1] * p.phi;
    return g;
}

// Overlapping-aggregate autocovariances gamma''_0 .. gamma''_{count-1}.
// Beyond lag m the windows are disjoint and the table decays geometrically.
std::vector<double> oa_gamma_table(const ArmaParams& p, int m, int count) {
    std::vector<double> g(count);
    const int direct = std::min(count, m + 1);
    for (int l = 0; l < direct; ++l) g[l] = oa_autocovariance(p, m, l);
    for (int l = direct; l < count; ++l) g[l] = g[l - 1] * p.phi;
    return g;
}

struct Tables {
    double var_demand;       // gamma'_0 = var(D_T)
    std::vector<double> g;   // forecast-process autocovariances, size M
    std::vector<double> h;   // cov(D_T, value at lag k), index 1..M
    double forecast_scale;   // m for NA (cumulative forecast = m * f_t), else 1
};

Tables build_tables(const ArmaParams& p, int n, int m, Approach approach) {
    Tables t;
    t.var_demand = noa_variance(p, m);
    const double gamma1 = autocovariance(p, 1);
    const double s = geometric_sum(p.phi, m);

    switch (approach) {
        case Approach::NA: {
            const int M = n;
            t.g = raw_gamma_table(p, M);
            t.h.assign(M + 1, 0.0);
            double phi_pow = 1.0;
            for (int k = 1; k <= M; ++k) {
                t.h[k] = phi_pow * gamma1 * s;
                phi_pow *= p.phi;
            }
            t.forecast_scale = m;
            break;
        }
        case Approach::NOA: {
            const int M = n / m;
            t.g.assign(M, 0.0);
            t.g[0] = t.var_demand;
            t.h.assign(M + 1, 0.0);
            double phi_m_pow = 1.0;
            const double phi_m = std::pow(p.phi, m);
            for (int k = 1; k <= M; ++k) {
                const double cov = phi_m_pow * gamma1 * s * s;
                if (k < M) t.g[k] = cov;
                t.h[k] = cov;  // D_T is the next disjoint bucket
                phi_m_pow *= phi_m;
            }
            t.forecast_scale = 1.0;
            break;
        }
        case Approach::OA: {
            const int M = n - m + 1;
            t.g = oa_gamma_table(p, m, M);
            t.h.assign(M + 1, 0.0);
            double phi_pow = 1.0;
            for (int k = 1; k <= M; ++k) {
                t.h[k] = phi_pow * gamma1 * s * s;
                phi_pow *= p.phi;
            }
            t.forecast_scale = 1.0;
            break;
        }
    }
    return t;
}

MseResult eval_tables(const Tables& t, double smoothing) {
    const double scale = t.forecast_scale;
    const double var_f = scale * scale * ses_forecast_variance(t.g, smoothing);
    const double cov = scale * ses_cross_cov(t.h, smoothing);
    return {t.var_demand + var_f - 2.0 * cov, t.var_demand, var_f, cov};
}

}  // namespace

MseQuery::MseQuery(ArmaParams params, int n, int m, double smoothing,
                   Approach approach)
    : params(params), n(n), m(m), smoothing(smoothing), approach(approach) {
    check_history(n, m, approach);
    if (!(smoothing > 0.0 && smoothing <= 1.0)) {
        throw std::invalid_argument("smoothing constant must be in (0, 1]");
    }
}

double var_forecast_na(const ArmaParams& p, int n, double alpha) {
    check_history(n, 1, Approach::NA);
    return ses_forecast_variance(raw_gamma_table(p, n), alpha);
}

double cov_demand_forecast_na(const ArmaParams& p, int n, int m, double alpha) {
    check_history(n, m, Approach::NA);
    const auto t = build_tables(p, n, m, Approach::NA);
    return ses_cross_cov(t.h, alpha);
}

double var_forecast_noa(const ArmaParams& p, int n, int m, double beta) {
    check_history(n, m, Approach::NOA);
    return ses_forecast_variance(build_tables(p, n, m, Approach::NOA).g, beta);
}

double cov_noa(const ArmaParams& p, int n, int m, double beta) {
    check_history(n, m, Approach::NOA);
    return ses_cross_cov(build_tables(p, n, m, Approach::NOA).h, beta);
}

double var_forecast_oa(const ArmaParams& p, int n, int m, double beta) {
    check_history(n, m, Approach::OA);
    return ses_forecast_variance(build_tables(p, n, m, Approach::OA).g, beta);
}

double cov_oa(const ArmaParams& p, int n, int m, double beta) {
    check_history(n, m, Approach::OA);
    return ses_cross_cov(build_tables(p, n, m, Approach::OA).h, beta);
}

MseResult mse_na(const MseQuery& q) {
    if (q.approach != Approach::NA) throw std::invalid_argument("mse_na: approach mismatch");
    return eval_tables(build_tables(q.params, q.n, q.m, Approach::NA), q.smoothing);
}

MseResult mse_noa(const MseQuery& q) {
    if (q.approach != Approach::NOA) throw std::invalid_argument("mse_noa: approach mismatch");
    return eval_tables(build_tables(q.params, q.n, q.m, Approach::NOA), q.smoothing);
}

MseResult mse_oa(const MseQuery& q) {
    if (q.approach != Approach::OA) throw std::invalid_argument("mse_oa: approach mismatch");
    return eval_tables(build_tables(q.params, q.n, q.m, Approach::OA), q.smoothing);
}

MseResult mse(const MseQuery& q) {
    return eval_tables(build_tables(q.params, q.n, q.m, q.approach), q.smoothing);
}

double mse_na_flattened(const ArmaParams& p, int n, int m, double alpha) {
    check_history(n, m, Approach::NA);
    const double gamma0 = autocovariance(p, 0);
    const double gamma1 = autocovariance(p, 1);
    const double s = geometric_sum(p.phi, m);
    const double q = 1.0 - alpha;
    const double phi = p.phi;

    double var_f = alpha * gamma0 * (1.0 - std::pow(q, 2 * n)) / (2.0 - alpha) +
                   2.0 * alpha * std::pow(q, 2 * n - 1) * gamma0 +
                   std::pow(q, 2 * n) * gamma0;
    double sum1 = 0.0, sum2 = 0.0;
    for (int i = 1; i <= n - 1; ++i) {
        sum1 += std::pow(q, i) * std::pow(phi, i - 1) *
                (1.0 - std::pow(q, 2 * (n - i)));
        sum2 += std::pow(phi, n - i - 1) * std::pow(q, n + i - 1);
    }
    var_f += 2.0 * alpha * gamma1 / (2.0 - alpha) * sum1 + 2.0 * alpha * gamma1 * sum2;

    const double cov = alpha * gamma1 * s * (1.0 - std::pow(phi * q, n)) /
                           (1.0 - phi + alpha * phi) +
                       std::pow(q, n) * std::pow(phi, n - 1) * gamma1 * s;

    return noa_variance(p, m) + m * m * var_f - 2.0 * m * cov;
}

double mse_noa_flattened(const ArmaParams& p, int n, int m, double beta) {
    check_history(n, m, Approach::NOA);
    const int M = n / m;  // floor, as in the forecast recursion
    const double gamma1 = autocovariance(p, 1);
    const double s = geometric_sum(p.phi, m);
    const double s2 = s * s;
    const double gp0 = noa_variance(p, m);
    const double q = 1.0 - beta;
    const double phi_m = std::pow(p.phi, m);

    double var_f = gp0 * (beta * (1.0 - std::pow(q, 2 * M)) / (2.0 - beta) +
                          std::pow(q, 2 * M) + 2.0 * beta * std::pow(q, 2 * M - 1));
    double sum1 = 0.0, sum2 = 0.0;
    for (int i = 1; i <= M - 1; ++i) {
        sum1 += std::pow(q, i) * std::pow(phi_m, i - 1) *
                (1.0 - std::pow(q, 2 * (M - i)));
        sum2 += std::pow(q, M + i - 1) * std::pow(phi_m, M - i - 1);
    }
    var_f += 2.0 * beta * gamma1 * s2 / (2.0 - beta) * sum1 +
             2.0 * beta * gamma1 * s2 * sum2;

    const double cov = beta * gamma1 * s2 * (1.0 - std::pow(phi_m * q, M)) /
                           (1.0 - phi_m + beta * phi_m) +
                       std::pow(phi_m, M - 1) * std::pow(q, M) * s2 * gamma1;

    return gp0 + var_f - 2.0 * cov;
}

double mse_oa_flattened(const ArmaParams& p, int n, int m, double beta) {
    check_history(n, m, Approach::OA);
    const int M = n - m + 1;
    const double gamma1 = autocovariance(p, 1);
    const double s = geometric_sum(p.phi, m);
    const double gpp0 = noa_variance(p, m);
    const double q = 1.0 - beta;
    const double phi = p.phi;

    double mse = gpp0;
    mse += beta * gpp0 * (1.0 - std::pow(q * q, M)) / (2.0 - beta);
    mse -= 2.0 * beta * gamma1 * s * s * (1.0 - std::pow(phi * q, M)) /
           (1.0 - phi + phi * beta);
    double sum = 0.0;
    for (int k = 1; k <= n - m; ++k) {
        sum += std::pow(q, k) * oa_autocovariance(p, m, k) *
               (1.0 - std::pow(q, 2 * (M - k)));
    }
    mse += 2.0 * beta / (2.0 - beta) * sum;
    return mse;
}

OptimalSmoothing optimize_smoothing(const ArmaParams& p, int n, int m,
                                    Approach approach, double grid_step) {
    check_history(n, m, approach);
    const int steps = static_cast<int>(std::lround(1.0 / grid_step));
    if (steps < 1 || std::abs(steps * grid_step - 1.0) > 1e-9) {
        throw std::invalid_argument("grid_step must divide (0, 1]");
    }
    const Tables tables = build_tables(p, n, m, approach);
    OptimalSmoothing best{0.0, {}};
    for (int i = 1; i <= steps; ++i) {
        const double a = (i == steps) ? 1.0 : i * grid_step;
        const MseResult r = eval_tables(tables, a);
        if (i == 1 || r.mse < best.result.mse) best = {a, r};
    }
    return best;
}

}  // namespace tempagg
