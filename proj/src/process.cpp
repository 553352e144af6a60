#include "tempagg/process.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace tempagg {

namespace {
constexpr double kUnitCircleMargin = 1e-9;
}

ArmaParams::ArmaParams(double c, double phi, double theta, double sigma2)
    : c(c), phi(phi), theta(theta), sigma2(sigma2) {
    if (!(std::abs(phi) < 1.0 - kUnitCircleMargin)) {
        throw std::invalid_argument("ArmaParams: |phi| must be < 1, got " +
                                    std::to_string(phi));
    }
    if (!(std::abs(theta) < 1.0 - kUnitCircleMargin)) {
        throw std::invalid_argument("ArmaParams: |theta| must be < 1, got " +
                                    std::to_string(theta));
    }
    if (!(sigma2 > 0.0)) {
        throw std::invalid_argument("ArmaParams: sigma2 must be > 0, got " +
                                    std::to_string(sigma2));
    }
}

double geometric_sum(double phi, int m) {
    double sum = 0.0;
    double term = 1.0;
    for (int k = 0; k < m; ++k) {
        sum += term;
        term *= phi;
    }
    return sum;
}

double autocovariance(const ArmaParams& p, int lag) {
    if (lag < 0) throw std::invalid_argument("autocovariance: lag must be >= 0");
    const double denom = 1.0 - p.phi * p.phi;
    if (lag == 0) {
        return (1.0 - 2.0 * p.phi * p.theta + p.theta * p.theta) / denom * p.sigma2;
    }
    const double gamma1 = (p.phi - p.theta) * (1.0 - p.phi * p.theta) / denom * p.sigma2;
    double g = gamma1;
    for (int k = 1; k < lag; ++k) g *= p.phi;
    return g;
}

double autocorrelation(const ArmaParams& p, int lag) {
    if (lag < 1) throw std::invalid_argument("autocorrelation: lag must be >= 1");
    return autocovariance(p, lag) / autocovariance(p, 0);
}

double noa_variance(const ArmaParams& p, int m) {
    if (m < 1) throw std::invalid_argument("noa_variance: m must be >= 1");
    const double gamma0 = autocovariance(p, 0);
    const double gamma1 = autocovariance(p, 1);
    double weight = 0.0;
    double phi_pow = 1.0;
    for (int k = 1; k <= m - 1; ++k) {
        weight += 2.0 * (m - k) * phi_pow;
        phi_pow *= p.phi;
    }
    return m * gamma0 + gamma1 * weight;
}

double noa_autocovariance(const ArmaParams& p, int m, int lag) {
    if (m < 1) throw std::invalid_argument("noa_autocovariance: m must be >= 1");
    if (lag < 1) throw std::invalid_argument("noa_autocovariance: lag must be >= 1");
    const double s = geometric_sum(p.phi, m);
    double phi_pow = 1.0;
    for (int k = 0; k < m * (lag - 1); ++k) phi_pow *= p.phi;
    return phi_pow * autocovariance(p, 1) * s * s;
}

double oa_autocovariance(const ArmaParams& p, int m, int lag) {
    if (m < 1) throw std::invalid_argument("oa_autocovariance: m must be >= 1");
    if (lag < 0) throw std::invalid_argument("oa_autocovariance: lag must be >= 0");
    // sum_{i,j in 1..m} gamma_{|lag + j - i|}; the offset d = lag + j - i
    // occurs m - |d - lag| times.
    double sum = 0.0;
    for (int d = lag - (m - 1); d <= lag + (m - 1); ++d) {
        const int count = m - std::abs(d - lag);
        sum += count * autocovariance(p, std::abs(d));
    }
    return sum;
}

double aggregate_demand_cross_cov(const ArmaParams& p, int m, int lag) {
    if (m < 1) throw std::invalid_argument("aggregate_demand_cross_cov: m must be >= 1");
    if (lag < 1) throw std::invalid_argument("aggregate_demand_cross_cov: lag must be >= 1");
    double phi_pow = 1.0;
    for (int k = 1; k < lag; ++k) phi_pow *= p.phi;
    return phi_pow * autocovariance(p, 1) * geometric_sum(p.phi, m);
}

DemandSeries simulate(const ArmaParams& p, std::size_t length,
                      std::uint64_t seed, std::size_t burn_in) {
    if (length < 1) throw std::invalid_argument("simulate: length must be >= 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, std::sqrt(p.sigma2));

    double d = p.mean();
    double e_prev = 0.0;
    DemandSeries series;
    series.values.reserve(length);
    const std::size_t total = burn_in + length;
    for (std::size_t t = 0; t < total; ++t) {
        const double e = noise(rng);
        d = p.c + p.phi * d + e - p.theta * e_prev;
        e_prev = e;
        if (t >= burn_in) series.values.push_back(d);
    }
    return series;
}

}  // namespace tempagg
