#include "tempagg/rules.hpp"

#include <cmath>
#include <stdexcept>

namespace tempagg {

const char* acf_class_name(AcfClass c) {
    switch (c) {
        case AcfClass::NegativeAllLags: return "negative";
        case AcfClass::PositiveAllLags: return "positive";
        case AcfClass::Oscillating: return "oscillating";
        case AcfClass::WhiteNoise: return "white_noise";
    }
    return "?";
}

AcfClass classify_params(const ArmaParams& p, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("classify_params: tol must be > 0");
    if (std::abs(p.phi - p.theta) <= tol) return AcfClass::WhiteNoise;
    const double rho1_sign = (p.phi - p.theta) * (1.0 - p.phi * p.theta);
    if (p.phi < 0.0) return AcfClass::Oscillating;
    // phi >= 0: rho_k = phi^{k-1} rho_1 keeps the sign of rho_1 at all lags.
    return rho1_sign > 0.0 ? AcfClass::PositiveAllLags : AcfClass::NegativeAllLags;
}

std::vector<double> sample_acf(const DemandSeries& series, int max_lag) {
    const std::size_t n = series.size();
    if (max_lag < 1) throw std::invalid_argument("sample_acf: max_lag must be >= 1");
    if (n <= static_cast<std::size_t>(max_lag)) {
        throw std::invalid_argument("sample_acf: series too short for max_lag");
    }
    double mean = 0.0;
    for (double v : series.values) mean += v;
    mean /= static_cast<double>(n);

    double c0 = 0.0;
    for (double v : series.values) c0 += (v - mean) * (v - mean);
    if (c0 == 0.0) {
        throw std::invalid_argument("sample_acf: zero-variance series has undefined ACF");
    }
    std::vector<double> acf(max_lag);
    for (int k = 1; k <= max_lag; ++k) {
        double ck = 0.0;
        for (std::size_t t = k; t < n; ++t) {
            ck += (series.values[t] - mean) * (series.values[t - k] - mean);
        }
        acf[k - 1] = ck / c0;
    }
    return acf;
}

AcfClass classify_series(const DemandSeries& series, int max_lag) {
    const auto acf = sample_acf(series, max_lag);
    const double band = 1.96 / std::sqrt(static_cast<double>(series.size()));
    // An ARMA(1,1) ACF decays geometrically, so only the leading run of
    // significant lags is informative; once the true ACF drops inside the
    // band, later lags are noise and an isolated excursion there must not
    // flip the class.
    bool any_pos = false, any_neg = false;
    for (double r : acf) {
        if (r > band) {
            any_pos = true;
        } else if (r < -band) {
            any_neg = true;
        } else {
            break;  // end of the significant leading run
        }
    }
    if (!any_pos && !any_neg) return AcfClass::WhiteNoise;
    if (any_pos && any_neg) return AcfClass::Oscillating;
    return any_pos ? AcfClass::PositiveAllLags : AcfClass::NegativeAllLags;
}

Recommendation recommend(AcfClass acf_class) {
    switch (acf_class) {
        case AcfClass::WhiteNoise:
            return {RecommendedApproach::UseEitherTA,
                    "no autocorrelation: the two aggregation approaches perform "
                    "equally well; aggregate with either scheme"};
        case AcfClass::NegativeAllLags:
            return {RecommendedApproach::UseOverlappingTA,
                    "autocorrelation negative at all lags (for a pure MA(1), at "
                    "the single nonzero lag): overlapping temporal aggregation "
                    "is preferred"};
        case AcfClass::Oscillating:
            return {RecommendedApproach::UseOverlappingTA,
                    "autocorrelation alternates in sign across lags: overlapping "
                    "temporal aggregation is preferred"};
        case AcfClass::PositiveAllLags:
            return {RecommendedApproach::UseOriginalSeries,
                    "autocorrelation positive at all lags (for a pure MA(1), at "
                    "the single nonzero lag): forecast from the original series"};
    }
    throw std::logic_error("recommend: unknown ACF class");
}

}  // namespace tempagg
