#include "tempagg/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tempagg/forecasting.hpp"
#include "tempagg/format.hpp"
#include "tempagg/rules.hpp"
#include "tempagg/transforms.hpp"

namespace tempagg {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double quantile(std::vector<double> v, double p) {
    std::sort(v.begin(), v.end());
    const double idx = p * (v.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(idx);
    const std::size_t hi = std::min(lo + 1, v.size() - 1);
    const double frac = idx - lo;
    return v[lo] * (1.0 - frac) + v[hi] * frac;
}

// In-sample one-step-ahead SSE of the SES recursion on a series.
double insample_sse(const std::vector<double>& series, double alpha) {
    double f = series.front();
    double sse = 0.0;
    for (std::size_t t = 1; t < series.size(); ++t) {
        const double e = series[t] - f;
        sse += e * e;
        f += alpha * e;
    }
    return sse;
}

double fit_alpha(const std::vector<double>& series) {
    double best_alpha = 0.05;
    double best_sse = insample_sse(series, 0.05);
    for (int i = 2; i <= 20; ++i) {
        const double alpha = i * 0.05;
        const double sse = insample_sse(series, alpha);
        if (sse < best_sse) {
            best_sse = sse;
            best_alpha = alpha;
        }
    }
    return best_alpha;
}

}  // namespace

SeriesDataset load_series(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty file: " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "series_id,period,value") {
        throw std::runtime_error("malformed header in " + path + ": " + line);
    }

    SeriesDataset dataset;
    std::map<std::string, long> last_period;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 3) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected 3 fields");
        }
        const std::string& id = fields[0];
        long period;
        double value;
        try {
            std::size_t pos = 0;
            period = std::stol(fields[1], &pos);
            if (pos != fields[1].size()) throw std::invalid_argument("");
            value = std::stod(fields[2], &pos);
            if (pos != fields[2].size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": non-numeric period/value for series '" +
                                     id + "'");
        }
        if (!std::isfinite(value)) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": non-finite value for series '" + id + "'");
        }
        auto it = last_period.find(id);
        if (it != last_period.end()) {
            if (period == it->second) {
                throw std::runtime_error("duplicate (series, period): '" + id +
                                         "', period " + std::to_string(period));
            }
            if (period < it->second) {
                throw std::runtime_error("non-monotone period index for series '" +
                                         id + "' at period " + std::to_string(period));
            }
        }
        last_period[id] = period;
        dataset[id].values.push_back(value);
    }
    return dataset;
}

void save_series(const SeriesDataset& dataset, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "series_id,period,value\n";
    for (const auto& [id, series] : dataset) {
        for (std::size_t t = 0; t < series.size(); ++t) {
            out << id << ',' << (t + 1) << ',' << format_real(series.values[t])
                << '\n';
        }
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

SeriesDataset screen_series(const SeriesDataset& dataset, std::size_t min_len,
                            std::size_t max_len) {
    if (min_len > max_len) {
        throw std::invalid_argument("screen_series: min_len > max_len");
    }
    SeriesDataset out;
    for (const auto& [id, series] : dataset) {
        if (series.size() < min_len) continue;
        if (series.size() <= max_len) {
            out[id] = series;
        } else {
            DemandSeries trimmed;  // keep the most recent observations
            trimmed.values.assign(series.values.end() - max_len,
                                  series.values.end());
            out[id] = std::move(trimmed);
        }
    }
    return out;
}

AcfProfile acf_profile(const SeriesDataset& dataset, int max_lag) {
    if (max_lag < 1) throw std::invalid_argument("acf_profile: max_lag must be >= 1");
    AcfProfile profile;
    std::vector<std::vector<double>> per_lag(max_lag);
    for (const auto& [id, series] : dataset) {
        if (series.size() <= static_cast<std::size_t>(max_lag)) {
            profile.skipped.push_back(id);
            continue;
        }
        try {
            const auto acf = sample_acf(series, max_lag);
            for (int k = 0; k < max_lag; ++k) per_lag[k].push_back(acf[k]);
        } catch (const std::invalid_argument&) {
            profile.skipped.push_back(id);  // zero-variance series
        }
    }
    for (int k = 0; k < max_lag; ++k) {
        AcfLagSummary s;
        s.lag = k + 1;
        s.values = per_lag[k];
        if (!s.values.empty()) {
            s.q1 = quantile(s.values, 0.25);
            s.median = quantile(s.values, 0.5);
            s.q3 = quantile(s.values, 0.75);
        } else {
            s.q1 = s.median = s.q3 = std::nan("");
        }
        profile.lags.push_back(std::move(s));
    }
    return profile;
}

RollingOriginRow rolling_origin_eval(const SeriesDataset& dataset, int n, int m,
                                     const SmoothingPolicy& policy,
                                     std::vector<std::string>* skipped) {
    if (n < m || m < 1) throw std::invalid_argument("rolling_origin_eval: need n >= m >= 1");
    double sum_na = 0.0, sum_noa = 0.0, sum_oa = 0.0;
    std::size_t series_count = 0, total_origins = 0, degenerate = 0;

    for (const auto& [id, series] : dataset) {
        const std::size_t len = series.size();
        if (len < static_cast<std::size_t>(n + m)) {
            if (skipped) skipped->push_back(id);
            continue;
        }
        const std::size_t origins = len - n - m + 1;
        double se_na = 0.0, se_noa = 0.0, se_oa = 0.0;
        for (std::size_t o = 0; o < origins; ++o) {
            DemandSeries window;
            window.values.assign(series.values.begin() + o,
                                 series.values.begin() + o + n);
            const double actual = cumulative_actual(series, o + n, m);

            const auto noa_buckets = aggregate_non_overlapping(window, m);
            const auto oa_buckets = aggregate_overlapping(window, m);
            double a_na, a_noa, a_oa;
            if (policy.fixed) {
                a_na = a_noa = a_oa = *policy.fixed;
            } else {
                a_na = fit_alpha(window.values);
                a_noa = fit_alpha(noa_buckets.values);
                a_oa = fit_alpha(oa_buckets.values);
            }
            const double f_na = m * ses_one_step(window.values, SesConfig(a_na));
            const double f_noa = ses_one_step(noa_buckets.values, SesConfig(a_noa));
            const double f_oa = ses_one_step(oa_buckets.values, SesConfig(a_oa));

            se_na += (actual - f_na) * (actual - f_na);
            se_noa += (actual - f_noa) * (actual - f_noa);
            se_oa += (actual - f_oa) * (actual - f_oa);
        }
        sum_na += se_na / origins;
        sum_noa += se_noa / origins;
        sum_oa += se_oa / origins;
        total_origins += origins;
        ++series_count;
    }

    RollingOriginRow row{};
    row.m = m;
    row.n = n;
    row.origins_evaluated = total_origins;
    row.series_count = series_count;
    if (series_count == 0) {
        row.avg_mse_na = row.avg_mse_noa = row.avg_mse_oa = 0.0;
        row.ratio_noa_na = row.ratio_oa_na = 1.0;
        return row;
    }
    row.avg_mse_na = sum_na / series_count;
    row.avg_mse_noa = sum_noa / series_count;
    row.avg_mse_oa = sum_oa / series_count;
    if (row.avg_mse_na == 0.0) {
        // constant data: zero error everywhere, ratio 1 by convention
        row.ratio_noa_na = row.ratio_oa_na = 1.0;
        degenerate = series_count;
    } else {
        row.ratio_noa_na = row.avg_mse_noa / row.avg_mse_na;
        row.ratio_oa_na = row.avg_mse_oa / row.avg_mse_na;
    }
    row.degenerate_series = degenerate;
    return row;
}

void export_rolling_report(const RollingOriginReport& report,
                           const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "m,n,avg_mse_na,avg_mse_noa,avg_mse_oa,ratio_noa_na,ratio_oa_na,"
           "origins_evaluated,series_count\n";
    for (const auto& r : report.rows) {
        out << r.m << ',' << r.n << ',' << format_real(r.avg_mse_na) << ','
            << format_real(r.avg_mse_noa) << ',' << format_real(r.avg_mse_oa)
            << ',' << format_real(r.ratio_noa_na) << ','
            << format_real(r.ratio_oa_na) << ',' << r.origins_evaluated << ','
            << r.series_count << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

SeriesDataset generate_dataset(const ArmaParams& params, std::size_t count,
                               std::size_t length, std::uint64_t seed) {
    SeriesDataset dataset;
    for (std::size_t i = 0; i < count; ++i) {
        char id[32];
        std::snprintf(id, sizeof(id), "S%04zu", i + 1);
        dataset[id] = simulate(params, length, seed + i);
    }
    return dataset;
}

}  // namespace tempagg
