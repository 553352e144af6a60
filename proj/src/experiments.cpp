#include "tempagg/experiments.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "tempagg/analytical.hpp"
#include "tempagg/format.hpp"

namespace tempagg {

namespace {

std::vector<double> default_param_grid() {
    std::vector<double> values;
    values.reserve(39);
    for (int i = -19; i <= 19; ++i) values.push_back(i * 0.05);
    return values;
}

int case_rank(AcfClass c) {
    switch (c) {
        case AcfClass::NegativeAllLags: return 0;
        case AcfClass::Oscillating: return 1;
        case AcfClass::PositiveAllLags: return 2;
        case AcfClass::WhiteNoise: return 3;
    }
    return 4;
}

}  // namespace

SweepGrid::SweepGrid()
    : phi_values(default_param_grid()), theta_values(default_param_grid()) {}

const RatioRow* RatioTable::find(AcfClass c, int m, int n) const {
    for (const auto& row : rows) {
        if (row.acf_class == c && row.m == m && row.n == n) return &row;
    }
    return nullptr;
}

RatioTable sweep(const SweepGrid& grid) {
    struct Pair {
        ArmaParams params;
        AcfClass acf_class;
    };
    std::vector<Pair> pairs;
    for (double phi : grid.phi_values) {
        for (double theta : grid.theta_values) {
            ArmaParams params(0.0, phi, theta, 1.0);
            const AcfClass c = classify_params(params);
            if (grid.case_filter && c != *grid.case_filter) continue;
            pairs.push_back({params, c});
        }
    }

    const std::size_t cells = grid.m_values.size() * grid.n_values.size();
    // per pair, per (m, n) cell: MSE_NA, MSE_NOA, MSE_OA
    std::vector<std::array<double, 3>> results(pairs.size() * cells);

    auto evaluate_pair = [&](std::size_t pi) {
        const ArmaParams& params = pairs[pi].params;
        std::size_t cell = 0;
        for (int m : grid.m_values) {
            for (int n : grid.n_values) {
                std::array<double, 3> mses{};
                const Approach approaches[] = {Approach::NA, Approach::NOA,
                                               Approach::OA};
                for (int a = 0; a < 3; ++a) {
                    if (grid.fixed_smoothing) {
                        mses[a] = mse(MseQuery(params, n, m, *grid.fixed_smoothing,
                                               approaches[a]))
                                      .mse;
                    } else {
                        mses[a] = optimize_smoothing(params, n, m, approaches[a],
                                                     grid.smoothing_grid_step)
                                      .result.mse;
                    }
                }
                results[pi * cells + cell] = mses;
                ++cell;
            }
        }
    };

    unsigned jobs = grid.jobs > 0 ? static_cast<unsigned>(grid.jobs)
                                  : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, pairs.size() > 0 ? pairs.size() : 1);
    if (jobs <= 1) {
        for (std::size_t pi = 0; pi < pairs.size(); ++pi) evaluate_pair(pi);
    } else {
        std::vector<std::thread> workers;
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] {
                for (std::size_t pi = w; pi < pairs.size(); pi += jobs) {
                    evaluate_pair(pi);
                }
            });
        }
        for (auto& t : workers) t.join();
    }

    // Deterministic reduction in pair order, then fixed row order.
    RatioTable table;
    const AcfClass all_cases[] = {AcfClass::NegativeAllLags, AcfClass::Oscillating,
                                  AcfClass::PositiveAllLags, AcfClass::WhiteNoise};
    for (AcfClass c : all_cases) {
        std::size_t count = 0;
        for (const auto& p : pairs) count += (p.acf_class == c);
        if (count == 0) continue;  // absent cell, not an error
        std::size_t cell = 0;
        for (int m : grid.m_values) {
            for (int n : grid.n_values) {
                double sum_na = 0.0, sum_noa = 0.0, sum_oa = 0.0;
                for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
                    if (pairs[pi].acf_class != c) continue;
                    const auto& r = results[pi * cells + cell];
                    sum_na += r[0];
                    sum_noa += r[1];
                    sum_oa += r[2];
                }
                // ratios from the stored averages, so a row is exactly
                // recomputable from its avg_mse columns
                const double avg_na = sum_na / count;
                const double avg_noa = sum_noa / count;
                const double avg_oa = sum_oa / count;
                table.rows.push_back({c, m, n, avg_na, avg_noa, avg_oa,
                                      avg_noa / avg_na, avg_oa / avg_na});
                ++cell;
            }
        }
    }
    std::sort(table.rows.begin(), table.rows.end(),
              [](const RatioRow& a, const RatioRow& b) {
                  return std::make_tuple(case_rank(a.acf_class), a.m, a.n) <
                         std::make_tuple(case_rank(b.acf_class), b.m, b.n);
              });
    return table;
}

RatioTable fixed_constant_sweep(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("fixed_constant_sweep: alpha must be in (0, 1]");
    }
    SweepGrid grid;
    grid.fixed_smoothing = alpha;
    return sweep(grid);
}

void export_ratio_table(const RatioTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "case,m,n,avg_mse_na,avg_mse_noa,avg_mse_oa,ratio_noa_na,ratio_oa_na\n";
    for (const auto& r : table.rows) {
        out << acf_class_name(r.acf_class) << ',' << r.m << ',' << r.n << ','
            << format_real(r.avg_mse_na) << ',' << format_real(r.avg_mse_noa)
            << ',' << format_real(r.avg_mse_oa) << ','
            << format_real(r.ratio_noa_na) << ',' << format_real(r.ratio_oa_na)
            << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace tempagg
