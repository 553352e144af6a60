#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "tempagg/analytical.hpp"
#include "tempagg/oracle.hpp"

using namespace tempagg;

namespace {

double oracle(const ArmaParams& p, Approach a, int n, int m, double s) {
    return exact_mse(p, build_error_weights(a, n, m, s));
}

double rel_err(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace

TEST_CASE("query validation") {
    const ArmaParams p(0, 0.5, 0.2, 1.0);
    CHECK_THROWS_AS(MseQuery(p, 5, 7, 0.5, Approach::NOA), std::invalid_argument);
    CHECK_THROWS_AS(MseQuery(p, 5, 7, 0.5, Approach::OA), std::invalid_argument);
    CHECK_NOTHROW(MseQuery(p, 5, 7, 0.5, Approach::NA));
    CHECK_THROWS_AS(MseQuery(p, 24, 2, 0.0, Approach::NA), std::invalid_argument);
    CHECK_THROWS_AS(MseQuery(p, 24, 2, 1.5, Approach::NA), std::invalid_argument);
}

TEST_CASE("building blocks: white-noise and collapse cases") {
    const ArmaParams wn(0, 0, 0, 1);
    CHECK(var_forecast_na(wn, 12, 1.0) == doctest::Approx(1.0));
    CHECK(var_forecast_na(wn, 1, 0.5) == doctest::Approx(1.0));
    CHECK(cov_demand_forecast_na(wn, 10, 3, 0.4) == doctest::Approx(0.0));
    CHECK(var_forecast_noa(wn, 8, 2, 1.0) == doctest::Approx(2.0));
    CHECK(cov_noa(wn, 8, 2, 0.6) == doctest::Approx(0.0));
    CHECK(var_forecast_oa(wn, 8, 2, 1.0) == doctest::Approx(2.0));
    CHECK(cov_oa(wn, 8, 2, 0.6) == doctest::Approx(0.0));

    const ArmaParams ar(0, 0.5, 0, 1);
    CHECK(cov_demand_forecast_na(ar, 2, 2, 1.0) == doctest::Approx(1.0));

    // m = 1 collapse of the aggregated blocks onto the raw ones
    const ArmaParams p(0, 0.4, -0.2, 1.0);
    for (double s : {0.25, 0.8}) {
        CHECK(var_forecast_noa(p, 20, 1, s) ==
              doctest::Approx(var_forecast_na(p, 20, s)).epsilon(1e-13));
        CHECK(var_forecast_oa(p, 20, 1, s) ==
              doctest::Approx(var_forecast_na(p, 20, s)).epsilon(1e-13));
        CHECK(cov_noa(p, 20, 1, s) ==
              doctest::Approx(cov_demand_forecast_na(p, 20, 1, s)).epsilon(1e-13));
        CHECK(cov_oa(p, 20, 1, s) ==
              doctest::Approx(cov_demand_forecast_na(p, 20, 1, s)).epsilon(1e-13));
    }
}

TEST_CASE("building blocks match the quadratic-form oracle") {
    // var(forecast) and cov(demand, forecast) pulled out of the oracle by
    // evaluating wT Gamma w on the forecast-only / demand-only weight blocks.
    struct Case {
        double phi, theta;
        int n, m;
        double s;
    };
    const Case cases[] = {{0.5, 0.2, 24, 1, 0.3}, {0.5, 0.2, 36, 7, 0.2},
                          {0.4, -0.2, 36, 3, 0.5}, {0.3, 0.1, 24, 7, 0.4},
                          {-0.7, 0.2, 36, 12, 0.35}};
    for (const auto& c : cases) {
        const ArmaParams p(0, c.phi, c.theta, 1.0);
        for (Approach a : {Approach::NA, Approach::NOA, Approach::OA}) {
            auto ev = build_error_weights(a, c.n, c.m, c.s);
            // forecast-only weights: negate and zero the future block
            ErrorWeightVector fc = ev;
            for (auto& w : fc.weights) w = -w;
            for (int i = 0; i < c.m; ++i) fc.weights[c.n + i] = 0.0;
            const double var_f_oracle = exact_mse(p, fc);

            double var_f, cov;
            switch (a) {
                case Approach::NA:
                    var_f = c.m * c.m * var_forecast_na(p, c.n, c.s);
                    cov = c.m * cov_demand_forecast_na(p, c.n, c.m, c.s);
                    break;
                case Approach::NOA:
                    var_f = var_forecast_noa(p, c.n, c.m, c.s);
                    cov = cov_noa(p, c.n, c.m, c.s);
                    break;
                case Approach::OA:
                    var_f = var_forecast_oa(p, c.n, c.m, c.s);
                    cov = cov_oa(p, c.n, c.m, c.s);
                    break;
            }
            CHECK(rel_err(var_f, var_f_oracle) < 1e-11);
            // cov follows from mse = var_d + var_f - 2 cov
            const double mse_oracle = exact_mse(p, ev);
            const double var_d = noa_variance(p, c.m);
            const double cov_oracle = (var_d + var_f_oracle - mse_oracle) / 2.0;
            CHECK(rel_err(cov, cov_oracle) < 1e-9);
        }
    }
}

TEST_CASE("composed MSE: trivial values") {
    const ArmaParams wn(0, 0, 0, 1);
    CHECK(mse(MseQuery(wn, 17, 1, 1.0, Approach::NA)).mse == doctest::Approx(2.0));
    CHECK(mse(MseQuery(wn, 9, 2, 1.0, Approach::NA)).mse == doctest::Approx(6.0));
    CHECK(mse(MseQuery(wn, 9, 2, 1.0, Approach::NOA)).mse == doctest::Approx(4.0));
    CHECK(mse(MseQuery(wn, 9, 2, 1.0, Approach::OA)).mse == doctest::Approx(4.0));
}

TEST_CASE("oracle equivalence over the dense grid") {
    const double grid[] = {-0.8, -0.4, 0.0, 0.4, 0.8};
    for (double phi : grid) {
        for (double theta : grid) {
            const ArmaParams p(0, phi, theta, 1.0);
            for (int m : {1, 2, 3, 7, 12}) {
                for (int n : {24, 36, 60}) {
                    for (double s : {0.1, 0.5, 0.9}) {
                        for (Approach a :
                             {Approach::NA, Approach::NOA, Approach::OA}) {
                            const double composed =
                                mse(MseQuery(p, n, m, s, a)).mse;
                            const double reference = oracle(p, a, n, m, s);
                            CHECK(rel_err(composed, reference) < 1e-9);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("decomposition identity and nonnegativity") {
    const ArmaParams p(0, -0.6, 0.3, 1.4);
    for (Approach a : {Approach::NA, Approach::NOA, Approach::OA}) {
        for (double s : {0.1, 0.6, 1.0}) {
            const auto r = mse(MseQuery(p, 36, 4, s, a));
            CHECK(r.mse ==
                  r.var_demand + r.var_forecast - 2.0 * r.cov_demand_forecast);
            CHECK(r.mse >= 0.0);
        }
    }
}

TEST_CASE("m=1 collapse of the three approaches") {
    for (double phi : {-0.7, 0.0, 0.5}) {
        for (double theta : {-0.3, 0.4}) {
            const ArmaParams p(0, phi, theta, 1.0);
            for (double s : {0.15, 0.5, 1.0}) {
                const double na = mse(MseQuery(p, 30, 1, s, Approach::NA)).mse;
                const double noa = mse(MseQuery(p, 30, 1, s, Approach::NOA)).mse;
                const double oa = mse(MseQuery(p, 30, 1, s, Approach::OA)).mse;
                CHECK(rel_err(na, noa) < 1e-12);
                CHECK(rel_err(na, oa) < 1e-12);
            }
        }
    }
}

TEST_CASE("flattened forms") {
    const double grid[] = {-0.8, -0.4, 0.0, 0.4, 0.8};
    double worst_oa = 0.0;
    for (double phi : grid) {
        for (double theta : grid) {
            const ArmaParams p(0, phi, theta, 1.0);
            for (int m : {1, 2, 3, 7, 12}) {
                for (int n : {24, 36, 60}) {
                    for (double s : {0.1, 0.5, 0.9}) {
                        const double na = mse(MseQuery(p, n, m, s, Approach::NA)).mse;
                        CHECK(rel_err(na, mse_na_flattened(p, n, m, s)) < 1e-9);
                        const double noa =
                            mse(MseQuery(p, n, m, s, Approach::NOA)).mse;
                        CHECK(rel_err(noa, mse_noa_flattened(p, n, m, s)) < 1e-9);
                        const double oa = mse(MseQuery(p, n, m, s, Approach::OA)).mse;
                        worst_oa = std::max(
                            worst_oa, rel_err(oa, mse_oa_flattened(p, n, m, s)));
                    }
                }
            }
        }
    }
    // The single-expression OA transcription drops several finite-history
    // terms (initialization diagonal, trailing covariance sums); it deviates
    // from the composed path for short histories. Report, don't assert.
    MESSAGE("flattened OA form worst relative deviation: ", worst_oa);
    CHECK(worst_oa > 0.0);  // genuinely different expression
}

TEST_CASE("smoothing-constant optimization") {
    const ArmaParams p(0, 0.3, -0.2, 1.0);
    const auto best = optimize_smoothing(p, 36, 3, Approach::NA);
    const double at_half = mse(MseQuery(p, 36, 3, 0.5, Approach::NA)).mse;
    CHECK(best.result.mse <= at_half);

    // i.i.d. demand: averaging wins, but the first-observation initialization
    // weight (1-a)^(N-1) penalizes the very smallest constants, so the argmin
    // sits just above the grid floor. Verify against exhaustive evaluation.
    const ArmaParams wn(0, 0, 0, 1);
    const auto wn_best = optimize_smoothing(wn, 250, 1, Approach::NA);
    CHECK(wn_best.smoothing <= 0.05);
    double wn_manual = 1e300;
    double wn_alpha = 0.0;
    for (int i = 1; i <= 100; ++i) {
        const double a = (i == 100) ? 1.0 : i * 0.01;
        const double v = mse(MseQuery(wn, 250, 1, a, Approach::NA)).mse;
        if (v < wn_manual) {
            wn_manual = v;
            wn_alpha = a;
        }
    }
    CHECK(wn_best.smoothing == doctest::Approx(wn_alpha));
    CHECK(wn_alpha == doctest::Approx(0.02));

    const ArmaParams rw(0, 0.95, 0.0, 1.0);
    CHECK(optimize_smoothing(rw, 250, 1, Approach::NA).smoothing >= 0.5);

    // grid argmin against exhaustive evaluation, ties toward smaller constant
    const ArmaParams q(0, -0.4, 0.3, 1.0);
    const auto opt = optimize_smoothing(q, 24, 2, Approach::OA, 0.05);
    double best_manual = 1e300;
    double best_alpha = 0.0;
    for (int i = 1; i <= 20; ++i) {
        const double a = (i == 20) ? 1.0 : i * 0.05;
        const double v = mse(MseQuery(q, 24, 2, a, Approach::OA)).mse;
        if (v < best_manual) {
            best_manual = v;
            best_alpha = a;
        }
    }
    CHECK(opt.smoothing == doctest::Approx(best_alpha));
    CHECK(opt.result.mse == doctest::Approx(best_manual));
}
