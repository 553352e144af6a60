#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "tempagg/transforms.hpp"

using namespace tempagg;

namespace {
DemandSeries make(std::vector<double> v) { return DemandSeries{std::move(v), 0}; }
}  // namespace

TEST_CASE("non-overlapping aggregation") {
    CHECK(aggregate_non_overlapping(make({1, 2, 3, 4, 5, 6}), 2).values ==
          std::vector<double>{3, 7, 11});
    // oldest observation dropped when m does not divide N
    CHECK(aggregate_non_overlapping(make({1, 2, 3, 4, 5}), 2).values ==
          std::vector<double>{5, 9});
    CHECK(aggregate_non_overlapping(make({4, 1, 7}), 1).values ==
          std::vector<double>{4, 1, 7});
    CHECK_THROWS_AS(aggregate_non_overlapping(make({1, 2}), 3),
                    std::invalid_argument);
}

TEST_CASE("overlapping aggregation") {
    CHECK(aggregate_overlapping(make({1, 2, 3, 4, 5}), 2).values ==
          std::vector<double>{3, 5, 7, 9});
    CHECK(aggregate_overlapping(make({4, 1, 7}), 1).values ==
          std::vector<double>{4, 1, 7});
    CHECK(aggregate_overlapping(make({1, 1, 1, 1}), 3).values ==
          std::vector<double>{3, 3});
    CHECK_THROWS_AS(aggregate_overlapping(make({1}), 2), std::invalid_argument);
}

TEST_CASE("cumulative actual") {
    CHECK(cumulative_actual(make({1, 2, 3, 4}), 2, 2) == doctest::Approx(7));
    CHECK(cumulative_actual(make({5, 5, 5, 5}), 1, 3) == doctest::Approx(15));
    CHECK(cumulative_actual(make({1, 2, 3}), 1, 1) == doctest::Approx(2));
    CHECK_THROWS_AS(cumulative_actual(make({1, 2, 3}), 2, 2), std::out_of_range);
}

TEST_CASE("aggregation properties") {
    const auto series =
        make({3.5, -1.2, 0.7, 8.1, -4.4, 2.2, 5.0, 1.1, -0.6, 7.3, 2.9});
    const std::size_t n = series.size();
    for (int m = 1; m <= 5; ++m) {
        const auto noa = aggregate_non_overlapping(series, m);
        const auto oa = aggregate_overlapping(series, m);
        CHECK(noa.values.size() == n / m);
        CHECK(oa.values.size() == n - m + 1);

        // sum preservation over the covered suffix
        const std::size_t covered = (n / m) * m;
        const double raw_sum =
            std::accumulate(series.values.end() - covered, series.values.end(), 0.0);
        const double agg_sum =
            std::accumulate(noa.values.begin(), noa.values.end(), 0.0);
        CHECK(agg_sum == doctest::Approx(raw_sum).epsilon(1e-12));

        // adjacent overlapping buckets differ by newest-in minus oldest-out
        for (std::size_t j = 1; j < oa.values.size(); ++j) {
            CHECK(oa.values[j] - oa.values[j - 1] ==
                  doctest::Approx(series.values[j + m - 1] - series.values[j - 1])
                      .epsilon(1e-12));
        }

        // NOA is the end-aligned every-m-th subsequence of OA
        const std::size_t start = n - (n / m) * m;
        for (std::size_t b = 0; b < noa.values.size(); ++b) {
            CHECK(noa.values[b] ==
                  doctest::Approx(oa.values[start + b * m]).epsilon(1e-12));
        }
    }
}
