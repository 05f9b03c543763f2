#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "spectral/types.hpp"

using namespace spectral;

namespace {

TimeSeries random_signal(std::size_t n, double fs, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    TimeSeries ts{std::vector<double>(n), fs};
    for (double& x : ts.samples) x = dist(rng);
    return ts;
}

}  // namespace

TEST_CASE("duration is sample count over rate") {
    CHECK(duration_s({std::vector<double>(88200), 44100.0}) == 2.0);
    CHECK(duration_s({std::vector<double>(192000), 96000.0}) == 2.0);
    CHECK(duration_s({std::vector<double>(1), 1.0}) == 1.0);
}

TEST_CASE("duration rejects a non-positive sample rate") {
    CHECK_THROWS_AS(duration_s({std::vector<double>(10), 0.0}), ParamError);
    CHECK_THROWS_AS(duration_s({std::vector<double>(10), -44100.0}), ParamError);
}

TEST_CASE("mean power basics") {
    CHECK(mean_power({std::vector<double>(64, 0.0), 100.0}) == 0.0);
    CHECK(mean_power({std::vector<double>(17, 1.0), 100.0}) == 1.0);
}

TEST_CASE("mean power of a full-period cosine is one half") {
    const std::size_t n = 8;
    TimeSeries ts{std::vector<double>(n), 8.0};
    for (std::size_t i = 0; i < n; ++i)
        ts.samples[i] = std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / double(n));

    // independent direct summation
    double expected = 0.0;
    for (std::size_t i = 0; i < n; ++i) expected += ts.samples[i] * ts.samples[i];
    expected /= double(n);

    CHECK(mean_power(ts) == doctest::Approx(expected).epsilon(1e-15));
    CHECK(mean_power(ts) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("mean power rejects an empty signal") {
    CHECK_THROWS_AS(mean_power({{}, 44100.0}), ParamError);
}

TEST_CASE("duration and mean power survive concatenate-then-split") {
    const TimeSeries ts = random_signal(1000, 250.0, 42);

    TimeSeries front{std::vector<double>(ts.samples.begin(), ts.samples.begin() + 400),
                     ts.sample_rate_hz};
    TimeSeries back{std::vector<double>(ts.samples.begin() + 400, ts.samples.end()),
                    ts.sample_rate_hz};

    CHECK(duration_s(front) + duration_s(back) == doctest::Approx(duration_s(ts)).epsilon(1e-15));

    const double recombined =
        (mean_power(front) * 400.0 + mean_power(back) * 600.0) / 1000.0;
    CHECK(recombined == doctest::Approx(mean_power(ts)).epsilon(1e-12));
}

TEST_CASE("mean power scales quadratically") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> alpha_dist(-3.0, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
        TimeSeries ts = random_signal(257, 1000.0, 100 + static_cast<std::uint64_t>(trial));
        const double alpha = alpha_dist(rng);
        const double base = mean_power(ts);
        for (double& x : ts.samples) x *= alpha;
        CHECK(mean_power(ts) == doctest::Approx(alpha * alpha * base).epsilon(1e-12));
    }
}
