#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spectral/render.hpp"

using namespace spectral;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

SpectrogramGrid small_grid(std::size_t n_freqs, std::size_t n_frames) {
    SpectrogramGrid grid;
    grid.freqs_hz.resize(n_freqs);
    for (std::size_t f = 0; f < n_freqs; ++f) grid.freqs_hz[f] = 10.0 * double(f);
    grid.times_s.resize(n_frames);
    for (std::size_t t = 0; t < n_frames; ++t) grid.times_s[t] = 0.1 * double(t);
    grid.values.assign(n_freqs * n_frames, 0.0);
    return grid;
}

}  // namespace

TEST_CASE("psd csv layout") {
    SpectralDensity psd;
    psd.freqs_hz = {0.0, 10.0, 20.0};
    psd.power = {1.5, 2.5e-7, 3.25e4};
    const std::string csv = psd_to_csv(psd);

    CHECK(csv.find("\r") == std::string::npos);
    const auto lines = split_lines(csv);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "freq_hz,psd");

    double prev_freq = -1.0;
    for (std::size_t i = 0; i < 3; ++i) {
        double freq = 0.0, power = 0.0;
        REQUIRE(std::sscanf(lines[i + 1].c_str(), "%lf,%lf", &freq, &power) == 2);
        CHECK(freq > prev_freq);
        prev_freq = freq;
        CHECK(freq == doctest::Approx(psd.freqs_hz[i]).epsilon(1e-8));
        CHECK(power == doctest::Approx(psd.power[i]).epsilon(1e-8));
    }
}

TEST_CASE("grid csv dimensions match the frame x bin layout") {
    SpectrogramGrid grid = small_grid(129, 19);
    const auto lines = split_lines(grid_to_csv(grid));
    REQUIRE(lines.size() == 20);
    for (const std::string& line : lines) {
        const std::size_t commas =
            static_cast<std::size_t>(std::count(line.begin(), line.end(), ','));
        CHECK(commas + 1 == 130);
    }
}

TEST_CASE("grid csv round-trips its values") {
    SpectrogramGrid grid = small_grid(3, 2);
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> dist(1e-9, 1e3);
    for (double& v : grid.values) v = dist(rng);

    const auto lines = split_lines(grid_to_csv(grid));
    REQUIRE(lines.size() == 3);
    for (std::size_t t = 0; t < 2; ++t) {
        std::istringstream row(lines[t + 1]);
        std::string field;
        REQUIRE(std::getline(row, field, ','));
        CHECK(std::stod(field) == doctest::Approx(grid.times_s[t]).epsilon(1e-8));
        for (std::size_t f = 0; f < 3; ++f) {
            REQUIRE(std::getline(row, field, ','));
            CHECK(std::stod(field) == doctest::Approx(grid.at(f, t)).epsilon(1e-8));
        }
    }
}

TEST_CASE("grid csv rejects an empty grid") {
    CHECK_THROWS_AS(grid_to_csv(SpectrogramGrid{}), ParamError);
}

TEST_CASE("pgm saturation and floor") {
    SpectrogramGrid grid = small_grid(4, 3);
    grid.unit = GridUnit::db;

    grid.values.assign(grid.values.size(), -10.0);
    auto white = grid_to_pgm(grid, -90.0, -10.0);
    const std::string header = "P5\n3 4\n255\n";
    REQUIRE(white.size() == header.size() + 12);
    CHECK(std::string(white.begin(), white.begin() + header.size()) == header);
    for (std::size_t i = header.size(); i < white.size(); ++i) CHECK(white[i] == 255);

    grid.values.assign(grid.values.size(), -90.0);
    auto black = grid_to_pgm(grid, -90.0, -10.0);
    for (std::size_t i = header.size(); i < black.size(); ++i) CHECK(black[i] == 0);
}

TEST_CASE("pgm maps values per the fixed formula, high frequencies on top") {
    const double min_db = -80.0, max_db = 0.0, mid_db = -40.0;
    SpectrogramGrid grid = small_grid(2, 2);
    grid.unit = GridUnit::db;
    // highest-frequency row carries {min, max}; lowest carries {mid, mid}
    grid.at(1, 0) = min_db;
    grid.at(1, 1) = max_db;
    grid.at(0, 0) = mid_db;
    grid.at(0, 1) = mid_db;

    const auto pgm = grid_to_pgm(grid, min_db, max_db);
    const std::string header = "P5\n2 2\n255\n";
    REQUIRE(pgm.size() == header.size() + 4);
    CHECK(pgm[header.size() + 0] == 0);      // top-left: min
    CHECK(pgm[header.size() + 1] == 255);    // top-right: max
    CHECK(pgm[header.size() + 2] == 128);    // 127.5 rounds away from zero
    CHECK(pgm[header.size() + 3] == 128);
}

TEST_CASE("pgm mapping is monotone and clamps out-of-range values") {
    SpectrogramGrid grid = small_grid(1, 64);
    grid.unit = GridUnit::db;
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> dist(-140.0, 20.0);
    for (double& v : grid.values) v = dist(rng);

    const auto pgm = grid_to_pgm(grid, -120.0, 0.0);
    const std::size_t header_len = pgm.size() - 64;
    for (std::size_t a = 0; a < 64; ++a)
        for (std::size_t b = 0; b < 64; ++b)
            if (grid.values[a] <= grid.values[b])
                CHECK(pgm[header_len + a] <= pgm[header_len + b]);
}

TEST_CASE("pgm rejects bad input") {
    SpectrogramGrid power_grid = small_grid(2, 2);
    CHECK_THROWS_AS(grid_to_pgm(power_grid, -80.0, 0.0), ParamError);

    SpectrogramGrid db_grid = small_grid(2, 2);
    db_grid.unit = GridUnit::db;
    CHECK_THROWS_AS(grid_to_pgm(db_grid, 0.0, 0.0), ParamError);
    CHECK_THROWS_AS(grid_to_pgm(db_grid, 0.0, -10.0), ParamError);

    SpectrogramGrid empty;
    empty.unit = GridUnit::db;
    CHECK_THROWS_AS(grid_to_pgm(empty, -80.0, 0.0), ParamError);
}
