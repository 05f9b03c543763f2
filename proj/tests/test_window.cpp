#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "spectral/fft.hpp"
#include "spectral/window.hpp"

using namespace spectral;

TEST_CASE("periodic hann of length 4") {
    const WindowVector w = make_window(WindowKind::hann, 4);
    REQUIRE(w.size() == 4);
    CHECK(w.coefficients[0] == 0.0);
    CHECK(w.coefficients[1] == 0.5);
    CHECK(w.coefficients[2] == 1.0);
    CHECK(w.coefficients[3] == 0.5);
}

TEST_CASE("symmetric hann of length 5") {
    const WindowVector w = make_window(WindowKind::hann, 5, WindowSymmetry::symmetric);
    REQUIRE(w.size() == 5);
    CHECK(w.coefficients[0] == 0.0);
    CHECK(w.coefficients[1] == 0.5);
    CHECK(w.coefficients[2] == 1.0);
    CHECK(w.coefficients[3] == 0.5);
    CHECK(w.coefficients[4] == 0.0);
}

TEST_CASE("rectangular window is all ones") {
    const WindowVector w = make_window(WindowKind::rectangular, 3);
    CHECK(w.coefficients == std::vector<double>{1.0, 1.0, 1.0});
}

TEST_CASE("window edge cases") {
    CHECK_THROWS_AS(make_window(WindowKind::hann, 0), ParamError);
    const WindowVector w = make_window(WindowKind::hann, 1, WindowSymmetry::symmetric);
    CHECK(w.coefficients == std::vector<double>{1.0});
}

TEST_CASE("coefficients stay in [0, 1]") {
    for (std::size_t n : {2u, 3u, 7u, 64u, 255u, 1000u}) {
        for (WindowSymmetry sym : {WindowSymmetry::periodic, WindowSymmetry::symmetric}) {
            const WindowVector w = make_window(WindowKind::hann, n, sym);
            for (double c : w.coefficients) {
                CHECK(c >= 0.0);
                CHECK(c <= 1.0);
            }
        }
    }
}

TEST_CASE("power sum identities") {
    CHECK(window_power_sum(make_window(WindowKind::rectangular, 37)) == 37.0);
    CHECK(window_power_sum(make_window(WindowKind::hann, 4)) == 1.5);
    for (std::size_t n : {3u, 4u, 8u, 100u, 256u, 999u, 1000u}) {
        const WindowVector w = make_window(WindowKind::hann, n);
        CHECK(window_power_sum(w) == 3.0 * double(n) / 8.0);
    }
}

TEST_CASE("coherent sum identities") {
    CHECK(window_coherent_sum(make_window(WindowKind::rectangular, 11)) == 11.0);
    CHECK(window_coherent_sum(make_window(WindowKind::hann, 4)) == 2.0);
    for (std::size_t n : {2u, 4u, 8u, 100u, 256u, 999u, 1000u}) {
        const WindowVector w = make_window(WindowKind::hann, n);
        CHECK(window_coherent_sum(w) == double(n) / 2.0);
    }
}

TEST_CASE("periodic hann is the prefix of the next symmetric hann") {
    for (std::size_t n : {2u, 5u, 16u, 101u, 256u}) {
        const WindowVector periodic = make_window(WindowKind::hann, n);
        const WindowVector symmetric =
            make_window(WindowKind::hann, n + 1, WindowSymmetry::symmetric);
        for (std::size_t j = 0; j < n; ++j)
            CHECK(periodic.coefficients[j] == symmetric.coefficients[j]);
    }
}

namespace {

// Squared spectrum magnitudes of a windowed cosine, via the naive DFT.
std::vector<double> windowed_tone_power(double bin, const WindowVector& w) {
    const std::size_t n = w.size();
    std::vector<cplx> frame(n);
    for (std::size_t i = 0; i < n; ++i)
        frame[i] = w.coefficients[i] *
                   std::cos(2.0 * std::numbers::pi * bin * double(i) / double(n));
    const ComplexSpectrum spec = dft_naive(frame);
    std::vector<double> power(n);
    for (std::size_t k = 0; k < n; ++k) power[k] = std::norm(spec.bins[k]);
    return power;
}

double worst_leakage(const std::vector<double>& power, std::size_t peak_bin) {
    double worst = 0.0;
    for (std::size_t k = 0; k <= power.size() / 2; ++k) {
        const std::size_t dist = k > peak_bin ? k - peak_bin : peak_bin - k;
        if (dist >= 2) worst = std::max(worst, power[k] / power[peak_bin]);
    }
    return worst;
}

}  // namespace

TEST_CASE("hann suppresses leakage, rectangular does not") {
    const std::size_t n = 64;
    const std::size_t peak = 8;
    const WindowVector hann = make_window(WindowKind::hann, n);
    const WindowVector rect = make_window(WindowKind::rectangular, n);

    // bin-centered tone through hann: everything beyond the mainlobe sits
    // below -31 dB of the peak
    const double hann_centered = worst_leakage(windowed_tone_power(double(peak), hann), peak);
    CHECK(hann_centered < std::pow(10.0, -31.0 / 10.0));

    // worst-case (half-bin offset) tone: rectangular leaks more than hann
    const double hann_offset = worst_leakage(windowed_tone_power(peak + 0.5, hann), peak);
    const double rect_offset = worst_leakage(windowed_tone_power(peak + 0.5, rect), peak);
    CHECK(rect_offset > hann_offset);
}
