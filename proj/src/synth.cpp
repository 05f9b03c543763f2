#include "spectral/synth.hpp"

#include <cmath>
#include <numbers>

namespace spectral {

namespace {

constexpr double tau = 2.0 * std::numbers::pi;

std::size_t sample_count(double fs_hz, double duration_s) {
    if (fs_hz <= 0.0)
        throw ParamError("synth: sample rate must be positive");
    if (duration_s <= 0.0)
        throw ParamError("synth: duration must be positive");
    const long long n = std::llround(fs_hz * duration_s);
    if (n < 1)
        throw ParamError("synth: duration shorter than one sample period");
    return static_cast<std::size_t>(n);
}

}  // namespace

TimeSeries synth_cosine_sum(double a0, std::span<const SynthComponent> components,
                            double fs_hz, double duration_s) {
    const std::size_t n = sample_count(fs_hz, duration_s);
    for (const SynthComponent& c : components)
        if (c.freq_hz < 0.0)
            throw ParamError("synth: component frequency must be >= 0");

    TimeSeries ts{std::vector<double>(n), fs_hz};
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / fs_hz;
        double s = a0;
        for (const SynthComponent& c : components)
            s += c.amplitude * std::cos(tau * c.freq_hz * t + c.phase_rad);
        ts.samples[i] = s;
    }
    return ts;
}

TimeSeries synth_square_partial_sum(double f0_hz, std::size_t n_harmonics,
                                    double fs_hz, double duration_s) {
    if (f0_hz <= 0.0)
        throw ParamError("synth: fundamental frequency must be positive");
    if (n_harmonics < 1)
        throw ParamError("synth: need at least one harmonic");
    const double highest_hz = static_cast<double>(2 * n_harmonics - 1) * f0_hz;
    if (!(fs_hz > 2.0 * highest_hz))
        throw ParamError("synth: highest harmonic reaches the Nyquist frequency");

    const std::size_t n = sample_count(fs_hz, duration_s);
    TimeSeries ts{std::vector<double>(n), fs_hz};
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / fs_hz;
        double s = 0.0;
        for (std::size_t m = 1; m <= n_harmonics; ++m) {
            const double order = static_cast<double>(2 * m - 1);
            s += 4.0 / (std::numbers::pi * order) * std::sin(tau * order * f0_hz * t);
        }
        ts.samples[i] = s;
    }
    return ts;
}

TimeSeries synth_linear_chirp(double f0_hz, double rate_hz_per_s,
                              double fs_hz, double duration_s) {
    if (f0_hz < 0.0)
        throw ParamError("synth: chirp start frequency must be >= 0");
    const std::size_t n = sample_count(fs_hz, duration_s);
    const double end_hz = f0_hz + rate_hz_per_s * duration_s;
    if (!(fs_hz > 2.0 * std::max(f0_hz, end_hz)))
        throw ParamError("synth: chirp sweep reaches the Nyquist frequency");

    TimeSeries ts{std::vector<double>(n), fs_hz};
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / fs_hz;
        ts.samples[i] = std::cos(tau * f0_hz * t + std::numbers::pi * rate_hz_per_s * t * t);
    }
    return ts;
}

}  // namespace spectral
