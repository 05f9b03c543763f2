#pragma once

#include <cstddef>
#include <span>

#include "spectral/types.hpp"

namespace spectral {

/// One cosine term: amplitude * cos(2*pi*freq_hz*t + phase_rad).
struct SynthComponent {
    double amplitude = 0.0;
    double freq_hz = 0.0;
    double phase_rad = 0.0;
};

/// samples[n] = a0 + sum_k A_k * cos(2*pi*f_k*(n/fs) + phi_k).
TimeSeries synth_cosine_sum(double a0, std::span<const SynthComponent> components,
                            double fs_hz, double duration_s);

/// Fourier partial sum of a +-1 square wave (odd harmonics only):
/// sum_{m=1..H} 4/(pi*(2m-1)) * sin(2*pi*(2m-1)*f0*t).
/// Errors if the highest harmonic reaches the Nyquist frequency.
TimeSeries synth_square_partial_sum(double f0_hz, std::size_t n_harmonics,
                                    double fs_hz, double duration_s);

/// cos(2*pi*f0*t + pi*rate*t^2); instantaneous frequency f0 + rate*t.
/// Errors if the sweep reaches the Nyquist frequency.
TimeSeries synth_linear_chirp(double f0_hz, double rate_hz_per_s,
                              double fs_hz, double duration_s);

}  // namespace spectral
