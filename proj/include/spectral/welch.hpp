#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spectral/types.hpp"
#include "spectral/window.hpp"

namespace spectral {

enum class Detrend { none, constant };

struct SegmentView {
    std::size_t start_index = 0;
    std::size_t length = 0;
};

/// Segment layout for a signal of n_samples: starts step by nperseg - noverlap,
/// trailing samples that do not fill a segment are dropped.
/// Count = floor((n_samples - noverlap) / (nperseg - noverlap)).
std::vector<SegmentView> segment_starts(std::size_t n_samples, std::size_t nperseg,
                                        std::size_t noverlap);

/// One-sided periodogram of a single frame: |FFT(frame .* w)|^2 / norm with
/// interior bins doubled. norm = fs * sum(w^2) for density scaling (V^2/Hz),
/// (sum w)^2 for spectrum scaling (V^2).
SpectralDensity periodogram(std::span<const double> frame, const WindowVector& w,
                            double sample_rate_hz, Scaling scaling);

/// Averaged periodogram over all segments. Segments are processed by the
/// OpenMP kernel; the average is a sequential reduction in segment order, so
/// the result does not depend on the thread count.
SpectralDensity welch_psd(const TimeSeries& ts, const AnalysisParams& params,
                          Detrend detrend = Detrend::constant);

/// Plain-loop reference the parallel kernel is checked against.
SpectralDensity welch_psd_serial(const TimeSeries& ts, const AnalysisParams& params,
                                 Detrend detrend = Detrend::constant);

}  // namespace spectral
