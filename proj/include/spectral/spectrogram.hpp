#pragma once

#include <vector>

#include "spectral/types.hpp"
#include "spectral/welch.hpp"

namespace spectral {

/// Short-time power grid. Column j is the periodogram of segment j (same
/// scaling rules as welch_psd); times_s[j] is the segment center
/// (start_j + nperseg/2) / fs. Columns are computed by the OpenMP kernel and
/// written by index, so the output is independent of the thread count.
SpectrogramGrid spectrogram(const TimeSeries& ts, const AnalysisParams& params,
                            Detrend detrend = Detrend::constant);

/// Plain-loop reference the parallel kernel is checked against.
SpectrogramGrid spectrogram_serial(const TimeSeries& ts, const AnalysisParams& params,
                                   Detrend detrend = Detrend::constant);

/// value -> max(10*log10(value), floor_db); zeros clamp to floor_db.
/// Errors if the grid is already in dB or floor_db >= 0.
SpectrogramGrid to_db(const SpectrogramGrid& grid, double floor_db);

struct RidgePoint {
    double time_s = 0.0;
    double freq_hz = 0.0;
};

/// Frequency of the maximum-power bin per frame; ties break toward the
/// lower frequency.
std::vector<RidgePoint> ridge_track(const SpectrogramGrid& grid);

}  // namespace spectral
