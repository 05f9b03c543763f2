// Per-segment periodogram kernel shared by the Welch and spectrogram paths.
// Internal to the library.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spectral/fft.hpp"
#include "spectral/types.hpp"
#include "spectral/welch.hpp"
#include "spectral/window.hpp"

namespace spectral::detail {

inline std::size_t onesided_bins(std::size_t n) { return n / 2 + 1; }

inline std::vector<double> onesided_freqs(std::size_t n, double fs_hz) {
    std::vector<double> freqs(onesided_bins(n));
    for (std::size_t k = 0; k < freqs.size(); ++k)
        freqs[k] = static_cast<double>(k) * fs_hz / static_cast<double>(n);
    return freqs;
}

inline double periodogram_norm(const WindowVector& w, double fs_hz, Scaling scaling) {
    if (scaling == Scaling::density) return fs_hz * window_power_sum(w);
    const double coherent = window_coherent_sum(w);
    return coherent * coherent;
}

inline void validate_analysis(const TimeSeries& ts, const AnalysisParams& p) {
    if (ts.sample_rate_hz <= 0.0)
        throw ParamError("analysis: sample rate must be positive");
    if (ts.samples.empty())
        throw ParamError("analysis: empty signal");
    if (p.nperseg == 0)
        throw ParamError("analysis: nperseg must be >= 1");
    if (p.noverlap >= p.nperseg)
        throw ParamError("analysis: noverlap must be < nperseg");
}

struct SegmentScratch {
    std::vector<cplx> buf;
    std::vector<cplx> spec;
    FftPlan::Workspace ws;
};

// Windowed one-sided periodogram of one frame into out[0 .. n/2]. Bins
// 1..ceil(n/2)-1 are doubled; DC and (for even n) Nyquist are not.
inline void frame_periodogram(std::span<const double> frame, std::span<const double> window,
                              double norm, Detrend detrend, const FftPlan& plan,
                              SegmentScratch& scratch, std::span<double> out) {
    const std::size_t n = frame.size();
    double mean = 0.0;
    if (detrend == Detrend::constant) {
        for (double x : frame) mean += x;
        mean /= static_cast<double>(n);
    }

    scratch.buf.resize(n);
    for (std::size_t j = 0; j < n; ++j)
        scratch.buf[j] = cplx((frame[j] - mean) * window[j], 0.0);
    scratch.spec.resize(n);
    plan.forward(scratch.buf, scratch.spec, scratch.ws);

    const std::size_t bins = onesided_bins(n);
    const std::size_t first_undoubled = (n + 1) / 2;  // ceil(n/2)
    for (std::size_t k = 0; k < bins; ++k) {
        double p = std::norm(scratch.spec[k]) / norm;
        if (k >= 1 && k < first_undoubled) p *= 2.0;
        out[k] = p;
    }
}

}  // namespace spectral::detail
