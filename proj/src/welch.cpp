#include "spectral/welch.hpp"

#include <cstddef>

#include "segment_kernel.hpp"

namespace spectral {

std::vector<SegmentView> segment_starts(std::size_t n_samples, std::size_t nperseg,
                                        std::size_t noverlap) {
    if (nperseg == 0)
        throw ParamError("segment_starts: nperseg must be >= 1");
    if (noverlap >= nperseg)
        throw ParamError("segment_starts: noverlap must be < nperseg");
    if (nperseg > n_samples)
        throw ParamError("segment_starts: signal shorter than segment");

    const std::size_t step = nperseg - noverlap;
    const std::size_t count = (n_samples - noverlap) / step;
    std::vector<SegmentView> segments;
    segments.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        segments.push_back({i * step, nperseg});
    return segments;
}

SpectralDensity periodogram(std::span<const double> frame, const WindowVector& w,
                            double sample_rate_hz, Scaling scaling) {
    if (frame.size() != w.size())
        throw ParamError("periodogram: frame and window lengths differ");
    if (frame.empty())
        throw ParamError("periodogram: empty frame");
    if (sample_rate_hz <= 0.0)
        throw ParamError("periodogram: sample rate must be positive");

    const FftPlan plan(frame.size());
    detail::SegmentScratch scratch;

    SpectralDensity psd;
    psd.freqs_hz = detail::onesided_freqs(frame.size(), sample_rate_hz);
    psd.power.resize(psd.freqs_hz.size());
    psd.scaling = scaling;
    psd.segment_count_used = 1;
    detail::frame_periodogram(frame, w.coefficients,
                              detail::periodogram_norm(w, sample_rate_hz, scaling),
                              Detrend::none, plan, scratch, psd.power);
    return psd;
}

namespace {

struct WelchSetup {
    std::vector<SegmentView> segments;
    WindowVector window;
    double norm = 0.0;
    std::size_t bins = 0;
};

WelchSetup welch_setup(const TimeSeries& ts, const AnalysisParams& params) {
    detail::validate_analysis(ts, params);
    WelchSetup s;
    s.segments = segment_starts(ts.samples.size(), params.nperseg, params.noverlap);
    s.window = make_window(params.window, params.nperseg);
    s.norm = detail::periodogram_norm(s.window, ts.sample_rate_hz, params.scaling);
    s.bins = detail::onesided_bins(params.nperseg);
    return s;
}

SpectralDensity assemble_psd(const TimeSeries& ts, const AnalysisParams& params,
                             const WelchSetup& s, std::vector<double> power) {
    SpectralDensity psd;
    psd.freqs_hz = detail::onesided_freqs(params.nperseg, ts.sample_rate_hz);
    psd.power = std::move(power);
    psd.scaling = params.scaling;
    psd.segment_count_used = s.segments.size();
    return psd;
}

}  // namespace

SpectralDensity welch_psd(const TimeSeries& ts, const AnalysisParams& params, Detrend detrend) {
    const WelchSetup s = welch_setup(ts, params);
    const FftPlan plan(params.nperseg);
    const std::size_t n_seg = s.segments.size();

    // Each segment writes its own row; the mean below runs in segment order,
    // so the PSD is identical for any thread count.
    std::vector<double> per_segment(n_seg * s.bins);
#pragma omp parallel
    {
        detail::SegmentScratch scratch;
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n_seg); ++i) {
            const SegmentView seg = s.segments[static_cast<std::size_t>(i)];
            detail::frame_periodogram(
                std::span<const double>(ts.samples.data() + seg.start_index, seg.length),
                s.window.coefficients, s.norm, detrend, plan, scratch,
                std::span<double>(per_segment.data() + static_cast<std::size_t>(i) * s.bins,
                                  s.bins));
        }
    }

    std::vector<double> power(s.bins);
    for (std::size_t k = 0; k < s.bins; ++k) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n_seg; ++i) acc += per_segment[i * s.bins + k];
        power[k] = acc / static_cast<double>(n_seg);
    }
    return assemble_psd(ts, params, s, std::move(power));
}

SpectralDensity welch_psd_serial(const TimeSeries& ts, const AnalysisParams& params,
                                 Detrend detrend) {
    const WelchSetup s = welch_setup(ts, params);
    const FftPlan plan(params.nperseg);

    detail::SegmentScratch scratch;
    std::vector<double> acc(s.bins, 0.0);
    std::vector<double> tmp(s.bins);
    for (const SegmentView seg : s.segments) {
        detail::frame_periodogram(
            std::span<const double>(ts.samples.data() + seg.start_index, seg.length),
            s.window.coefficients, s.norm, detrend, plan, scratch, tmp);
        for (std::size_t k = 0; k < s.bins; ++k) acc[k] += tmp[k];
    }
    for (double& p : acc) p /= static_cast<double>(s.segments.size());
    return assemble_psd(ts, params, s, std::move(acc));
}

}  // namespace spectral
