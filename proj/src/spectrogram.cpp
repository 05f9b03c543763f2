#include "spectral/spectrogram.hpp"

#include <cmath>

#include "segment_kernel.hpp"

namespace spectral {

namespace {

SpectrogramGrid grid_shell(const TimeSeries& ts, const AnalysisParams& params,
                           const std::vector<SegmentView>& segments) {
    SpectrogramGrid grid;
    grid.freqs_hz = detail::onesided_freqs(params.nperseg, ts.sample_rate_hz);
    grid.times_s.resize(segments.size());
    for (std::size_t j = 0; j < segments.size(); ++j)
        grid.times_s[j] = (static_cast<double>(segments[j].start_index) +
                           static_cast<double>(params.nperseg) / 2.0) /
                          ts.sample_rate_hz;
    grid.values.resize(grid.freqs_hz.size() * segments.size());
    grid.unit = GridUnit::power;
    return grid;
}

}  // namespace

SpectrogramGrid spectrogram(const TimeSeries& ts, const AnalysisParams& params,
                            Detrend detrend) {
    detail::validate_analysis(ts, params);
    const auto segments = segment_starts(ts.samples.size(), params.nperseg, params.noverlap);
    const WindowVector window = make_window(params.window, params.nperseg);
    const double norm = detail::periodogram_norm(window, ts.sample_rate_hz, params.scaling);
    const FftPlan plan(params.nperseg);

    SpectrogramGrid grid = grid_shell(ts, params, segments);
    const std::size_t bins = grid.n_freqs();

    // Columns are disjoint slices of the value buffer, written by index.
#pragma omp parallel
    {
        detail::SegmentScratch scratch;
#pragma omp for schedule(static)
        for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(segments.size()); ++j) {
            const SegmentView seg = segments[static_cast<std::size_t>(j)];
            detail::frame_periodogram(
                std::span<const double>(ts.samples.data() + seg.start_index, seg.length),
                window.coefficients, norm, detrend, plan, scratch,
                std::span<double>(grid.values.data() + static_cast<std::size_t>(j) * bins, bins));
        }
    }
    return grid;
}

SpectrogramGrid spectrogram_serial(const TimeSeries& ts, const AnalysisParams& params,
                                   Detrend detrend) {
    detail::validate_analysis(ts, params);
    const auto segments = segment_starts(ts.samples.size(), params.nperseg, params.noverlap);
    const WindowVector window = make_window(params.window, params.nperseg);
    const double norm = detail::periodogram_norm(window, ts.sample_rate_hz, params.scaling);
    const FftPlan plan(params.nperseg);

    SpectrogramGrid grid = grid_shell(ts, params, segments);
    const std::size_t bins = grid.n_freqs();

    detail::SegmentScratch scratch;
    for (std::size_t j = 0; j < segments.size(); ++j) {
        const SegmentView seg = segments[j];
        detail::frame_periodogram(
            std::span<const double>(ts.samples.data() + seg.start_index, seg.length),
            window.coefficients, norm, detrend, plan, scratch,
            std::span<double>(grid.values.data() + j * bins, bins));
    }
    return grid;
}

SpectrogramGrid to_db(const SpectrogramGrid& grid, double floor_db) {
    if (grid.unit == GridUnit::db)
        throw ParamError("to_db: grid is already in dB");
    if (!(floor_db < 0.0))
        throw ParamError("to_db: floor_db must be negative");

    SpectrogramGrid out = grid;
    out.unit = GridUnit::db;
    for (double& v : out.values)
        v = v > 0.0 ? std::max(10.0 * std::log10(v), floor_db) : floor_db;
    return out;
}

std::vector<RidgePoint> ridge_track(const SpectrogramGrid& grid) {
    std::vector<RidgePoint> ridge;
    if (grid.n_frames() == 0 || grid.n_freqs() == 0)
        return ridge;

    ridge.reserve(grid.n_frames());
    for (std::size_t t = 0; t < grid.n_frames(); ++t) {
        std::size_t best = 0;
        for (std::size_t f = 1; f < grid.n_freqs(); ++f)
            if (grid.at(f, t) > grid.at(best, t)) best = f;  // strict: ties keep the lower bin
        ridge.push_back({grid.times_s[t], grid.freqs_hz[best]});
    }
    return ridge;
}

}  // namespace spectral
