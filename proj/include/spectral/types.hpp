#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace spectral {

using cplx = std::complex<double>;

/// Violated precondition or invalid parameter value (CLI exit code 3).
class ParamError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Scaling { density, spectrum };
enum class WindowKind { hann, rectangular };
enum class WindowSymmetry { periodic, symmetric };
enum class GridUnit { power, db };

/// Uniformly sampled real-valued signal.
struct TimeSeries {
    std::vector<double> samples;
    double sample_rate_hz = 0.0;
};

double duration_s(const TimeSeries& ts);

/// (1/N) * sum of squared samples. Errors on an empty signal.
double mean_power(const TimeSeries& ts);

/// Complex DFT coefficients; bin k sits at k * sample_rate_hz / size().
struct ComplexSpectrum {
    std::vector<cplx> bins;
    double sample_rate_hz = 0.0;

    std::size_t size() const { return bins.size(); }
    double freq_hz(std::size_t k) const {
        return static_cast<double>(k) * sample_rate_hz / static_cast<double>(bins.size());
    }
};

/// One-sided power spectral density estimate.
struct SpectralDensity {
    std::vector<double> freqs_hz;
    std::vector<double> power;
    Scaling scaling = Scaling::density;
    std::size_t segment_count_used = 0;
};

/// Time x frequency power grid. Values are stored frame-contiguous:
/// element (f, t) lives at values[t * freqs_hz.size() + f].
struct SpectrogramGrid {
    std::vector<double> times_s;
    std::vector<double> freqs_hz;
    std::vector<double> values;
    GridUnit unit = GridUnit::power;

    std::size_t n_freqs() const { return freqs_hz.size(); }
    std::size_t n_frames() const { return times_s.size(); }
    double at(std::size_t f, std::size_t t) const { return values[t * freqs_hz.size() + f]; }
    double& at(std::size_t f, std::size_t t) { return values[t * freqs_hz.size() + f]; }
};

/// Segmentation and scaling settings shared by the PSD and spectrogram paths.
struct AnalysisParams {
    std::size_t nperseg = 256;
    std::size_t noverlap = 0;
    WindowKind window = WindowKind::hann;
    Scaling scaling = Scaling::density;
};

}  // namespace spectral
