#include "spectral/fft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace spectral {

namespace {

constexpr double tau = 2.0 * std::numbers::pi;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// Direct evaluation of X[k] = sum_n x[n] * exp(-i*2*pi*k*n/N). The twiddle
// table is indexed by (k*n) mod N, which keeps every angle in [0, 2*pi)
// without accumulating phase error at large N.
void naive_dft(std::span<const cplx> x, std::span<cplx> out) {
    const std::size_t n = x.size();
    std::vector<cplx> w(n);
    for (std::size_t j = 0; j < n; ++j)
        w[j] = std::polar(1.0, -tau * static_cast<double>(j) / static_cast<double>(n));
    for (std::size_t k = 0; k < n; ++k) {
        cplx acc = 0.0;
        for (std::size_t m = 0; m < n; ++m) acc += x[m] * w[(k * m) % n];
        out[k] = acc;
    }
}

}  // namespace

FftPlan::FftPlan(std::size_t n)
    : FftPlan(n, is_power_of_two(n) ? FftStrategy::radix2 : FftStrategy::bluestein) {}

FftPlan::FftPlan(std::size_t n, FftStrategy strategy) : n_(n), strategy_(strategy) {
    if (n == 0)
        throw ParamError("FftPlan: transform length must be >= 1");
    if (strategy == FftStrategy::radix2 && !is_power_of_two(n))
        throw ParamError("FftPlan: radix-2 strategy requires a power-of-two length");
    if (strategy == FftStrategy::naive)
        return;

    core_len_ = strategy == FftStrategy::radix2 ? n : next_power_of_two(2 * n - 1);

    // Bit-reversal permutation, built incrementally: each step advances j to
    // the reversal of i+1 by rippling the top unset bit.
    bit_reverse_.resize(core_len_);
    std::size_t j = 0;
    bit_reverse_[0] = 0;
    for (std::size_t i = 1; i < core_len_; ++i) {
        std::size_t bit = core_len_ >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j |= bit;
        bit_reverse_[i] = j;
    }

    twiddle_.resize(core_len_ / 2);
    for (std::size_t k = 0; k < twiddle_.size(); ++k)
        twiddle_[k] =
            std::polar(1.0, -tau * static_cast<double>(k) / static_cast<double>(core_len_));

    if (strategy == FftStrategy::bluestein) {
        // Chirp c[k] = exp(-i*pi*k^2/n). k^2 is reduced mod 2n before the
        // multiply by pi/n so the angle stays small and exact in double.
        chirp_.resize(n);
        const auto period = static_cast<std::uint64_t>(2 * n);
        for (std::size_t k = 0; k < n; ++k) {
            const std::uint64_t q = (static_cast<std::uint64_t>(k) * k) % period;
            chirp_[k] = std::polar(
                1.0, -std::numbers::pi * static_cast<double>(q) / static_cast<double>(n));
        }

        // Convolution kernel b[k] = conj(c[k]) laid out circularly, then
        // transformed once here and reused by every execution.
        chirp_spectrum_.assign(core_len_, cplx(0.0, 0.0));
        chirp_spectrum_[0] = std::conj(chirp_[0]);
        for (std::size_t k = 1; k < n; ++k)
            chirp_spectrum_[k] = chirp_spectrum_[core_len_ - k] = std::conj(chirp_[k]);
        radix2_inplace(chirp_spectrum_);
    }
}

void FftPlan::check_length(std::size_t in, std::size_t out) const {
    if (in != n_ || out != n_)
        throw ParamError("FftPlan: buffer length does not match the plan length");
}

void FftPlan::radix2_inplace(std::span<cplx> buf) const {
    const std::size_t m = buf.size();
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t r = bit_reverse_[i];
        if (i < r) std::swap(buf[i], buf[r]);
    }
    for (std::size_t len = 2; len <= m; len <<= 1) {
        const std::size_t half = len >> 1;
        const std::size_t stride = m / len;
        for (std::size_t block = 0; block < m; block += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const cplx even = buf[block + k];
                const cplx odd = buf[block + k + half] * twiddle_[k * stride];
                buf[block + k] = even + odd;
                buf[block + k + half] = even - odd;
            }
        }
    }
}

void FftPlan::forward_bluestein(std::span<const cplx> in, std::span<cplx> out,
                                Workspace& ws) const {
    // X[k] = c[k] * sum_n (x[n]*c[n]) * conj(c[k-n]); the sum is a circular
    // convolution of length core_len_, done with the radix-2 core.
    ws.conv.assign(core_len_, cplx(0.0, 0.0));
    for (std::size_t k = 0; k < n_; ++k) ws.conv[k] = in[k] * chirp_[k];
    radix2_inplace(ws.conv);
    for (std::size_t k = 0; k < core_len_; ++k) ws.conv[k] *= chirp_spectrum_[k];

    // Inverse core transform via conj(forward(conj(z)))/M.
    for (auto& v : ws.conv) v = std::conj(v);
    radix2_inplace(ws.conv);
    const double inv_m = 1.0 / static_cast<double>(core_len_);
    for (std::size_t k = 0; k < n_; ++k)
        out[k] = std::conj(ws.conv[k]) * inv_m * chirp_[k];
}

void FftPlan::forward(std::span<const cplx> in, std::span<cplx> out) const {
    Workspace ws;
    forward(in, out, ws);
}

void FftPlan::forward(std::span<const cplx> in, std::span<cplx> out, Workspace& ws) const {
    check_length(in.size(), out.size());
    switch (strategy_) {
        case FftStrategy::radix2:
            std::copy(in.begin(), in.end(), out.begin());
            radix2_inplace(out);
            break;
        case FftStrategy::bluestein:
            forward_bluestein(in, out, ws);
            break;
        case FftStrategy::naive:
            naive_dft(in, out);
            break;
    }
}

void FftPlan::inverse(std::span<const cplx> in, std::span<cplx> out) const {
    Workspace ws;
    inverse(in, out, ws);
}

void FftPlan::inverse(std::span<const cplx> in, std::span<cplx> out, Workspace& ws) const {
    check_length(in.size(), out.size());
    ws.tmp.resize(n_);
    for (std::size_t k = 0; k < n_; ++k) ws.tmp[k] = std::conj(in[k]);
    forward(ws.tmp, out, ws);
    const double inv_n = 1.0 / static_cast<double>(n_);
    for (std::size_t k = 0; k < n_; ++k) out[k] = std::conj(out[k]) * inv_n;
}

ComplexSpectrum dft_naive(std::span<const cplx> x, double sample_rate_hz) {
    if (x.empty())
        throw ParamError("dft_naive: empty input");
    ComplexSpectrum spectrum;
    spectrum.sample_rate_hz = sample_rate_hz;
    spectrum.bins.resize(x.size());
    naive_dft(x, spectrum.bins);
    return spectrum;
}

ComplexSpectrum dft_naive(const TimeSeries& ts) {
    std::vector<cplx> buf(ts.samples.begin(), ts.samples.end());
    return dft_naive(buf, ts.sample_rate_hz);
}

ComplexSpectrum fft(std::span<const cplx> x, double sample_rate_hz) {
    if (x.empty())
        throw ParamError("fft: empty input");
    ComplexSpectrum spectrum;
    spectrum.sample_rate_hz = sample_rate_hz;
    spectrum.bins.resize(x.size());
    FftPlan(x.size()).forward(x, spectrum.bins);
    return spectrum;
}

ComplexSpectrum fft(const TimeSeries& ts) {
    std::vector<cplx> buf(ts.samples.begin(), ts.samples.end());
    return fft(buf, ts.sample_rate_hz);
}

std::vector<cplx> ifft(const ComplexSpectrum& spectrum) {
    if (spectrum.bins.empty())
        throw ParamError("ifft: empty spectrum");
    std::vector<cplx> out(spectrum.bins.size());
    FftPlan(spectrum.bins.size()).inverse(spectrum.bins, out);
    return out;
}

std::vector<double> rfft_freqs(std::size_t n, double sample_rate_hz) {
    if (n < 2)
        throw ParamError("rfft_freqs: transform length must be >= 2");
    std::vector<double> freqs(n / 2 + 1);
    for (std::size_t k = 0; k < freqs.size(); ++k)
        freqs[k] = static_cast<double>(k) * sample_rate_hz / static_cast<double>(n);
    return freqs;
}

}  // namespace spectral
