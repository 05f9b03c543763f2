#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spectral/types.hpp"

namespace spectral {

enum class FftStrategy { radix2, bluestein, naive };

/// Per-length transform plan with precomputed twiddle factors and
/// bit-reversal permutation. Immutable after construction; a single plan may
/// execute concurrently from multiple threads as long as each thread uses its
/// own Workspace.
class FftPlan {
public:
    /// Scratch buffers reused across executions. One per thread.
    struct Workspace {
        std::vector<cplx> conv;
        std::vector<cplx> tmp;
    };

    /// Picks radix-2 for power-of-two lengths, Bluestein otherwise.
    explicit FftPlan(std::size_t n);

    /// Forces a strategy; radix-2 requires a power-of-two length.
    FftPlan(std::size_t n, FftStrategy strategy);

    std::size_t size() const { return n_; }
    FftStrategy strategy() const { return strategy_; }

    /// Unnormalized forward DFT: out[k] = sum_n in[n] * exp(-i*2*pi*k*n/N).
    void forward(std::span<const cplx> in, std::span<cplx> out) const;
    void forward(std::span<const cplx> in, std::span<cplx> out, Workspace& ws) const;

    /// Inverse DFT with the 1/N normalization.
    void inverse(std::span<const cplx> in, std::span<cplx> out) const;
    void inverse(std::span<const cplx> in, std::span<cplx> out, Workspace& ws) const;

private:
    void check_length(std::size_t in, std::size_t out) const;
    void radix2_inplace(std::span<cplx> buf) const;
    void forward_bluestein(std::span<const cplx> in, std::span<cplx> out, Workspace& ws) const;

    std::size_t n_ = 0;
    FftStrategy strategy_ = FftStrategy::radix2;
    std::size_t core_len_ = 0;              // power-of-two length of the butterfly core
    std::vector<std::size_t> bit_reverse_;  // permutation for the core
    std::vector<cplx> twiddle_;             // exp(-i*2*pi*j/core_len), j < core_len/2
    std::vector<cplx> chirp_;               // exp(-i*pi*k^2/n), Bluestein only
    std::vector<cplx> chirp_spectrum_;      // core-length DFT of the padded conjugate chirp
};

/// Brute-force O(N^2) DFT with reference semantics; the oracle the fast
/// paths are tested against.
ComplexSpectrum dft_naive(std::span<const cplx> x, double sample_rate_hz = 1.0);
ComplexSpectrum dft_naive(const TimeSeries& ts);

/// Fast forward DFT: radix-2 Cooley-Tukey for power-of-two lengths,
/// Bluestein's chirp-z (built on the same radix-2 core) otherwise.
ComplexSpectrum fft(std::span<const cplx> x, double sample_rate_hz = 1.0);
ComplexSpectrum fft(const TimeSeries& ts);

std::vector<cplx> ifft(const ComplexSpectrum& spectrum);

/// One-sided frequency axis: k * fs / n for k = 0..floor(n/2). Requires n >= 2.
std::vector<double> rfft_freqs(std::size_t n, double sample_rate_hz);

}  // namespace spectral
