#pragma once

#include <cstddef>
#include <vector>

#include "spectral/types.hpp"

namespace spectral {

struct WindowVector {
    std::vector<double> coefficients;
    WindowKind kind = WindowKind::rectangular;
    WindowSymmetry symmetry = WindowSymmetry::periodic;

    std::size_t size() const { return coefficients.size(); }
};

/// Periodic Hann: w[j] = 0.5 * (1 - cos(2*pi*j/n)).
/// Symmetric Hann: w[j] = 0.5 * (1 - cos(2*pi*j/(n-1))), endpoints zero.
/// Rectangular: all ones. Periodic is the right form for DFT analysis and
/// is the default everywhere in this library.
WindowVector make_window(WindowKind kind, std::size_t n,
                         WindowSymmetry symmetry = WindowSymmetry::periodic);

/// Sum of squared coefficients (the "density" normalizer). Exactly 3n/8 for
/// a periodic Hann of length n >= 3.
double window_power_sum(const WindowVector& w);

/// Plain coefficient sum (the "spectrum" normalizer). Exactly n/2 for a
/// periodic Hann of length n >= 2.
double window_coherent_sum(const WindowVector& w);

}  // namespace spectral
