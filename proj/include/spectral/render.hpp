#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spectral/types.hpp"

namespace spectral {

/// CSV with header "freq_hz,psd", one row per bin, 9 significant digits,
/// LF line endings.
std::string psd_to_csv(const SpectralDensity& psd);

/// CSV matrix: header row "time_s" followed by the frequency axis, then one
/// row per frame (frame time, then that frame's values).
std::string grid_to_csv(const SpectrogramGrid& grid);

/// Binary PGM (P5), width = frames, height = frequency bins, maxval 255.
/// Row 0 is the highest frequency. pixel = round(255 * clamp((v - min_db) /
/// (max_db - min_db), 0, 1)), halves rounding away from zero.
/// Requires a dB grid and min_db < max_db.
std::vector<std::uint8_t> grid_to_pgm(const SpectrogramGrid& grid, double min_db,
                                      double max_db);

}  // namespace spectral
