#include "spectral/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace spectral {

namespace {

void append_sci(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.8e", v);
    out += buf;
}

}  // namespace

std::string psd_to_csv(const SpectralDensity& psd) {
    std::string out = "freq_hz,psd\n";
    for (std::size_t i = 0; i < psd.freqs_hz.size(); ++i) {
        append_sci(out, psd.freqs_hz[i]);
        out += ',';
        append_sci(out, psd.power[i]);
        out += '\n';
    }
    return out;
}

std::string grid_to_csv(const SpectrogramGrid& grid) {
    if (grid.n_frames() == 0 || grid.n_freqs() == 0)
        throw ParamError("grid_to_csv: empty grid");

    std::string out = "time_s";
    for (double f : grid.freqs_hz) {
        out += ',';
        append_sci(out, f);
    }
    out += '\n';
    for (std::size_t t = 0; t < grid.n_frames(); ++t) {
        append_sci(out, grid.times_s[t]);
        for (std::size_t f = 0; f < grid.n_freqs(); ++f) {
            out += ',';
            append_sci(out, grid.at(f, t));
        }
        out += '\n';
    }
    return out;
}

std::vector<std::uint8_t> grid_to_pgm(const SpectrogramGrid& grid, double min_db,
                                      double max_db) {
    if (grid.unit != GridUnit::db)
        throw ParamError("grid_to_pgm: grid must be converted to dB first");
    if (!(min_db < max_db))
        throw ParamError("grid_to_pgm: min_db must be below max_db");
    if (grid.n_frames() == 0 || grid.n_freqs() == 0)
        throw ParamError("grid_to_pgm: empty grid");

    const std::size_t width = grid.n_frames();
    const std::size_t height = grid.n_freqs();
    char header[64];
    const int header_len = std::snprintf(header, sizeof header, "P5\n%zu %zu\n255\n",
                                         width, height);

    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(header_len) + width * height);
    out.insert(out.end(), header, header + header_len);

    const double span = max_db - min_db;
    for (std::size_t row = 0; row < height; ++row) {
        const std::size_t f = height - 1 - row;  // image top = highest frequency
        for (std::size_t t = 0; t < width; ++t) {
            const double x = std::clamp((grid.at(f, t) - min_db) / span, 0.0, 1.0);
            out.push_back(static_cast<std::uint8_t>(std::lround(255.0 * x)));
        }
    }
    return out;
}

}  // namespace spectral
