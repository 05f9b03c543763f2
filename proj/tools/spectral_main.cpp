// Command-line front door: synthesis, WAV inspection, FFT dumps, Welch PSDs
// and spectrograms.
//
// Exit codes: 0 success, 1 usage error, 2 I/O or file parse error,
// 3 parameter/precondition error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "spectral/fft.hpp"
#include "spectral/render.hpp"
#include "spectral/spectrogram.hpp"
#include "spectral/synth.hpp"
#include "spectral/types.hpp"
#include "spectral/wav.hpp"
#include "spectral/welch.hpp"

namespace {

using namespace spectral;

void write_file(const std::string& path, const void* data, std::size_t size) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path + " for writing");
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
    if (!out)
        throw std::runtime_error("write failed for " + path);
}

void write_file(const std::string& path, const std::string& text) {
    write_file(path, text.data(), text.size());
}

std::string extension_of(const std::string& path) {
    const std::size_t dot = path.rfind('.');
    if (dot == std::string::npos) return "";
    std::string ext = path.substr(dot + 1);
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext;
}

WindowKind parse_window(const std::string& name) {
    return name == "rect" ? WindowKind::rectangular : WindowKind::hann;
}

Scaling parse_scaling(const std::string& name) {
    return name == "spectrum" ? Scaling::spectrum : Scaling::density;
}

Detrend parse_detrend(const std::string& name) {
    return name == "none" ? Detrend::none : Detrend::constant;
}

SynthComponent parse_component(const std::string& text) {
    std::vector<double> fields;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string field =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            fields.push_back(std::stod(field, &used));
            if (used != field.size()) throw std::invalid_argument(field);
        } catch (const std::exception&) {
            throw ParamError("synth: bad component field '" + field + "' in '" + text + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (fields.size() < 2 || fields.size() > 3)
        throw ParamError("synth: component must be AMP,FREQ_HZ[,PHASE_RAD]: '" + text + "'");
    return {fields[0], fields[1], fields.size() == 3 ? fields[2] : 0.0};
}

struct SynthArgs {
    std::string kind;
    std::string out;
    double fs = 44100.0;
    double duration = 1.0;
    double gain = 1.0;
    double a0 = 0.0;
    double f0 = 0.0;
    bool f0_given = false;
    double rate = 9000.0;
    std::size_t harmonics = 9;
    std::vector<std::string> components;
};

void cmd_synth(const SynthArgs& a) {
    TimeSeries ts;
    if (a.kind == "cosine") {
        std::vector<SynthComponent> comps;
        comps.reserve(a.components.size());
        for (const std::string& c : a.components) comps.push_back(parse_component(c));
        ts = synth_cosine_sum(a.a0, comps, a.fs, a.duration);
    } else if (a.kind == "square") {
        ts = synth_square_partial_sum(a.f0_given ? a.f0 : 5.0, a.harmonics, a.fs, a.duration);
    } else {
        ts = synth_linear_chirp(a.f0_given ? a.f0 : 75.0, a.rate, a.fs, a.duration);
    }
    if (a.gain != 1.0)
        for (double& x : ts.samples) x *= a.gain;
    write_wav_file(ts, a.out);
}

void cmd_info(const std::string& in) {
    const DecodedWav wav = read_wav_file(in);
    const WavMetadata& m = wav.metadata;
    std::printf("sample_rate_hz: %u\n", m.sample_rate_hz);
    std::printf("channels: %u\n", m.channels);
    std::printf("bits_per_sample: %u\n", m.bits_per_sample);
    std::printf("sample_format: %s\n",
                m.sample_format == SampleFormat::pcm_int ? "pcm_int" : "ieee_float");
    std::printf("frames: %zu\n", m.n_frames);
    std::printf("duration_s: %.9g\n", duration_s(wav.signal));
}

void cmd_fft(const std::string& in, std::size_t start, std::size_t len,
             const std::string& out) {
    const DecodedWav wav = read_wav_file(in);
    const std::vector<double>& samples = wav.signal.samples;
    if (start >= samples.size())
        throw ParamError("fft: --start is past the end of the signal");
    const std::size_t n = len == 0 ? samples.size() - start : len;
    if (start + n > samples.size())
        throw ParamError("fft: --start/--len window extends past the end of the signal");

    std::vector<cplx> buf(samples.begin() + static_cast<std::ptrdiff_t>(start),
                          samples.begin() + static_cast<std::ptrdiff_t>(start + n));
    const ComplexSpectrum spec = fft(buf, wav.signal.sample_rate_hz);

    std::string csv = "bin,freq_hz,real,imag,magnitude\n";
    char line[160];
    for (std::size_t k = 0; k < spec.size(); ++k) {
        std::snprintf(line, sizeof line, "%zu,%.8e,%.8e,%.8e,%.8e\n", k, spec.freq_hz(k),
                      spec.bins[k].real(), spec.bins[k].imag(), std::abs(spec.bins[k]));
        csv += line;
    }
    write_file(out, csv);
}

struct AnalysisArgs {
    std::string in;
    std::string out;
    AnalysisParams params;
    std::string window = "hann";
    std::string scaling = "density";
    std::string detrend = "constant";
};

void cmd_psd(const AnalysisArgs& a) {
    const DecodedWav wav = read_wav_file(a.in);
    AnalysisParams params = a.params;
    params.window = parse_window(a.window);
    params.scaling = parse_scaling(a.scaling);
    const SpectralDensity psd = welch_psd(wav.signal, params, parse_detrend(a.detrend));
    write_file(a.out, psd_to_csv(psd));
}

struct SpecArgs : AnalysisArgs {
    std::string format;  // inferred from the extension when empty
    bool db = false;
    double floor_db = -120.0;
    double min_db = 0.0;
    double max_db = 0.0;
    bool min_db_given = false;
    bool max_db_given = false;
};

void cmd_spec(const SpecArgs& a) {
    const DecodedWav wav = read_wav_file(a.in);
    AnalysisParams params = a.params;
    params.window = parse_window(a.window);
    params.scaling = parse_scaling(a.scaling);
    const SpectrogramGrid grid = spectrogram(wav.signal, params, parse_detrend(a.detrend));

    std::string format = a.format.empty() ? extension_of(a.out) : a.format;
    if (format != "csv" && format != "pgm")
        throw ParamError("spec: cannot infer output format from '" + a.out +
                         "'; pass --format csv|pgm");

    if (format == "pgm") {
        const SpectrogramGrid db = to_db(grid, a.floor_db);
        double max_db = a.max_db;
        if (!a.max_db_given) {
            max_db = a.floor_db;
            for (double v : db.values) max_db = std::max(max_db, v);
        }
        const double min_db = a.min_db_given ? a.min_db : max_db - 80.0;
        const std::vector<std::uint8_t> pgm = grid_to_pgm(db, min_db, max_db);
        write_file(a.out, pgm.data(), pgm.size());
    } else {
        const std::string csv = grid_to_csv(a.db ? to_db(grid, a.floor_db) : grid);
        write_file(a.out, csv);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral analysis toolkit: signal synthesis, FFT, Welch PSD, spectrogram"};
    app.require_subcommand(1);

    // info
    std::string info_in;
    CLI::App* info = app.add_subcommand("info", "Print WAV metadata");
    info->add_option("wav", info_in, "input WAV file")->required();
    info->callback([&] { cmd_info(info_in); });

    // synth
    SynthArgs sa;
    CLI::App* synth = app.add_subcommand("synth", "Synthesize a test signal to WAV");
    synth->add_option("--kind", sa.kind, "signal kind")
        ->required()
        ->check(CLI::IsMember({"cosine", "square", "chirp"}));
    synth->add_option("--fs", sa.fs, "sample rate in Hz")->capture_default_str();
    synth->add_option("--duration", sa.duration, "duration in seconds")->capture_default_str();
    synth->add_option("--out", sa.out, "output WAV path")->required();
    synth->add_option("--gain", sa.gain, "scale samples before writing")->capture_default_str();
    synth->add_option("--a0", sa.a0, "cosine: constant offset")->capture_default_str();
    synth->add_option("--component", sa.components,
                      "cosine: AMP,FREQ_HZ[,PHASE_RAD] (repeatable)");
    CLI::Option* f0_opt =
        synth->add_option("--f0", sa.f0, "square/chirp: base frequency (default 5 square, 75 chirp)");
    synth->add_option("--rate", sa.rate, "chirp: sweep rate in Hz/s")->capture_default_str();
    synth->add_option("--harmonics", sa.harmonics, "square: number of odd harmonics")
        ->capture_default_str();
    synth->callback([&] {
        sa.f0_given = f0_opt->count() > 0;
        cmd_synth(sa);
    });

    // fft
    std::string fft_in, fft_out;
    std::size_t fft_start = 0, fft_len = 0;
    CLI::App* fft_cmd = app.add_subcommand("fft", "Full DFT of a signal as CSV");
    fft_cmd->add_option("--in", fft_in, "input WAV file")->required();
    fft_cmd->add_option("--start", fft_start, "first sample index")->capture_default_str();
    fft_cmd->add_option("--len", fft_len, "sample count (0 = to end)")->capture_default_str();
    fft_cmd->add_option("--out", fft_out, "output CSV path")->required();
    fft_cmd->callback([&] { cmd_fft(fft_in, fft_start, fft_len, fft_out); });

    auto add_analysis_options = [](CLI::App* cmd, AnalysisArgs& a, std::size_t noverlap) {
        a.params.noverlap = noverlap;
        cmd->add_option("--in", a.in, "input WAV file")->required();
        cmd->add_option("--nperseg", a.params.nperseg, "samples per segment")
            ->capture_default_str();
        cmd->add_option("--noverlap", a.params.noverlap, "samples shared between segments")
            ->capture_default_str();
        cmd->add_option("--window", a.window, "analysis window")
            ->check(CLI::IsMember({"hann", "rect"}))
            ->capture_default_str();
        cmd->add_option("--scaling", a.scaling, "PSD scaling")
            ->check(CLI::IsMember({"density", "spectrum"}))
            ->capture_default_str();
        cmd->add_option("--detrend", a.detrend, "per-segment detrend")
            ->check(CLI::IsMember({"none", "constant"}))
            ->capture_default_str();
    };

    // psd
    AnalysisArgs pa;
    CLI::App* psd = app.add_subcommand("psd", "Welch PSD as CSV");
    add_analysis_options(psd, pa, 0);
    psd->add_option("--out", pa.out, "output CSV path")->required();
    psd->callback([&] { cmd_psd(pa); });

    // spec
    SpecArgs ga;
    CLI::App* spec = app.add_subcommand("spec", "Spectrogram as CSV or PGM");
    add_analysis_options(spec, ga, 128);
    spec->add_option("--out", ga.out, "output path (.csv or .pgm)")->required();
    spec->add_option("--format", ga.format, "override format inferred from the extension")
        ->check(CLI::IsMember({"csv", "pgm"}));
    spec->add_flag("--db", ga.db, "emit CSV values in dB");
    spec->add_option("--floor-db", ga.floor_db, "clamp for the dB conversion")
        ->capture_default_str();
    CLI::Option* min_db_opt =
        spec->add_option("--min-db", ga.min_db, "PGM black point (default max-db - 80)");
    CLI::Option* max_db_opt =
        spec->add_option("--max-db", ga.max_db, "PGM white point (default grid maximum)");
    spec->callback([&] {
        ga.min_db_given = min_db_opt->count() > 0;
        ga.max_db_given = max_db_opt->count() > 0;
        cmd_spec(ga);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const ParamError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
