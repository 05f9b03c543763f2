#include "spectral/wav.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>

namespace spectral {

WavError::WavError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " (byte offset " + std::to_string(offset) + ")"),
      offset_(offset) {}

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatIeeeFloat = 3;

std::uint16_t read_u16(std::span<const std::uint8_t> b, std::size_t pos) {
    return static_cast<std::uint16_t>(b[pos] | (b[pos + 1] << 8));
}

std::uint32_t read_u32(std::span<const std::uint8_t> b, std::size_t pos) {
    return static_cast<std::uint32_t>(b[pos]) | (static_cast<std::uint32_t>(b[pos + 1]) << 8) |
           (static_cast<std::uint32_t>(b[pos + 2]) << 16) |
           (static_cast<std::uint32_t>(b[pos + 3]) << 24);
}

bool tag_is(std::span<const std::uint8_t> b, std::size_t pos, const char* tag) {
    return std::memcmp(b.data() + pos, tag, 4) == 0;
}

struct FmtChunk {
    std::uint16_t format_tag = 0;
    std::uint16_t channels = 0;
    std::uint32_t sample_rate = 0;
    std::uint16_t bits_per_sample = 0;
};

FmtChunk parse_fmt(std::span<const std::uint8_t> b, std::size_t pos, std::uint32_t size) {
    if (size < 16)
        throw WavError("fmt chunk too short", pos);
    FmtChunk fmt;
    fmt.format_tag = read_u16(b, pos);
    fmt.channels = read_u16(b, pos + 2);
    fmt.sample_rate = read_u32(b, pos + 4);
    fmt.bits_per_sample = read_u16(b, pos + 14);

    if (fmt.format_tag != kFormatPcm && fmt.format_tag != kFormatIeeeFloat)
        throw WavError("unsupported format tag " + std::to_string(fmt.format_tag), pos);
    if (fmt.format_tag == kFormatPcm && fmt.bits_per_sample != 16)
        throw WavError("unsupported PCM bit depth " + std::to_string(fmt.bits_per_sample),
                       pos + 14);
    if (fmt.format_tag == kFormatIeeeFloat && fmt.bits_per_sample != 32)
        throw WavError("unsupported float bit depth " + std::to_string(fmt.bits_per_sample),
                       pos + 14);
    if (fmt.channels == 0)
        throw WavError("channel count must be >= 1", pos + 2);
    if (fmt.sample_rate == 0)
        throw WavError("sample rate must be positive", pos + 4);
    return fmt;
}

std::vector<double> decode_frames(std::span<const std::uint8_t> b, std::size_t pos,
                                  std::size_t n_frames, const FmtChunk& fmt) {
    std::vector<double> mono(n_frames);
    const double inv_channels = 1.0 / fmt.channels;
    std::size_t p = pos;
    for (std::size_t i = 0; i < n_frames; ++i) {
        double acc = 0.0;
        for (std::uint16_t c = 0; c < fmt.channels; ++c) {
            if (fmt.format_tag == kFormatPcm) {
                const auto raw = static_cast<std::int16_t>(read_u16(b, p));
                acc += static_cast<double>(raw) / 32768.0;
                p += 2;
            } else {
                acc += static_cast<double>(std::bit_cast<float>(read_u32(b, p)));
                p += 4;
            }
        }
        mono[i] = acc * inv_channels;
    }
    return mono;
}

}  // namespace

DecodedWav read_wav(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 4 || !tag_is(bytes, 0, "RIFF"))
        throw WavError("missing RIFF magic", 0);
    if (bytes.size() < 12 || !tag_is(bytes, 8, "WAVE"))
        throw WavError("missing WAVE form type", 8);

    FmtChunk fmt;
    bool have_fmt = false;
    std::size_t pos = 12;

    while (pos + 8 <= bytes.size()) {
        const std::size_t chunk_pos = pos;
        const std::uint32_t chunk_size = read_u32(bytes, pos + 4);
        const std::size_t payload = pos + 8;
        const bool is_data = tag_is(bytes, pos, "data");

        if (payload + chunk_size > bytes.size())
            throw WavError(is_data ? "truncated data chunk" : "truncated chunk", chunk_pos);

        if (tag_is(bytes, pos, "fmt ")) {
            fmt = parse_fmt(bytes, payload, chunk_size);
            have_fmt = true;
        } else if (is_data) {
            if (!have_fmt)
                throw WavError("data chunk before fmt chunk", chunk_pos);
            const std::size_t frame_bytes =
                static_cast<std::size_t>(fmt.channels) * (fmt.bits_per_sample / 8);
            if (chunk_size % frame_bytes != 0)
                throw WavError("data chunk size is not a whole number of frames", chunk_pos);
            const std::size_t n_frames = chunk_size / frame_bytes;

            DecodedWav result;
            result.signal.samples = decode_frames(bytes, payload, n_frames, fmt);
            result.signal.sample_rate_hz = static_cast<double>(fmt.sample_rate);
            result.metadata.sample_rate_hz = fmt.sample_rate;
            result.metadata.channels = fmt.channels;
            result.metadata.bits_per_sample = fmt.bits_per_sample;
            result.metadata.sample_format = fmt.format_tag == kFormatPcm
                                                ? SampleFormat::pcm_int
                                                : SampleFormat::ieee_float;
            result.metadata.n_frames = n_frames;
            return result;
        }
        // Unknown chunks (LIST, fact, ...) are skipped, padded to word boundary.
        pos = payload + chunk_size + (chunk_size & 1);
    }
    throw WavError(have_fmt ? "missing data chunk" : "missing fmt chunk", pos);
}

std::vector<std::uint8_t> write_wav(const TimeSeries& ts, unsigned bits_per_sample) {
    if (bits_per_sample != 16)
        throw ParamError("write_wav: only 16-bit PCM output is supported");
    if (ts.samples.empty())
        throw ParamError("write_wav: empty signal");
    const double sr = ts.sample_rate_hz;
    if (!(sr > 0.0) || sr != std::floor(sr) || sr > 4294967295.0)
        throw ParamError("write_wav: sample rate must be a positive integer");
    for (double x : ts.samples)
        if (!(x >= -1.0 && x <= 1.0))
            throw ParamError("write_wav: sample outside [-1, 1]; scale the signal first");

    const auto rate = static_cast<std::uint32_t>(sr);
    const auto data_size = static_cast<std::uint32_t>(ts.samples.size() * 2);
    std::vector<std::uint8_t> out;
    out.reserve(44 + data_size);

    auto push_u16 = [&out](std::uint16_t v) {
        out.push_back(static_cast<std::uint8_t>(v & 0xff));
        out.push_back(static_cast<std::uint8_t>(v >> 8));
    };
    auto push_u32 = [&out](std::uint32_t v) {
        for (int s = 0; s < 32; s += 8) out.push_back(static_cast<std::uint8_t>(v >> s));
    };
    auto push_tag = [&out](const char* tag) { out.insert(out.end(), tag, tag + 4); };

    push_tag("RIFF");
    push_u32(36 + data_size);
    push_tag("WAVE");
    push_tag("fmt ");
    push_u32(16);
    push_u16(kFormatPcm);
    push_u16(1);               // mono
    push_u32(rate);
    push_u32(rate * 2);        // byte rate
    push_u16(2);               // block align
    push_u16(16);
    push_tag("data");
    push_u32(data_size);
    for (double x : ts.samples)
        push_u16(static_cast<std::uint16_t>(static_cast<std::int16_t>(std::lround(x * 32767.0))));
    return out;
}

DecodedWav read_wav_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return read_wav(bytes);
}

void write_wav_file(const TimeSeries& ts, const std::string& path) {
    const std::vector<std::uint8_t> bytes = write_wav(ts);
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw std::runtime_error("write failed for " + path);
}

}  // namespace spectral
