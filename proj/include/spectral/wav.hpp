#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spectral/types.hpp"

namespace spectral {

enum class SampleFormat { pcm_int, ieee_float };

struct WavMetadata {
    std::uint32_t sample_rate_hz = 0;
    std::uint16_t channels = 0;
    std::uint16_t bits_per_sample = 0;
    SampleFormat sample_format = SampleFormat::pcm_int;
    std::size_t n_frames = 0;
};

/// Malformed or unsupported RIFF/WAVE input (CLI exit code 2). Carries the
/// byte offset of the offending chunk or field.
class WavError : public std::runtime_error {
public:
    WavError(const std::string& message, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

struct DecodedWav {
    TimeSeries signal;
    WavMetadata metadata;
};

/// Parses a RIFF/WAVE byte stream: PCM16 (format tag 1) and IEEE float32
/// (tag 3), little-endian, unknown chunks skipped with word alignment.
/// PCM16 samples map to [-1, 1) by division by 32768; multichannel input is
/// averaged to mono.
DecodedWav read_wav(std::span<const std::uint8_t> bytes);

/// Encodes mono PCM16: samples scaled by 32767 and rounded to nearest.
/// Samples outside [-1, 1] are an error; no silent clipping.
std::vector<std::uint8_t> write_wav(const TimeSeries& ts, unsigned bits_per_sample = 16);

DecodedWav read_wav_file(const std::string& path);
void write_wav_file(const TimeSeries& ts, const std::string& path);

}  // namespace spectral
