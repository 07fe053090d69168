#pragma once
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "cafnet/error.hpp"
#include "cafnet/io.hpp"

namespace cafnet {

constexpr int kSampleRate = 16000;
constexpr int kClipSeconds = 4;
constexpr int kClipSamples = kSampleRate * kClipSeconds;  // 64,000

struct AudioClip {
  std::vector<float> samples;
  int sample_rate = kSampleRate;
};

inline std::int16_t quantize_pcm16(float x) {
  const float c = std::clamp(x, -1.0f, 1.0f);
  const long v = std::lrintf(c * 32767.0f);
  return static_cast<std::int16_t>(std::clamp<long>(v, -32768, 32767));
}

// Linear-interpolation resampler. Output sample i sits at source position
// i * src/dst; emits every position up to and including the last source
// sample, so 8 kHz -> 16 kHz maps N frames to 2N-1 samples.
inline std::vector<float> resample_linear(const std::vector<float>& x, int src_rate,
                                          int dst_rate) {
  if (src_rate == dst_rate || x.size() < 2) return x;
  const double step = static_cast<double>(src_rate) / static_cast<double>(dst_rate);
  const std::size_t n_out =
      static_cast<std::size_t>(std::floor(static_cast<double>(x.size() - 1) / step)) + 1;
  std::vector<float> out(n_out);
  for (std::size_t i = 0; i < n_out; ++i) {
    const double t = static_cast<double>(i) * step;
    const auto i0 = static_cast<std::size_t>(t);
    const std::size_t i1 = std::min(i0 + 1, x.size() - 1);
    const double frac = t - static_cast<double>(i0);
    out[i] = static_cast<float>((1.0 - frac) * x[i0] + frac * x[i1]);
  }
  return out;
}

// Exactly 64,000 samples: zero-pad at the tail or truncate.
inline AudioClip pad_or_trim(const AudioClip& clip) {
  if (clip.samples.empty()) throw std::invalid_argument("pad_or_trim: empty clip");
  AudioClip out;
  out.sample_rate = clip.sample_rate;
  out.samples = clip.samples;
  out.samples.resize(kClipSamples, 0.0f);
  return out;
}

// RIFF/WAVE PCM16 reader, 1-2 channels, any rate. Channels are averaged to
// mono, then resampled to 16 kHz; amplitudes scaled by 1/32768.
inline AudioClip load_wav(const std::string& path) {
  const std::vector<char> raw = read_file(path);
  ByteReader r(raw);
  if (raw.size() < 12 || r.str(4) != "RIFF") throw IoError("not a RIFF file: " + path);
  r.u32();  // chunk size
  if (r.str(4) != "WAVE") throw IoError("not a WAVE file: " + path);

  bool have_fmt = false;
  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  std::vector<std::int16_t> pcm;

  while (r.remaining() >= 8) {
    const std::string id = r.str(4);
    const std::uint32_t size = r.u32();
    if (id == "fmt ") {
      if (size < 16) throw IoError("malformed fmt chunk: " + path);
      format = r.u16();
      channels = r.u16();
      rate = r.u32();
      r.u32();  // byte rate
      r.u16();  // block align
      bits = r.u16();
      if (size > 16) r.skip(size - 16);
      have_fmt = true;
    } else if (id == "data") {
      if (!have_fmt) throw IoError("data chunk before fmt: " + path);
      if (format != 1 || bits != 16) throw IoError("unsupported encoding (want PCM16): " + path);
      pcm.resize(size / 2);
      r.i16_array(pcm.data(), pcm.size());
      if (size % 2) r.skip(1);
    } else {
      r.skip(std::min<std::size_t>(size + (size % 2), r.remaining()));
    }
  }
  if (!have_fmt) throw IoError("missing fmt chunk: " + path);
  if (channels < 1 || channels > 2) throw IoError("unsupported channel count: " + path);
  if (rate == 0) throw IoError("bad sample rate: " + path);
  if (pcm.empty()) throw IoError("zero-length audio: " + path);

  std::vector<float> mono(pcm.size() / channels);
  if (mono.empty()) throw IoError("zero-length audio: " + path);
  for (std::size_t i = 0; i < mono.size(); ++i) {
    float acc = 0.0f;
    for (int c = 0; c < channels; ++c) acc += static_cast<float>(pcm[i * channels + c]);
    mono[i] = acc / (32768.0f * static_cast<float>(channels));
  }

  AudioClip clip;
  clip.sample_rate = kSampleRate;
  clip.samples = resample_linear(mono, static_cast<int>(rate), kSampleRate);
  return clip;
}

// PCM16 little-endian, mono, 16 kHz; written atomically.
inline void write_wav(const std::string& path, const AudioClip& clip) {
  std::vector<std::int16_t> pcm(clip.samples.size());
  for (std::size_t i = 0; i < pcm.size(); ++i) pcm[i] = quantize_pcm16(clip.samples[i]);

  ByteWriter w;
  const auto data_bytes = static_cast<std::uint32_t>(pcm.size() * 2);
  w.str("RIFF");
  w.u32(36 + data_bytes);
  w.str("WAVE");
  w.str("fmt ");
  w.u32(16);
  w.u16(1);  // PCM
  w.u16(1);  // mono
  w.u32(kSampleRate);
  w.u32(kSampleRate * 2);
  w.u16(2);
  w.u16(16);
  w.str("data");
  w.u32(data_bytes);
  w.i16_array(pcm.data(), pcm.size());
  atomic_write_file(path, w.data());
}

}  // namespace cafnet
