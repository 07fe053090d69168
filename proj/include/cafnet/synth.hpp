#pragma once
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "cafnet/audio.hpp"
#include "cafnet/error.hpp"
#include "cafnet/fft.hpp"
#include "cafnet/rng.hpp"

namespace cafnet {

// Per-split sizes, class mix and per-clip parameter ranges for the
// synthetic corpus. Class ratios default to the 0.17/0.34/0.49 mix so the
// class-weighted loss is exercised on imbalanced data.
struct SynthesisConfig {
  int n_train = 1500;
  int n_val = 300;
  int n_test = 300;

  double ratio_real = 0.17;
  double ratio_fake = 0.34;
  double ratio_half = 0.49;

  // spliced-segment duration, jittered around 1 s
  double splice_min_s = 0.8;
  double splice_max_s = 1.2;

  // voice source
  double pitch_min_hz = 90.0;
  double pitch_max_hz = 300.0;
  double formant1_min_hz = 300.0, formant1_max_hz = 900.0;
  double formant2_min_hz = 1000.0, formant2_max_hz = 2200.0;
  double formant3_min_hz = 2300.0, formant3_max_hz = 3200.0;
  double syllable_min_hz = 3.0, syllable_max_hz = 6.0;
  double noise_min = 0.01, noise_max = 0.03;

  // synthesis artefacts injected by synth_fake
  double artefact_min = 0.5, artefact_max = 1.0;  // per-clip strength
  int quant_bits = 4;                             // magnitude levels = 2^bits
  double comb_base_hz = 6400.0;
  double comb_spacing_hz = 450.0;
  int comb_tones = 3;
  double comb_amp_min = 0.008, comb_amp_max = 0.04;

  std::uint64_t master_seed = 42;

  void validate() const {
    if (std::abs(ratio_real + ratio_fake + ratio_half - 1.0) > 1e-9)
      throw ConfigError("class ratios must sum to 1");
    if (ratio_real < 0 || ratio_fake < 0 || ratio_half < 0)
      throw ConfigError("class ratios must be non-negative");
    if (!(splice_min_s > 0.0 && splice_min_s <= splice_max_s && splice_max_s < 4.0))
      throw ConfigError("splice duration range must lie within (0, 4)");
    if (!(pitch_min_hz > 0 && pitch_min_hz <= pitch_max_hz))
      throw ConfigError("bad pitch range");
    if (!(artefact_min >= 0 && artefact_min <= artefact_max))
      throw ConfigError("bad artefact strength range");
    if (quant_bits < 1 || quant_bits > 16) throw ConfigError("quant_bits out of range");
    if (n_train < 0 || n_val < 0 || n_test < 0) throw ConfigError("negative split size");
    if (comb_tones < 1) throw ConfigError("comb_tones must be >= 1");
  }
};

namespace detail {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kHarmonicCapHz = 5000.0;
constexpr int kMaxHarmonics = 64;
constexpr int kAmpBlock = 64;  // samples per amplitude/f0 update

struct Voice {
  double f0_base;
  double vib_rate, vib_depth, vib_phase;
  double drift_rate, drift_depth, drift_phase;
  int n_formants;
  std::array<double, 3> formant_hz;
  std::array<double, 3> formant_gain;
  std::array<double, 3> formant_bw;
  double syllable_rate, syllable_phase;
  double noise_amp;
  std::array<double, kMaxHarmonics> harmonic_phase;
};

inline Voice draw_voice(Rng& rng, const SynthesisConfig& cfg) {
  Voice v;
  v.f0_base = rng.uniform(cfg.pitch_min_hz, cfg.pitch_max_hz);
  v.vib_rate = rng.uniform(2.0, 5.0);
  v.vib_depth = rng.uniform(0.01, 0.05);
  v.vib_phase = rng.uniform(0.0, kTwoPi);
  v.drift_rate = rng.uniform(0.1, 0.4);
  v.drift_depth = rng.uniform(0.02, 0.08);
  v.drift_phase = rng.uniform(0.0, kTwoPi);
  v.n_formants = static_cast<int>(rng.uniform_int(2, 3));
  v.formant_hz = {rng.uniform(cfg.formant1_min_hz, cfg.formant1_max_hz),
                  rng.uniform(cfg.formant2_min_hz, cfg.formant2_max_hz),
                  rng.uniform(cfg.formant3_min_hz, cfg.formant3_max_hz)};
  v.formant_gain = {rng.uniform(0.7, 1.0), rng.uniform(0.5, 0.9), rng.uniform(0.3, 0.7)};
  v.formant_bw = {rng.uniform(80.0, 160.0), rng.uniform(90.0, 180.0),
                  rng.uniform(100.0, 200.0)};
  v.syllable_rate = rng.uniform(cfg.syllable_min_hz, cfg.syllable_max_hz);
  v.syllable_phase = rng.uniform(0.0, kTwoPi);
  v.noise_amp = rng.uniform(cfg.noise_min, cfg.noise_max);
  for (auto& p : v.harmonic_phase) p = rng.uniform(0.0, kTwoPi);
  return v;
}

inline double formant_envelope(const Voice& v, double f) {
  double e = 0.15;  // valley floor
  for (int j = 0; j < v.n_formants; ++j) {
    const double d = f - v.formant_hz[j];
    const double bw2 = v.formant_bw[j] * v.formant_bw[j];
    e += v.formant_gain[j] * bw2 / (d * d + bw2);
  }
  const double tilt = 1.0 / (1.0 + (f / 1400.0) * (f / 1400.0));
  return e * tilt;
}

inline double f0_at(const Voice& v, double t) {
  return v.f0_base * (1.0 + v.vib_depth * std::sin(kTwoPi * v.vib_rate * t + v.vib_phase) +
                      v.drift_depth * std::sin(kTwoPi * v.drift_rate * t + v.drift_phase));
}

inline double envelope_at(const Voice& v, double t) {
  const double syl =
      0.5 - 0.5 * std::cos(kTwoPi * v.syllable_rate * t + v.syllable_phase);
  const double shaped = syl * std::sqrt(syl);  // sharpen syllable peaks
  const double attack = std::min(1.0, t / 0.03);
  return attack * (0.12 + 0.88 * shaped);
}

}  // namespace detail

// Deterministic pseudo-speech: harmonic source with slowly varying
// fundamental, formant-shaped harmonic amplitudes, syllabic amplitude
// modulation and a weak low-passed noise floor. Peak-normalised to 0.9.
inline AudioClip synth_real(std::uint64_t seed, const SynthesisConfig& cfg) {
  using namespace detail;
  Rng rng(seed_combine(seed, 0x7ea1u));
  const Voice v = draw_voice(rng, cfg);

  std::vector<double> x(kClipSamples, 0.0);
  const double dt = 1.0 / kSampleRate;

  // harmonic oscillators as complex rotors; amplitudes stepped per block
  std::array<std::complex<double>, kMaxHarmonics> osc;
  std::array<double, kMaxHarmonics> amp{}, amp_next{};
  for (int k = 0; k < kMaxHarmonics; ++k)
    osc[k] = std::polar(1.0, v.harmonic_phase[k]);

  bool first_block = true;
  for (int b0 = 0; b0 < kClipSamples; b0 += kAmpBlock) {
    const double t_mid = (b0 + kAmpBlock / 2) * dt;
    const double f0 = std::max(20.0, f0_at(v, t_mid));
    const int n_harm =
        std::min(kMaxHarmonics, static_cast<int>(kHarmonicCapHz / f0));
    std::array<std::complex<double>, kMaxHarmonics> rot;
    for (int k = 0; k < n_harm; ++k) {
      const double f = (k + 1) * f0;
      rot[k] = std::polar(1.0, kTwoPi * f * dt);
      amp_next[k] = formant_envelope(v, f);
      if (first_block) amp[k] = amp_next[k];
    }
    first_block = false;
    for (int i = 0; i < kAmpBlock; ++i) {
      const double frac = static_cast<double>(i) / kAmpBlock;
      double s = 0.0;
      for (int k = 0; k < n_harm; ++k) {
        osc[k] *= rot[k];
        s += (amp[k] + frac * (amp_next[k] - amp[k])) * osc[k].imag();
      }
      x[b0 + i] = s;
    }
    for (int k = 0; k < n_harm; ++k) amp[k] = amp_next[k];
  }

  // low-passed noise floor (two one-pole stages, ~900 Hz)
  const double alpha = std::exp(-kTwoPi * 900.0 / kSampleRate);
  double n1 = 0.0, n2 = 0.0;
  for (int i = 0; i < kClipSamples; ++i) {
    const double white = 2.0 * rng.uniform() - 1.0;
    n1 = alpha * n1 + (1.0 - alpha) * white;
    n2 = alpha * n2 + (1.0 - alpha) * n1;
    x[i] += v.noise_amp * 12.0 * n2;
  }

  double peak = 0.0;
  std::vector<float> out(kClipSamples);
  for (int i = 0; i < kClipSamples; ++i) {
    x[i] *= envelope_at(v, i * dt);
    peak = std::max(peak, std::abs(x[i]));
  }
  const double scale = peak > 0.0 ? 0.9 / peak : 0.0;
  for (int i = 0; i < kClipSamples; ++i) out[i] = static_cast<float>(x[i] * scale);
  return AudioClip{std::move(out), kSampleRate};
}

// synth_real plus injected synthesis artefacts: per-frame phase
// randomisation, spectral magnitude quantisation to 2^quant_bits levels and
// an additive high-band tone comb tracking the signal envelope. A drawn
// strength of zero returns the synth_real output bit for bit.
inline AudioClip synth_fake(std::uint64_t seed, const SynthesisConfig& cfg) {
  using namespace detail;
  AudioClip base = synth_real(seed, cfg);

  Rng art(seed_combine(seed, 0xfa8eu));
  const double strength = art.uniform(cfg.artefact_min, cfg.artefact_max);
  const double comb_amp = art.uniform(cfg.comb_amp_min, cfg.comb_amp_max);
  std::vector<double> tone_phase(cfg.comb_tones);
  for (auto& p : tone_phase) p = art.uniform(0.0, kTwoPi);
  if (strength == 0.0) return base;

  constexpr int kFrame = 512;
  static_assert(kClipSamples % kFrame == 0);
  const Fft fft(kFrame);
  const int levels = 1 << cfg.quant_bits;

  std::vector<double> x(base.samples.begin(), base.samples.end());
  std::vector<std::complex<double>> buf(kFrame);
  for (int f0 = 0; f0 < kClipSamples; f0 += kFrame) {
    for (int i = 0; i < kFrame; ++i) buf[i] = {x[f0 + i], 0.0};
    fft.forward(buf);
    double max_mag = 0.0;
    for (int k = 1; k < kFrame / 2; ++k) max_mag = std::max(max_mag, std::abs(buf[k]));
    const double qstep = max_mag > 0.0 ? max_mag / levels : 0.0;
    for (int k = 1; k < kFrame / 2; ++k) {
      const double mag = std::abs(buf[k]);
      const double ph = std::arg(buf[k]) + strength * art.uniform(-3.141592653589793, 3.141592653589793);
      double q = mag;
      if (qstep > 0.0) q = std::round(mag / qstep) * qstep;
      const double mixed = (1.0 - strength) * mag + strength * q;
      buf[k] = std::polar(mixed, ph);
      buf[kFrame - k] = std::conj(buf[k]);
    }
    fft.inverse(buf);
    for (int i = 0; i < kFrame; ++i) x[f0 + i] = buf[i].real();
  }

  // envelope-tracking comb above the voice band
  const double ea = std::exp(-1.0 / (0.030 * kSampleRate));
  double env = 0.0;
  const double dt = 1.0 / kSampleRate;
  for (int i = 0; i < kClipSamples; ++i) {
    env = std::max(ea * env, std::abs(static_cast<double>(base.samples[i])));
    const double a = strength * comb_amp * (0.25 + 1.5 * env);
    double comb = 0.0;
    for (int j = 0; j < cfg.comb_tones; ++j) {
      const double f = cfg.comb_base_hz + j * cfg.comb_spacing_hz;
      comb += std::sin(kTwoPi * f * i * dt + tone_phase[j]);
    }
    x[i] += a * comb;
  }

  double peak = 0.0;
  for (double s : x) peak = std::max(peak, std::abs(s));
  const double scale = peak > 0.0 ? 0.9 / peak : 0.0;
  AudioClip out;
  out.sample_rate = kSampleRate;
  out.samples.resize(kClipSamples);
  for (int i = 0; i < kClipSamples; ++i)
    out.samples[i] = static_cast<float>(x[i] * scale);
  return out;
}

// Sample-exact splice: real outside [start_s, start_s + dur_s), fake inside.
// Returns the clip and boundaries normalised over the 4 s window.
inline std::pair<AudioClip, std::pair<double, double>> make_half_truth(
    const AudioClip& real, const AudioClip& fake, double start_s, double dur_s) {
  if (real.samples.size() != kClipSamples || fake.samples.size() != kClipSamples)
    throw std::invalid_argument("make_half_truth: clips must be exactly 4 s");
  if (!(start_s >= 0.0) || !(dur_s > 0.0) || start_s + dur_s > 4.0 + 1e-12)
    throw std::invalid_argument("make_half_truth: segment out of range");

  const auto begin = static_cast<std::size_t>(std::llround(start_s * kSampleRate));
  const auto end = static_cast<std::size_t>(std::llround((start_s + dur_s) * kSampleRate));
  AudioClip out = real;
  for (std::size_t i = begin; i < std::min<std::size_t>(end, kClipSamples); ++i)
    out.samples[i] = fake.samples[i];
  return {std::move(out), {start_s / 4.0, (start_s + dur_s) / 4.0}};
}

}  // namespace cafnet
