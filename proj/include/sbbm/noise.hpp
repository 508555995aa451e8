// Driving noise. The per-mode coefficients gamma_j only ever enter the
// dynamics through Gamma^2 = sum_j gamma_j^2, so paths are sampled for the
// aggregated scalar Brownian motion B = sum_j gamma_j W_j directly.
//
// RNG discipline: SplitMix64 used as a pure counter generator. Draw i of
// stream s is mix64(s + (i+1)*GAMMA). Ensemble member m of a run with seed
// seed uses stream member_stream(seed, m); the path sampler consumes draws
// 0,1,2,... of its stream through Box-Muller. Everything is reproducible
// from (seed, member) alone and independent of threading.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sbbm/grid.hpp"

namespace sbbm {

namespace rng {

inline constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// i-th draw of stream s, i >= 0.
inline std::uint64_t draw(std::uint64_t stream, std::uint64_t i) {
  return mix64(stream + (i + 1) * kGamma);
}

// Uniform in (0,1]: top 53 bits, shifted into (0,1].
inline double uniform(std::uint64_t stream, std::uint64_t i) {
  return ((draw(stream, i) >> 11) + 1) * 0x1.0p-53;
}

// Standard normal via Box-Muller (cosine branch); consumes draws 2i, 2i+1.
double normal(std::uint64_t stream, std::uint64_t i);

// Derived stream for ensemble member m.
inline std::uint64_t member_stream(std::uint64_t seed, std::uint64_t m) {
  return mix64(seed ^ (mix64(m) + kGamma));
}

}  // namespace rng

struct NoiseModel {
  std::vector<double> gammas;  // metadata only; may be empty
  double gamma_sq_sum = 0.0;   // Gamma^2

  static NoiseModel from_variance(double gamma_sq);
  static NoiseModel from_gammas(std::vector<double> gammas);
};

// Discrete Brownian path: t_n = n*dt, increments dB_n ~ N(0, Gamma^2 dt).
struct NoisePath {
  double dt = 0.0;
  double gamma_sq = 0.0;
  std::uint64_t seed = 0;
  std::vector<double> increments;  // dB_0 .. dB_{Nt-1}
  std::vector<double> cumulative;  // B(t_0)=0 .. B(t_Nt)

  int steps() const { return static_cast<int>(increments.size()); }
  double horizon() const { return dt * steps(); }
  double at(int n) const { return cumulative[n]; }
};

NoisePath sample_path(const NoiseModel& model, double horizon, double dt, std::uint64_t stream);

// Sum adjacent increments; same underlying path on a coarser grid.
NoisePath coarsen_path(const NoisePath& path, int factor);

// S_W: multiply mode k by e^{i xi_k beta}, i.e. u(.) -> u(. + beta)
// interpolated spectrally. An exact H^sigma isometry.
SpectralField apply_random_translation(const SpectralField& f, double beta);

// CSV replay format, columns n,t,dB,B.
void dump_path_csv(const NoisePath& path, const std::string& filename);
NoisePath load_path_csv(const std::string& filename);

}  // namespace sbbm
