#include "sbbm/noise.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "sbbm/spectral.hpp"

namespace sbbm {

namespace rng {

double normal(std::uint64_t stream, std::uint64_t i) {
  const double u1 = uniform(stream, 2 * i);
  const double u2 = uniform(stream, 2 * i + 1);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace rng

NoiseModel NoiseModel::from_variance(double gamma_sq) {
  if (!(gamma_sq >= 0.0) || !std::isfinite(gamma_sq))
    throw ConfigError("noise variance rate must be finite and >= 0");
  return {{}, gamma_sq};
}

NoiseModel NoiseModel::from_gammas(std::vector<double> gammas) {
  double sum = 0.0;
  for (double g : gammas) {
    if (!std::isfinite(g)) throw ConfigError("noise coefficients must be finite");
    sum += g * g;
  }
  return {std::move(gammas), sum};
}

NoisePath sample_path(const NoiseModel& model, double horizon, double dt, std::uint64_t stream) {
  if (!(dt > 0.0) || !(horizon > 0.0))
    throw ConfigError("path sampling needs positive dt and horizon");
  const double steps_real = horizon / dt;
  const int steps = static_cast<int>(std::llround(steps_real));
  if (steps < 1 || std::abs(steps_real - steps) > 1e-9 * steps_real)
    throw ConfigError("dt must divide the horizon");

  NoisePath path;
  path.dt = dt;
  path.gamma_sq = model.gamma_sq_sum;
  path.seed = stream;
  path.increments.resize(steps);
  path.cumulative.resize(steps + 1);
  path.cumulative[0] = 0.0;
  const double scale = std::sqrt(model.gamma_sq_sum * dt);
  for (int n = 0; n < steps; ++n) {
    path.increments[n] = scale == 0.0 ? 0.0 : scale * rng::normal(stream, n);
    path.cumulative[n + 1] = path.cumulative[n] + path.increments[n];
  }
  return path;
}

NoisePath coarsen_path(const NoisePath& path, int factor) {
  if (factor < 1) throw ConfigError("coarsening factor must be >= 1");
  if (path.steps() % factor != 0)
    throw ConfigError("coarsening factor must divide the step count");
  NoisePath out;
  out.dt = path.dt * factor;
  out.gamma_sq = path.gamma_sq;
  out.seed = path.seed;
  const int coarse_steps = path.steps() / factor;
  out.increments.resize(coarse_steps);
  out.cumulative.resize(coarse_steps + 1);
  out.cumulative[0] = 0.0;
  for (int n = 0; n < coarse_steps; ++n) {
    double acc = 0.0;
    for (int j = 0; j < factor; ++j) acc += path.increments[n * factor + j];
    out.increments[n] = acc;
    out.cumulative[n + 1] = out.cumulative[n] + acc;
  }
  return out;
}

SpectralField apply_random_translation(const SpectralField& f, double beta) {
  if (!std::isfinite(beta)) throw NumericError("translation offset is not finite");
  return apply_multiplier(f, translation_phase_multiplier(beta));
}

void dump_path_csv(const NoisePath& path, const std::string& filename) {
  std::FILE* f = std::fopen(filename.c_str(), "w");
  if (f == nullptr) throw ConfigError("cannot open " + filename + " for writing");
  std::fprintf(f, "n,t,dB,B\n");
  for (int n = 0; n < path.steps(); ++n)
    std::fprintf(f, "%d,%.17g,%.17g,%.17g\n", n, n * path.dt, path.increments[n],
                 path.cumulative[n]);
  std::fprintf(f, "%d,%.17g,,%.17g\n", path.steps(), path.steps() * path.dt,
               path.cumulative[path.steps()]);
  std::fclose(f);
}

NoisePath load_path_csv(const std::string& filename) {
  std::FILE* f = std::fopen(filename.c_str(), "r");
  if (f == nullptr) throw ConfigError("cannot open " + filename);
  NoisePath path;
  char line[256];
  if (std::fgets(line, sizeof line, f) == nullptr) {
    std::fclose(f);
    throw ConfigError("empty path file " + filename);
  }
  std::vector<double> times;
  while (std::fgets(line, sizeof line, f) != nullptr) {
    int n = 0;
    double t = 0.0, db = 0.0, b = 0.0;
    const int got = std::sscanf(line, "%d,%lf,%lf,%lf", &n, &t, &db, &b);
    if (got == 4) {
      path.increments.push_back(db);
      path.cumulative.push_back(b);
      times.push_back(t);
    } else if (got >= 2) {  // trailing row has an empty dB column
      std::sscanf(line, "%d,%lf,,%lf", &n, &t, &b);
      path.cumulative.push_back(b);
      times.push_back(t);
    }
  }
  std::fclose(f);
  if (path.cumulative.size() != path.increments.size() + 1 || times.size() < 2)
    throw ConfigError("malformed path file " + filename);
  path.dt = times[1] - times[0];
  return path;
}

}  // namespace sbbm
