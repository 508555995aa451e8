#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "sbbm/grid.hpp"

namespace sbbm {

// C^1 bump used both for the norm truncation theta_R and the low-pass
// projection P_lambda: identically 1 on [-1,1], identically 0 outside
// [-2,2], cubic smoothstep in between. |theta'| <= 3/2.
inline double cutoff_profile(double s) {
  const double w = std::clamp(std::abs(s) - 1.0, 0.0, 1.0);
  return 1.0 - w * w * (3.0 - 2.0 * w);
}

struct CutoffFunction {
  double radius;  // R; +inf disables the cutoff entirely

  double operator()(double r) const {
    if (std::isinf(radius)) return 1.0;
    return cutoff_profile(r / radius);
  }
};

// A Fourier multiplier: diagonal action c_k -> m(xi_k) c_k. The evaluator is
// a plain function of the frequency; metadata identifies it in errors/tests.
struct MultiplierSymbol {
  std::function<std::complex<double>(double)> evaluate;
  std::string name;
};

// Dispersive symbol K(xi) = (1 + xi^2)^{-sigma0}; even, positive, <= 1.
inline MultiplierSymbol bessel_multiplier(double sigma0) {
  return {[sigma0](double xi) -> std::complex<double> {
            return std::pow(1.0 + xi * xi, -sigma0);
          },
          "K"};
}

inline MultiplierSymbol bessel_sq_multiplier(double sigma0) {
  return {[sigma0](double xi) -> std::complex<double> {
            return std::pow(1.0 + xi * xi, -2.0 * sigma0);
          },
          "K^2"};
}

// K^{-1/2}(xi) = (1 + xi^2)^{sigma0/2}.
inline MultiplierSymbol inv_sqrt_bessel_multiplier(double sigma0) {
  return {[sigma0](double xi) -> std::complex<double> {
            return std::pow(1.0 + xi * xi, sigma0 / 2.0);
          },
          "K^{-1/2}"};
}

inline MultiplierSymbol derivative_multiplier() {
  return {[](double xi) -> std::complex<double> { return {0.0, xi}; }, "dx"};
}

inline MultiplierSymbol derivative_bessel_multiplier(double sigma0) {
  return {[sigma0](double xi) -> std::complex<double> {
            return std::complex<double>(0.0, xi) * std::pow(1.0 + xi * xi, -sigma0);
          },
          "dx K"};
}

// Low-pass projection P_lambda with symbol theta(xi/lambda); lambda = inf is
// the identity.
inline MultiplierSymbol lowpass_multiplier(double lambda) {
  return {[lambda](double xi) -> std::complex<double> {
            if (std::isinf(lambda)) return 1.0;
            return cutoff_profile(xi / lambda);
          },
          "P_lambda"};
}

// Deterministic dispersive phase, the symbol of S(t): e^{-i xi K(xi) t}.
inline MultiplierSymbol group_phase_multiplier(double sigma0, double t) {
  return {[sigma0, t](double xi) -> std::complex<double> {
            return std::polar(1.0, -xi * std::pow(1.0 + xi * xi, -sigma0) * t);
          },
          "S(t)"};
}

// Random translation phase, the symbol of S_W: e^{i xi beta}.
inline MultiplierSymbol translation_phase_multiplier(double beta) {
  return {[beta](double xi) -> std::complex<double> { return std::polar(1.0, xi * beta); },
          "S_W"};
}

// Materialize a symbol on a grid for the hot loops.
inline std::vector<std::complex<double>> materialize(const MultiplierSymbol& m, const Grid& g) {
  std::vector<std::complex<double>> table(g.size());
  for (int i = 0; i < g.size(); ++i) {
    table[i] = m.evaluate(g.frequency(i));
    if (!std::isfinite(table[i].real()) || !std::isfinite(table[i].imag()))
      throw NumericError("symbol '" + m.name + "' is not finite at xi=" +
                         std::to_string(g.frequency(i)));
  }
  return table;
}

}  // namespace sbbm
