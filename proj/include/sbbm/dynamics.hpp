// The model's right-hand sides on the periodic grid.
//
//   du = -dx K (u + K u^2) dt + dx (u + K u^2) o dB          (Stratonovich)
//
// In mild/Ito variables the nonlinearities are
//   g(u) = dx K u^2
//   f(u) = -dx K^2 u^2 + Gamma^2 dx K (u dx K u^2)
// truncated by theta_R(||u||_{H^sigma}), plus the low-pass P_lambda variant
// of the Ito form and the resulting energy drift identity
//   dH = [ (theta-1) int u^2 dxKu
//          + theta(theta-1) Gamma^2 int( 1/2 g K^{-1} g + u g^2 ) ] dt.

#pragma once

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "sbbm/spectral.hpp"

namespace sbbm {

struct EquationParams {
  double sigma0 = 1.0;   // symbol exponent, > 1/2
  double sigma = 1.0;    // working regularity for norms and truncation
  double gamma_sq = 0.0; // Gamma^2 = sum gamma_j^2
  double trunc_radius = std::numeric_limits<double>::infinity();  // R
  double lowpass = std::numeric_limits<double>::infinity();       // lambda
  bool linear_only = false;  // drop f and g entirely

  void validate() const {
    if (!(sigma0 > 0.5)) throw ConfigError("sigma0 must exceed 1/2");
    if (!std::isfinite(sigma)) throw ConfigError("sigma must be finite");
    if (!(gamma_sq >= 0.0)) throw ConfigError("gamma_sq must be >= 0");
    if (!(trunc_radius > 0.0)) throw ConfigError("R must be positive (inf disables)");
    if (!(lowpass > 0.0)) throw ConfigError("lambda must be positive (inf disables)");
  }
};

struct TruncatedRhs {
  SpectralField f;
  SpectralField g;
  double theta;
};

// Precomputes all symbol tables for one (grid, params) pair. Instances hold
// no mutable state and are cheap; create one per trajectory/thread.
class Dynamics {
 public:
  Dynamics(const Grid& grid, const EquationParams& params);

  const Grid& grid() const { return grid_; }
  const EquationParams& params() const { return params_; }

  double h_sigma_norm(const SpectralField& u) const;
  double h_sigma0_norm(const SpectralField& u) const;
  double energy_norm(const SpectralField& u) const;
  double energy_norm_sq(const SpectralField& u) const;

  double theta_at(double h_sigma_norm_value) const;

  SpectralField eval_g(const SpectralField& u) const;
  SpectralField eval_f(const SpectralField& u) const;
  TruncatedRhs eval_truncated(const SpectralField& u) const;

  double hamiltonian(const SpectralField& u) const;
  // dH(u)phi = int( K^{-1/2}u K^{-1/2}phi + u^2 phi ) dx
  double frechet_dH(const SpectralField& u, const SpectralField& phi) const;

  // Drift and diffusion of the lambda/R-regularized Ito form:
  //   drift     = -dxK u + 1/2 Gamma^2 dx^2 P^2 u + f_R + Gamma^2 dxP g_R
  //   diffusion = dxP u + g_R
  std::pair<SpectralField, SpectralField> ito_rhs(const SpectralField& u) const;

  // Right-hand side of the energy-drift identity; identically 0 wherever
  // theta_R = 1.
  double energy_drift_rate(const SpectralField& u) const;

  // Symbol tables shared with the integrator.
  const std::vector<std::complex<double>>& dxK_table() const { return dxK_; }
  const std::vector<std::complex<double>>& dxP_table() const { return dxP_; }
  const std::vector<double>& xi_K_table() const { return xi_K_; }
  const std::vector<double>& xi_theta_table() const { return xi_theta_; }
  const std::vector<double>& sigma_weights() const { return w_sigma_; }

 private:
  SpectralField scaled_g(const SpectralField& u, double scale) const;
  SpectralField scaled_f(const SpectralField& u, double scale) const;

  Grid grid_;
  EquationParams params_;
  CutoffFunction theta_;

  std::vector<std::complex<double>> dxK_;    // i xi K
  std::vector<std::complex<double>> ndxK2_;  // -i xi K^2
  std::vector<std::complex<double>> dxP_;    // i xi theta_lambda
  std::vector<double> xi_K_;                 // xi K(xi), phase rate of S(t)
  std::vector<double> xi_theta_;             // xi theta_lambda(xi), phase rate of S_W
  std::vector<double> ndx2P2_;               // -xi^2 theta_lambda^2
  std::vector<double> w_sigma_;              // H^sigma weights
  std::vector<double> w_sigma0_;             // H^sigma0 weights
  std::vector<double> w_energy_;             // energy weights (L/2) K^{-1}
};

// Free-function forms of the operations above, for callers that do not keep
// a Dynamics around.
SpectralField eval_g(const SpectralField& u, const EquationParams& p);
SpectralField eval_f(const SpectralField& u, const EquationParams& p);
TruncatedRhs eval_truncated(const SpectralField& u, const EquationParams& p);
double hamiltonian(const SpectralField& u, const EquationParams& p);
double frechet_dH(const SpectralField& u, const SpectralField& phi, const EquationParams& p);
double energy_drift_rate(const SpectralField& u, const EquationParams& p);

}  // namespace sbbm
