// Transforms, diagonal multipliers, norms and dealiased products on the
// periodic grid.
//
// Conventions (all frozen, the derived test values depend on them):
//   - series coefficients: u(x) = sum_k c_k e^{i xi_k x}, c_k = (1/N) DFT
//   - ||u||_{H^sigma}^2 = L * sum_k (1+xi_k^2)^sigma |c_k|^2   (Parseval-exact)
//   - ||u||_H^2        = (L/2) * sum_k K(xi_k)^{-1} |c_k|^2
//   - quadratic products use the 2/3 rule (modes |k| > N/3 zeroed before and
//     after the pointwise multiply)
//   - cubic integrands are evaluated on a 2x zero-padded grid, which makes
//     int a*b*c dx exact for band-limited factors including the Nyquist slot

#pragma once

#include <complex>
#include <span>

#include "sbbm/grid.hpp"
#include "sbbm/symbols.hpp"

namespace sbbm {

SpectralField to_spectral(const RealField& u);
RealField to_physical(const SpectralField& f);

SpectralField apply_multiplier(const SpectralField& f, const MultiplierSymbol& m);
// Table variant for per-step loops; the table must come from materialize()
// on the same grid. At the unpaired mode k = -N/2 only the real part of the
// symbol acts, so real fields stay real under every multiplier.
void apply_table_inplace(SpectralField& f, std::span<const std::complex<double>> table);

double sobolev_norm(const SpectralField& f, double sigma);
double energy_norm(const SpectralField& f, double sigma0);  // sqrt of the H-energy
double energy_norm_sq(const SpectralField& f, double sigma0);

// Precomputed norm weights for per-step loops:
// L*(1+xi^2)^sigma and (L/2)*(1+xi^2)^{sigma0} respectively.
std::vector<double> sobolev_weights(const Grid& g, double sigma);
std::vector<double> energy_weights(const Grid& g, double sigma0);

// Pointwise product with the 2/3 dealiasing rule. Exact for inputs whose
// combined bandwidth stays within |k| <= N/3.
SpectralField dealiased_product(const SpectralField& a, const SpectralField& b);

// int a*b*c dx over [0,L), exact for grid-representable factors (2x padding).
double triple_product_integral(const SpectralField& a, const SpectralField& b,
                               const SpectralField& c);
// int u^3 dx.
double cube_integral(const SpectralField& u);

// max_i |c_{-k} - conj(c_k)|, a test aid.
double hermitian_defect(const SpectralField& f);

}  // namespace sbbm
