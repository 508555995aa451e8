#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "sbbm/errors.hpp"

namespace sbbm {

// Uniform periodic grid on [0, L) with N collocation points. Spectral data is
// stored in increasing-wavenumber order: slot i holds wavenumber
// k = i - N/2, i.e. xi_i = 2*pi*(i - N/2)/L. The mode k = -N/2 has no
// positive partner (N even).
class Grid {
 public:
  Grid(int n, double length) : n_(n), length_(length) {
    if (n < 8 || n % 2 != 0) throw ConfigError("grid size must be even and >= 8");
    if (!(length > 0.0) || !std::isfinite(length)) throw ConfigError("grid period must be positive");
  }

  int size() const { return n_; }
  double period() const { return length_; }
  double dx() const { return length_ / n_; }
  double point(int j) const { return length_ * j / n_; }

  int wavenumber(int slot) const { return slot - n_ / 2; }
  int slot(int wavenumber) const { return wavenumber + n_ / 2; }
  double frequency(int slot) const {
    return 2.0 * std::numbers::pi * wavenumber(slot) / length_;
  }
  // Largest frequency magnitude representable on the grid, pi*N/L.
  double nyquist() const { return std::numbers::pi * n_ / length_; }

  std::vector<double> frequencies() const {
    std::vector<double> out(n_);
    for (int i = 0; i < n_; ++i) out[i] = frequency(i);
    return out;
  }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.n_ == b.n_ && a.length_ == b.length_;
  }

 private:
  int n_;
  double length_;
};

struct RealField {
  Grid grid;
  std::vector<double> samples;  // u(x_j), j = 0..N-1

  RealField(const Grid& g, std::vector<double> s) : grid(g), samples(std::move(s)) {
    if (static_cast<int>(samples.size()) != grid.size())
      throw ConfigError("real field sample count does not match grid");
  }
  explicit RealField(const Grid& g) : grid(g), samples(g.size(), 0.0) {}
};

// Fourier-series coefficients c_k of a real field, u(x) = sum_k c_k e^{i xi_k x},
// in increasing-k storage order. Real-valued fields satisfy
// c_{-k} = conj(c_k); to_spectral enforces this by construction.
struct SpectralField {
  Grid grid;
  std::vector<std::complex<double>> coeffs;

  SpectralField(const Grid& g, std::vector<std::complex<double>> c)
      : grid(g), coeffs(std::move(c)) {
    if (static_cast<int>(coeffs.size()) != grid.size())
      throw ConfigError("spectral field coefficient count does not match grid");
  }
  explicit SpectralField(const Grid& g) : grid(g), coeffs(g.size(), 0.0) {}

  std::complex<double>& at_wavenumber(int k) { return coeffs[grid.slot(k)]; }
  const std::complex<double>& at_wavenumber(int k) const { return coeffs[grid.slot(k)]; }
};

inline void require_same_grid(const Grid& a, const Grid& b, const char* where) {
  if (!(a == b)) throw ConfigError(std::string("grid mismatch in ") + where);
}

}  // namespace sbbm
