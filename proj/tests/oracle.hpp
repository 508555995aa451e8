// Test-only reference oracle.
//
// Everything here is computed by direct summation: O(N^2) DFTs, trig-series
// evaluation at arbitrary points, and fine-grid trapezoid quadrature. No code
// from the library under test is used, so these values are an independent
// check of the FFT-based implementation.

#pragma once

#include <cassert>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

// Fourier-series coefficients of N samples on [0,L): c_k = (1/N) sum_j u_j e^{-i xi_k x_j},
// returned in increasing-k order, k = -N/2 .. N/2-1.
inline std::vector<cplx> direct_coeffs(const std::vector<double>& u, double L) {
  const int n = static_cast<int>(u.size());
  std::vector<cplx> c(n);
  for (int i = 0; i < n; ++i) {
    const int k = i - n / 2;
    cplx acc = 0.0;
    for (int j = 0; j < n; ++j) {
      const double x = L * j / n;
      const double xi = 2.0 * std::numbers::pi * k / L;
      acc += u[j] * std::polar(1.0, -xi * x);
    }
    c[i] = acc / static_cast<double>(n);
  }
  return c;
}

// Evaluate the trig interpolant sum_k c_k e^{i xi_k x} at arbitrary x.
inline double eval_series(const std::vector<cplx>& c, double L, double x) {
  const int n = static_cast<int>(c.size());
  cplx acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const int k = i - n / 2;
    const double xi = 2.0 * std::numbers::pi * k / L;
    acc += c[i] * std::polar(1.0, xi * x);
  }
  return acc.real();
}

inline std::vector<double> sample(const std::vector<cplx>& c, double L, int m) {
  std::vector<double> u(m);
  for (int j = 0; j < m; ++j) u[j] = eval_series(c, L, L * j / m);
  return u;
}

// Trapezoid rule on a fine periodic grid; exact for trig polynomials of
// bandwidth < m.
template <class F>
double quad(F&& f, double L, int m = 1 << 13) {
  double acc = 0.0;
  for (int j = 0; j < m; ++j) acc += f(L * j / m);
  return acc * L / m;
}

inline double bessel_symbol(double xi, double sigma0) {
  return std::pow(1.0 + xi * xi, -sigma0);
}

// Coefficients of the pointwise product of two trig polynomials, restricted
// to |k| <= kmax (computed by exact convolution of the coefficient arrays).
inline std::vector<cplx> product_coeffs(const std::vector<cplx>& a, const std::vector<cplx>& b,
                                        int kmax) {
  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  std::vector<cplx> out(2 * kmax + 1, 0.0);
  for (int i = 0; i < na; ++i) {
    const int ka = i - na / 2;
    for (int j = 0; j < nb; ++j) {
      const int kb = j - nb / 2;
      const int k = ka + kb;
      if (std::abs(k) <= kmax) out[k + kmax] += a[i] * b[j];
    }
  }
  return out;
}

// g(u) = dx K u^2 computed term-by-term on coefficients, with the square
// truncated to |k| <= kmax to mirror the 2/3-rule contract.
inline std::vector<cplx> direct_g(const std::vector<cplx>& u, double L, double sigma0, int kmax) {
  auto sq = product_coeffs(u, u, kmax);
  for (int i = 0; i < static_cast<int>(sq.size()); ++i) {
    const int k = i - kmax;
    const double xi = 2.0 * std::numbers::pi * k / L;
    sq[i] *= cplx(0.0, xi) * bessel_symbol(xi, sigma0);
  }
  return sq;
}

// f(u) = -dx K^2 u^2 + gamma_sq * dx K (u * g(u)), same truncation contract.
inline std::vector<cplx> direct_f(const std::vector<cplx>& u, double L, double sigma0,
                                  double gamma_sq, int kmax) {
  auto sq = product_coeffs(u, u, kmax);
  std::vector<cplx> out(sq.size());
  for (int i = 0; i < static_cast<int>(sq.size()); ++i) {
    const int k = i - kmax;
    const double xi = 2.0 * std::numbers::pi * k / L;
    const double K = bessel_symbol(xi, sigma0);
    out[i] = -cplx(0.0, xi) * K * K * sq[i];
  }
  if (gamma_sq != 0.0) {
    const auto g = direct_g(u, L, sigma0, kmax);
    // widen g back to a symmetric array for the convolution helper
    auto ug = product_coeffs(u, g, kmax);
    for (int i = 0; i < static_cast<int>(ug.size()); ++i) {
      const int k = i - kmax;
      const double xi = 2.0 * std::numbers::pi * k / L;
      out[i] += gamma_sq * cplx(0.0, xi) * bessel_symbol(xi, sigma0) * ug[i];
    }
  }
  return out;
}

// H(u) = 1/2 int (K^{-1/2}u)^2 + 1/3 int u^3, by quadrature on the interpolant.
inline double direct_hamiltonian(const std::vector<cplx>& u, double L, double sigma0) {
  const int n = static_cast<int>(u.size());
  std::vector<cplx> ksqrt(u);
  for (int i = 0; i < n; ++i) {
    const int k = i - n / 2;
    const double xi = 2.0 * std::numbers::pi * k / L;
    ksqrt[i] *= std::pow(1.0 + xi * xi, sigma0 / 2.0);
  }
  const double quadratic =
      0.5 * quad([&](double x) { double v = eval_series(ksqrt, L, x); return v * v; }, L);
  const double cubic =
      quad([&](double x) { double v = eval_series(u, L, x); return v * v * v; }, L) / 3.0;
  return quadratic + cubic;
}

inline double direct_sobolev(const std::vector<cplx>& u, double L, double sigma) {
  const int n = static_cast<int>(u.size());
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const int k = i - n / 2;
    const double xi = 2.0 * std::numbers::pi * k / L;
    acc += std::pow(1.0 + xi * xi, sigma) * std::norm(u[i]);
  }
  return std::sqrt(L * acc);
}

inline double direct_energy_sq(const std::vector<cplx>& u, double L, double sigma0) {
  const int n = static_cast<int>(u.size());
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const int k = i - n / 2;
    const double xi = 2.0 * std::numbers::pi * k / L;
    acc += std::norm(u[i]) / bessel_symbol(xi, sigma0);
  }
  return 0.5 * L * acc;
}

}  // namespace oracle
