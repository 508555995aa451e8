#include "sbbm/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "sbbm/kernels.hpp"

namespace sbbm {
namespace {

// FFTW's planner is not thread-safe; executing distinct plans on their own
// buffers is. Each thread keeps its own plans per size, creation serialized.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftWorkspace {
  int n = 0;
  double* real_buf = nullptr;
  fftw_complex* half_buf = nullptr;  // n/2 + 1 entries
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;

  explicit FftWorkspace(int size) : n(size) {
    std::lock_guard<std::mutex> lock(planner_mutex());
    real_buf = fftw_alloc_real(n);
    half_buf = fftw_alloc_complex(n / 2 + 1);
    r2c = fftw_plan_dft_r2c_1d(n, real_buf, half_buf, FFTW_ESTIMATE);
    c2r = fftw_plan_dft_c2r_1d(n, half_buf, real_buf, FFTW_ESTIMATE);
  }
  ~FftWorkspace() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(r2c);
    fftw_destroy_plan(c2r);
    fftw_free(real_buf);
    fftw_free(half_buf);
  }
  FftWorkspace(const FftWorkspace&) = delete;
  FftWorkspace& operator=(const FftWorkspace&) = delete;
};

FftWorkspace& workspace(int n) {
  thread_local std::map<int, std::unique_ptr<FftWorkspace>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<FftWorkspace>(n);
  return *slot;
}

// Half-spectrum (k = 0..N/2) -> physical samples, series-normalized. Only the
// k >= 0 coefficients and the real part of the Nyquist slot are read, which
// projects non-Hermitian input onto its Hermitian part.
void inverse_from_coeffs(const Grid& g, const std::vector<std::complex<double>>& coeffs,
                         std::vector<double>& out) {
  const int n = g.size();
  auto& ws = workspace(n);
  for (int k = 0; k < n / 2; ++k) {
    const auto c = coeffs[g.slot(k)];
    ws.half_buf[k][0] = c.real();
    ws.half_buf[k][1] = c.imag();
  }
  ws.half_buf[n / 2][0] = coeffs[g.slot(-n / 2)].real();
  ws.half_buf[n / 2][1] = 0.0;
  fftw_execute(ws.c2r);
  out.assign(ws.real_buf, ws.real_buf + n);
}

void forward_to_coeffs(const Grid& g, const std::vector<double>& samples,
                       std::vector<std::complex<double>>& out) {
  const int n = g.size();
  auto& ws = workspace(n);
  std::copy(samples.begin(), samples.end(), ws.real_buf);
  fftw_execute(ws.r2c);
  out.assign(n, 0.0);
  const double inv_n = 1.0 / n;
  for (int k = 0; k < n / 2; ++k) {
    const std::complex<double> c(ws.half_buf[k][0] * inv_n, ws.half_buf[k][1] * inv_n);
    out[g.slot(k)] = c;
    if (k > 0) out[g.slot(-k)] = std::conj(c);
  }
  out[g.slot(-n / 2)] = ws.half_buf[n / 2][0] * inv_n;  // real for real input
}

int dealias_limit(int n) { return n / 3; }

void zero_above(SpectralField& f, int kmax) {
  const int n = f.grid.size();
  for (int i = 0; i < n; ++i)
    if (std::abs(f.grid.wavenumber(i)) > kmax) f.coeffs[i] = 0.0;
}

// Zero-pad onto a grid with m > n points. The unpaired mode -n/2 is split
// evenly between +-n/2 so the padded field is the canonical (cosine) trig
// interpolant of the original samples.
SpectralField pad_to(const SpectralField& f, const Grid& fine) {
  const int n = f.grid.size();
  SpectralField out(fine);
  for (int k = -n / 2 + 1; k < n / 2; ++k) out.at_wavenumber(k) = f.at_wavenumber(k);
  const double nyq = f.at_wavenumber(-n / 2).real();
  out.at_wavenumber(-n / 2) = 0.5 * nyq;
  out.at_wavenumber(n / 2) = 0.5 * nyq;
  return out;
}

}  // namespace

SpectralField to_spectral(const RealField& u) {
  SpectralField out(u.grid);
  forward_to_coeffs(u.grid, u.samples, out.coeffs);
  return out;
}

RealField to_physical(const SpectralField& f) {
  RealField out(f.grid);
  inverse_from_coeffs(f.grid, f.coeffs, out.samples);
  return out;
}

SpectralField apply_multiplier(const SpectralField& f, const MultiplierSymbol& m) {
  SpectralField out = f;
  const auto table = materialize(m, f.grid);
  apply_table_inplace(out, table);
  return out;
}

void apply_table_inplace(SpectralField& f, std::span<const std::complex<double>> table) {
  // slot 0 is the unpaired -N/2 mode: real part of the symbol only
  f.coeffs[0] *= table[0].real();
  kernels::ops().cmul(f.coeffs.data() + 1, table.data() + 1, f.coeffs.size() - 1);
}

std::vector<double> sobolev_weights(const Grid& g, double sigma) {
  std::vector<double> w(g.size());
  for (int i = 0; i < g.size(); ++i) {
    const double xi = g.frequency(i);
    w[i] = g.period() * std::pow(1.0 + xi * xi, sigma);
  }
  return w;
}

std::vector<double> energy_weights(const Grid& g, double sigma0) {
  std::vector<double> w(g.size());
  for (int i = 0; i < g.size(); ++i) {
    const double xi = g.frequency(i);
    w[i] = 0.5 * g.period() * std::pow(1.0 + xi * xi, sigma0);
  }
  return w;
}

double sobolev_norm(const SpectralField& f, double sigma) {
  const auto w = sobolev_weights(f.grid, sigma);
  return std::sqrt(kernels::ops().weighted_abs2_sum(f.coeffs.data(), w.data(), w.size()));
}

double energy_norm_sq(const SpectralField& f, double sigma0) {
  const auto w = energy_weights(f.grid, sigma0);
  return kernels::ops().weighted_abs2_sum(f.coeffs.data(), w.data(), w.size());
}

double energy_norm(const SpectralField& f, double sigma0) {
  return std::sqrt(energy_norm_sq(f, sigma0));
}

SpectralField dealiased_product(const SpectralField& a, const SpectralField& b) {
  require_same_grid(a.grid, b.grid, "dealiased_product");
  const int n = a.grid.size();
  const int kmax = dealias_limit(n);

  SpectralField ta = a, tb = b;
  zero_above(ta, kmax);
  zero_above(tb, kmax);

  std::vector<double> pa, pb;
  inverse_from_coeffs(a.grid, ta.coeffs, pa);
  inverse_from_coeffs(b.grid, tb.coeffs, pb);
  std::vector<double> prod(n);
  kernels::ops().mul(pa.data(), pb.data(), prod.data(), n);

  SpectralField out(a.grid);
  forward_to_coeffs(a.grid, prod, out.coeffs);
  zero_above(out, kmax);
  return out;
}

double triple_product_integral(const SpectralField& a, const SpectralField& b,
                               const SpectralField& c) {
  require_same_grid(a.grid, b.grid, "triple_product_integral");
  require_same_grid(a.grid, c.grid, "triple_product_integral");
  const Grid fine(2 * a.grid.size(), a.grid.period());

  std::vector<double> pa, pb, pc;
  inverse_from_coeffs(fine, pad_to(a, fine).coeffs, pa);
  inverse_from_coeffs(fine, pad_to(b, fine).coeffs, pb);
  inverse_from_coeffs(fine, pad_to(c, fine).coeffs, pc);

  const double sum = kernels::ops().triple_dot(pa.data(), pb.data(), pc.data(), pa.size());
  return sum * fine.period() / fine.size();
}

double cube_integral(const SpectralField& u) { return triple_product_integral(u, u, u); }

double hermitian_defect(const SpectralField& f) {
  const int n = f.grid.size();
  double worst = std::abs(f.at_wavenumber(-n / 2).imag());
  for (int k = 1; k < n / 2; ++k)
    worst = std::max(worst, std::abs(f.at_wavenumber(-k) - std::conj(f.at_wavenumber(k))));
  return worst;
}

}  // namespace sbbm
