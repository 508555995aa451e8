// Prints the oracle values that the unit and acceptance tests freeze as
// expected constants. Run once, inspect, copy. Kept in the tree so the frozen
// numbers can always be regenerated.

#include <cstdio>
#include <numbers>

#include "oracle.hpp"

using namespace oracle;
using std::numbers::pi;

static std::vector<cplx> cosine_field(int n, double L, int mode, double amp) {
  std::vector<cplx> c(n, 0.0);
  c[n / 2 + mode] = amp / 2.0;
  c[n / 2 - mode] = amp / 2.0;
  return c;
}

int main() {
  const double L = 2.0 * pi;
  const int n = 16;
  const int kmax = n / 3;  // = 5, 2/3-rule band
  const double s0 = 1.0;

  auto u1 = cosine_field(n, L, 1, 1.0);  // cos x

  // u2 = cos x + 1/2 cos 2x
  auto u2 = u1;
  u2[n / 2 + 2] += 0.25;
  u2[n / 2 - 2] += 0.25;

  // u3 = cos x + 1/2 sin 2x (mixed parity, for the drift-rate integral)
  auto u3 = u1;
  u3[n / 2 + 2] += cplx(0.0, -0.25);
  u3[n / 2 - 2] += cplx(0.0, 0.25);

  std::printf("== norms, cos x ==\n");
  std::printf("sobolev sigma=0 : %.15e  (sqrt(pi) = %.15e)\n", direct_sobolev(u1, L, 0.0),
              std::sqrt(pi));
  std::printf("sobolev sigma=1 : %.15e  (sqrt(2pi) = %.15e)\n", direct_sobolev(u1, L, 1.0),
              std::sqrt(2.0 * pi));
  std::printf("energy_sq       : %.15e  (pi = %.15e)\n", direct_energy_sq(u1, L, s0), pi);

  std::printf("== g(cos x), sigma0=1 ==\n");
  auto g1 = direct_g(u1, L, s0, kmax);
  for (int i = 0; i < (int)g1.size(); ++i) {
    if (std::abs(g1[i]) > 1e-14)
      std::printf("  k=%+d : (%.15e, %.15e)\n", i - kmax, g1[i].real(), g1[i].imag());
  }
  std::printf("  expect k=+-2 coeff +-0.1i (i.e. -0.2 sin 2x)\n");

  std::printf("== f(cos x), gamma_sq=0 ==\n");
  auto f0 = direct_f(u1, L, s0, 0.0, kmax);
  for (int i = 0; i < (int)f0.size(); ++i) {
    if (std::abs(f0[i]) > 1e-14)
      std::printf("  k=%+d : (%.15e, %.15e)\n", i - kmax, f0[i].real(), f0[i].imag());
  }
  std::printf("  expect 0.04 sin 2x -> k=+-2 coeff -+0.02i\n");

  std::printf("== f(cos x), gamma_sq=1 ==\n");
  auto f1 = direct_f(u1, L, s0, 1.0, kmax);
  for (int i = 0; i < (int)f1.size(); ++i) {
    if (std::abs(f1[i]) > 1e-14)
      std::printf("  k=%+d : (%.15e, %.15e)\n", i - kmax, f1[i].real(), f1[i].imag());
  }
  std::printf("  expect 0.04 sin 2x - 0.05 cos x - 0.03 cos 3x\n");

  std::printf("== hamiltonians ==\n");
  std::printf("H(cos x)            : %.15e  (pi       = %.15e)\n", direct_hamiltonian(u1, L, s0),
              pi);
  std::printf("H(0.3 cos x)        : %.15e  (0.09 pi  = %.15e)\n",
              direct_hamiltonian(cosine_field(n, L, 1, 0.3), L, s0), 0.09 * pi);
  std::printf("H(cosx + 1/2cos2x)  : %.15e  (1.875 pi = %.15e)\n", direct_hamiltonian(u2, L, s0),
              1.875 * pi);

  std::printf("== g, f on u2 = cos x + 1/2 cos 2x (gamma_sq = 0.04) ==\n");
  auto g2 = direct_g(u2, L, s0, kmax);
  for (int i = 0; i < (int)g2.size(); ++i) {
    if (std::abs(g2[i]) > 1e-14)
      std::printf("  g k=%+d : (%.15e, %.15e)\n", i - kmax, g2[i].real(), g2[i].imag());
  }
  auto f2 = direct_f(u2, L, s0, 0.04, kmax);
  for (int i = 0; i < (int)f2.size(); ++i) {
    if (std::abs(f2[i]) > 1e-14)
      std::printf("  f k=%+d : (%.15e, %.15e)\n", i - kmax, f2[i].real(), f2[i].imag());
  }

  std::printf("== drift-rate first integral, theta_R = 0 ==\n");
  // rate = -int u^2 (dx K u) dx
  auto rate = [&](const std::vector<cplx>& u) {
    auto dxKu = u;
    for (int i = 0; i < n; ++i) {
      const int k = i - n / 2;
      const double xi = 2.0 * pi * k / L;
      dxKu[i] *= cplx(0.0, xi) * bessel_symbol(xi, s0);
    }
    return -quad(
        [&](double x) {
          double a = eval_series(u, L, x);
          double b = eval_series(dxKu, L, x);
          return a * a * b;
        },
        L);
  };
  std::printf("u2 (even)  : %.15e  (expect 0)\n", rate(u2));
  std::printf("u3 (mixed) : %.15e  (expect 0.15 pi = %.15e)\n", rate(u3), 0.15 * pi);

  std::printf("== sandwich sample: u = 1 + cos x scaled to ||u||_H = 1 ==\n");
  {
    std::vector<cplx> u(n, 0.0);
    u[n / 2] = 1.0;
    u[n / 2 + 1] = 0.5;
    u[n / 2 - 1] = 0.5;
    const double e = std::sqrt(direct_energy_sq(u, L, s0));
    for (auto& c : u) c /= e;
    const double cubic =
        quad([&](double x) { double v = eval_series(u, L, x); return v * v * v; }, L) / 3.0;
    std::printf("|1/3 int u^3| / ||u||_H^3 = %.15e\n", std::abs(cubic));
  }
  return 0;
}
