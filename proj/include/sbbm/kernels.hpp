// Data-parallel inner loops of the solver, with a scalar reference
// implementation and an AVX2+FMA variant selected once at startup. Both
// variants are always compiled on x86-64; tests compare them on random data.
//
// All complex arrays are interleaved (re,im) doubles, matching
// std::complex<double> layout.

#pragma once

#include <complex>
#include <cstddef>

namespace sbbm::kernels {

struct Ops {
  // c[i] *= s[i]
  void (*cmul)(std::complex<double>* c, const std::complex<double>* s, std::size_t n);
  // out[i] = a[i] * b[i]
  void (*mul)(const double* a, const double* b, double* out, std::size_t n);
  // out[i] = x[i] + s1*y[i] + s2*z[i]   (used on complex data viewed as doubles)
  void (*axpbypz)(const double* x, double s1, const double* y, double s2, const double* z,
                  double* out, std::size_t n);
  // sum_i w[i] * |c[i]|^2
  double (*weighted_abs2_sum)(const std::complex<double>* c, const double* w, std::size_t n);
  // sum_i a[i]*b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // sum_i a[i]*b[i]*c[i]
  double (*triple_dot)(const double* a, const double* b, const double* c, std::size_t n);

  const char* name;
};

extern const Ops scalar_ops;
extern const Ops avx2_ops;  // valid to call only when avx2_supported()

bool avx2_supported();

// Active implementation. Honors SBBM_KERNELS=scalar|avx2|auto (default auto);
// the choice is made once and cached.
const Ops& ops();

}  // namespace sbbm::kernels
