#include "sbbm/kernels.hpp"

namespace sbbm::kernels {
namespace {

void cmul_scalar(std::complex<double>* c, const std::complex<double>* s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) c[i] *= s[i];
}

void mul_scalar(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void axpbypz_scalar(const double* x, double s1, const double* y, double s2, const double* z,
                    double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] + s1 * y[i] + s2 * z[i];
}

double weighted_abs2_sum_scalar(const std::complex<double>* c, const double* w, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double re = c[i].real(), im = c[i].imag();
    acc += w[i] * (re * re + im * im);
  }
  return acc;
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double triple_dot_scalar(const double* a, const double* b, const double* c, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i] * c[i];
  return acc;
}

}  // namespace

const Ops scalar_ops = {
    cmul_scalar,  mul_scalar, axpbypz_scalar, weighted_abs2_sum_scalar,
    dot_scalar,   triple_dot_scalar,
    "scalar",
};

}  // namespace sbbm::kernels
