// AVX2+FMA variants. This translation unit is compiled with -mavx2 -mfma and
// must only be entered after the dispatcher has checked CPU support.

#include "sbbm/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace sbbm::kernels {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

void cmul_avx2(std::complex<double>* c, const std::complex<double>* s, std::size_t n) {
  double* cd = reinterpret_cast<double*>(c);
  const double* sd = reinterpret_cast<const double*>(s);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d v = _mm256_loadu_pd(cd + 2 * i);
    __m256d m = _mm256_loadu_pd(sd + 2 * i);
    __m256d m_re = _mm256_movedup_pd(m);              // [c0 c0 c1 c1]
    __m256d m_im = _mm256_permute_pd(m, 0b1111);      // [d0 d0 d1 d1]
    __m256d v_sw = _mm256_permute_pd(v, 0b0101);      // [b0 a0 b1 a1]
    __m256d t = _mm256_mul_pd(v_sw, m_im);
    _mm256_storeu_pd(cd + 2 * i, _mm256_fmaddsub_pd(v, m_re, t));
  }
  for (; i < n; ++i) c[i] *= s[i];
}

void mul_avx2(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

void axpbypz_avx2(const double* x, double s1, const double* y, double s2, const double* z,
                  double* out, std::size_t n) {
  const __m256d vs1 = _mm256_set1_pd(s1);
  const __m256d vs2 = _mm256_set1_pd(s2);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d acc = _mm256_fmadd_pd(vs1, _mm256_loadu_pd(y + i), _mm256_loadu_pd(x + i));
    acc = _mm256_fmadd_pd(vs2, _mm256_loadu_pd(z + i), acc);
    _mm256_storeu_pd(out + i, acc);
  }
  for (; i < n; ++i) out[i] = x[i] + s1 * y[i] + s2 * z[i];
}

double weighted_abs2_sum_avx2(const std::complex<double>* c, const double* w, std::size_t n) {
  const double* cd = reinterpret_cast<const double*>(c);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d v = _mm256_loadu_pd(cd + 2 * i);
    // [w_i w_i w_{i+1} w_{i+1}]
    __m256d wd = _mm256_permute4x64_pd(
        _mm256_castpd128_pd256(_mm_loadu_pd(w + i)), 0b01010000);
    acc = _mm256_fmadd_pd(_mm256_mul_pd(v, v), wd, acc);
  }
  double tail = 0.0;
  for (; i < n; ++i) {
    const double re = c[i].real(), im = c[i].imag();
    tail += w[i] * (re * re + im * im);
  }
  return hsum(acc) + tail;
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
  double tail = 0.0;
  for (; i < n; ++i) tail += a[i] * b[i];
  return hsum(acc) + tail;
}

double triple_dot_avx2(const double* a, const double* b, const double* c, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d ab = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_fmadd_pd(ab, _mm256_loadu_pd(c + i), acc);
  }
  double tail = 0.0;
  for (; i < n; ++i) tail += a[i] * b[i] * c[i];
  return hsum(acc) + tail;
}

}  // namespace

const Ops avx2_ops = {
    cmul_avx2,  mul_avx2, axpbypz_avx2, weighted_abs2_sum_avx2,
    dot_avx2,   triple_dot_avx2,
    "avx2",
};

}  // namespace sbbm::kernels

#else  // non-x86 build: keep the symbol, point it at the scalar loops

namespace sbbm::kernels {
const Ops avx2_ops = scalar_ops;
}

#endif
