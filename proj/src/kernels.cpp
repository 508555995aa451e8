#include "sbbm/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace sbbm::kernels {

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

const Ops& select() {
  const char* env = std::getenv("SBBM_KERNELS");
  if (env != nullptr) {
    if (std::strcmp(env, "scalar") == 0) return scalar_ops;
    if (std::strcmp(env, "avx2") == 0) return avx2_ops;
  }
  return avx2_supported() ? avx2_ops : scalar_ops;
}

}  // namespace

const Ops& ops() {
  static const Ops& chosen = select();
  return chosen;
}

}  // namespace sbbm::kernels
