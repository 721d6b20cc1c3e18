#include "chebimg/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace chebimg::kernels {

namespace {

Backend detect() {
  // CHEBIMG_KERNELS=scalar forces the reference path.
  if (const char* env = std::getenv("CHEBIMG_KERNELS"); env && std::strcmp(env, "scalar") == 0)
    return Backend::Scalar;
  return avx2_available() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> b{detect()};
  return b;
}

}  // namespace

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
  static const bool has = __builtin_cpu_supports("avx2");
  return has;
#else
  return false;
#endif
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (b == Backend::Avx2 && !avx2_available())
    throw std::runtime_error("AVX2 backend requested but not supported by this CPU");
  current().store(b, std::memory_order_relaxed);
}

std::string_view backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

void compose_permutations(std::span<const std::int32_t> outer,
                          std::span<const std::int32_t> inner,
                          std::span<std::int32_t> out) {
  if (active_backend() == Backend::Avx2) return avx2::compose_permutations(outer, inner, out);
  scalar::compose_permutations(outer, inner, out);
}

void affine_label_map(const LabelMapArgs& args, std::span<std::int32_t> out) {
  if (active_backend() == Backend::Avx2) return avx2::affine_label_map(args, out);
  scalar::affine_label_map(args, out);
}

void orbit_pairings(std::span<const double> weights, std::size_t count, std::size_t n,
                    std::span<const double> x_re, std::span<const double> x_im,
                    std::span<double> out_re, std::span<double> out_im) {
  if (active_backend() == Backend::Avx2)
    return avx2::orbit_pairings(weights, count, n, x_re, x_im, out_re, out_im);
  scalar::orbit_pairings(weights, count, n, x_re, x_im, out_re, out_im);
}

}  // namespace chebimg::kernels
