#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference in
// kernels::scalar and, on x86-64, an AVX2 variant in kernels::avx2. The
// unqualified entry points dispatch on the CPU at first use.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace chebimg::kernels {

enum class Backend { Scalar, Avx2 };

bool avx2_available();
Backend active_backend();
// Throws std::runtime_error if the backend is unavailable on this CPU.
void set_backend(Backend b);
std::string_view backend_name(Backend b);

// out[i] = outer[inner[i]]  (apply inner, then outer)
void compose_permutations(std::span<const std::int32_t> outer,
                          std::span<const std::int32_t> inner,
                          std::span<std::int32_t> out);

// Permutation of (Z/mZ)^n induced by u -> H (u + s) mod m. Vertices are
// encoded mixed-radix with coordinate 0 least significant:
// index(u) = sum_j u_j m^j. `matrix` is n*n row-major, `shift` has n entries,
// `out` has m^n entries.
struct LabelMapArgs {
  int n;
  std::int64_t modulus;
  std::span<const std::int64_t> matrix;
  std::span<const std::int64_t> shift;
};
void affine_label_map(const LabelMapArgs& args, std::span<std::int32_t> out);

// Pairings of `count` integral weights with a complex point. Weights are
// stored column-major: weights[j * count + i] is coordinate j of weight i.
void orbit_pairings(std::span<const double> weights, std::size_t count, std::size_t n,
                    std::span<const double> x_re, std::span<const double> x_im,
                    std::span<double> out_re, std::span<double> out_im);

namespace scalar {
void compose_permutations(std::span<const std::int32_t> outer,
                          std::span<const std::int32_t> inner,
                          std::span<std::int32_t> out);
void affine_label_map(const LabelMapArgs& args, std::span<std::int32_t> out);
void orbit_pairings(std::span<const double> weights, std::size_t count, std::size_t n,
                    std::span<const double> x_re, std::span<const double> x_im,
                    std::span<double> out_re, std::span<double> out_im);
}  // namespace scalar

namespace avx2 {
// Callable only when avx2_available().
void compose_permutations(std::span<const std::int32_t> outer,
                          std::span<const std::int32_t> inner,
                          std::span<std::int32_t> out);
void affine_label_map(const LabelMapArgs& args, std::span<std::int32_t> out);
void orbit_pairings(std::span<const double> weights, std::size_t count, std::size_t n,
                    std::span<const double> x_re, std::span<const double> x_im,
                    std::span<double> out_re, std::span<double> out_im);
}  // namespace avx2

}  // namespace chebimg::kernels
