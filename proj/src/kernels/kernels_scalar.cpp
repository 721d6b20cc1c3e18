#include "chebimg/kernels.hpp"

#include <vector>

namespace chebimg::kernels::scalar {

void compose_permutations(std::span<const std::int32_t> outer,
                          std::span<const std::int32_t> inner,
                          std::span<std::int32_t> out) {
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
}

void affine_label_map(const LabelMapArgs& args, std::span<std::int32_t> out) {
  const int n = args.n;
  const std::int64_t m = args.modulus;
  std::vector<std::int64_t> u(n, 0), v(n);
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    std::int64_t enc = 0, radix = 1;
    for (int r = 0; r < n; ++r) {
      std::int64_t acc = 0;
      for (int c = 0; c < n; ++c) acc += args.matrix[r * n + c] * (u[c] + args.shift[c]);
      acc %= m;
      if (acc < 0) acc += m;
      enc += acc * radix;
      radix *= m;
    }
    out[idx] = static_cast<std::int32_t>(enc);
    for (int c = 0; c < n; ++c) {
      if (++u[c] < m) break;
      u[c] = 0;
    }
  }
}

void orbit_pairings(std::span<const double> weights, std::size_t count, std::size_t n,
                    std::span<const double> x_re, std::span<const double> x_im,
                    std::span<double> out_re, std::span<double> out_im) {
  for (std::size_t i = 0; i < count; ++i) {
    double re = 0.0, im = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double w = weights[j * count + i];
      re += w * x_re[j];
      im += w * x_im[j];
    }
    out_re[i] = re;
    out_im[i] = im;
  }
}

}  // namespace chebimg::kernels::scalar
