#include "chebimg/kernels.hpp"

#include <stdexcept>
#include <vector>

#if defined(__x86_64__) || defined(_M_X64)
#define CHEBIMG_X86 1
#include <immintrin.h>
#else
#define CHEBIMG_X86 0
#endif

namespace chebimg::kernels::avx2 {

#if CHEBIMG_X86

// Target attributes keep the rest of the binary at the baseline ISA.
#define CHEBIMG_AVX2 __attribute__((target("avx2")))

CHEBIMG_AVX2
void compose_permutations(std::span<const std::int32_t> outer,
                          std::span<const std::int32_t> inner,
                          std::span<std::int32_t> out) {
  const std::size_t len = inner.size();
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    const __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(inner.data() + i));
    const __m256i val = _mm256_i32gather_epi32(outer.data(), idx, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), val);
  }
  for (; i < len; ++i) out[i] = outer[inner[i]];
}

CHEBIMG_AVX2
void affine_label_map(const LabelMapArgs& args, std::span<std::int32_t> out) {
  const int n = args.n;
  const std::int64_t m = args.modulus;
  const std::size_t rows = m > 0 ? out.size() / static_cast<std::size_t>(m) : 0;
  const __m256d vm = _mm256_set1_pd(static_cast<double>(m));
  const __m256d lane_offsets = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);

  std::vector<std::int64_t> u(n, 0);  // u[0] is the lane coordinate
  std::vector<std::int64_t> base(n);
  std::vector<double> radix(n);
  double rr = 1.0;
  for (int r = 0; r < n; ++r) {
    radix[r] = rr;
    rr *= static_cast<double>(m);
  }

  for (std::size_t row = 0; row < rows; ++row) {
    // base_r = sum_{c>=1} H[r][c] (u_c + s_c) + H[r][0] s_0, reduced mod m
    for (int r = 0; r < n; ++r) {
      std::int64_t acc = args.matrix[r * n] * args.shift[0];
      for (int c = 1; c < n; ++c) acc += args.matrix[r * n + c] * (u[c] + args.shift[c]);
      acc %= m;
      if (acc < 0) acc += m;
      base[r] = acc;
    }
    std::int32_t* dst = out.data() + row * static_cast<std::size_t>(m);
    std::int64_t u0 = 0;
    for (; u0 + 4 <= m; u0 += 4) {
      const __m256d lanes = _mm256_add_pd(_mm256_set1_pd(static_cast<double>(u0)), lane_offsets);
      __m256d enc = _mm256_setzero_pd();
      for (int r = 0; r < n; ++r) {
        const __m256d x = _mm256_add_pd(_mm256_set1_pd(static_cast<double>(base[r])),
                                        _mm256_mul_pd(_mm256_set1_pd(static_cast<double>(args.matrix[r * n])), lanes));
        const __m256d q = _mm256_floor_pd(_mm256_div_pd(x, vm));
        const __m256d v = _mm256_sub_pd(x, _mm256_mul_pd(q, vm));
        enc = _mm256_add_pd(enc, _mm256_mul_pd(v, _mm256_set1_pd(radix[r])));
      }
      _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + u0), _mm256_cvtpd_epi32(enc));
    }
    for (; u0 < m; ++u0) {
      std::int64_t e = 0, rad = 1;
      for (int r = 0; r < n; ++r) {
        std::int64_t v = (base[r] + args.matrix[r * n] * u0) % m;
        if (v < 0) v += m;
        e += v * rad;
        rad *= m;
      }
      dst[u0] = static_cast<std::int32_t>(e);
    }
    for (int c = 1; c < n; ++c) {
      if (++u[c] < m) break;
      u[c] = 0;
    }
  }
}

CHEBIMG_AVX2
void orbit_pairings(std::span<const double> weights, std::size_t count, std::size_t n,
                    std::span<const double> x_re, std::span<const double> x_im,
                    std::span<double> out_re, std::span<double> out_im) {
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256d re = _mm256_setzero_pd();
    __m256d im = _mm256_setzero_pd();
    for (std::size_t j = 0; j < n; ++j) {
      const __m256d w = _mm256_loadu_pd(weights.data() + j * count + i);
      re = _mm256_add_pd(re, _mm256_mul_pd(w, _mm256_set1_pd(x_re[j])));
      im = _mm256_add_pd(im, _mm256_mul_pd(w, _mm256_set1_pd(x_im[j])));
    }
    _mm256_storeu_pd(out_re.data() + i, re);
    _mm256_storeu_pd(out_im.data() + i, im);
  }
  for (; i < count; ++i) {
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

#else

void compose_permutations(std::span<const std::int32_t>, std::span<const std::int32_t>,
                          std::span<std::int32_t>) {
  throw std::runtime_error("AVX2 kernels not built for this architecture");
}
void affine_label_map(const LabelMapArgs&, std::span<std::int32_t>) {
  throw std::runtime_error("AVX2 kernels not built for this architecture");
}
void orbit_pairings(std::span<const double>, std::size_t, std::size_t, std::span<const double>,
                    std::span<const double>, std::span<double>, std::span<double>) {
  throw std::runtime_error("AVX2 kernels not built for this architecture");
}

#endif

}  // namespace chebimg::kernels::avx2
