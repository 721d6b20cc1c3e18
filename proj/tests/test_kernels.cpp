#include "chebimg/kernels.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <numeric>
#include <random>
#include <vector>

using namespace chebimg::kernels;

namespace {

std::vector<std::int32_t> random_perm(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::int32_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Restores the dispatched backend after a test that switches it.
struct BackendGuard {
  Backend saved = active_backend();
  ~BackendGuard() { set_backend(saved); }
};

}  // namespace

TEST_CASE("environment override") {
  const char* env = std::getenv("CHEBIMG_KERNELS");
  if (env && std::strcmp(env, "scalar") == 0) CHECK(active_backend() == Backend::Scalar);
  else if (avx2_available()) CHECK(active_backend() == Backend::Avx2);
  MESSAGE("active backend: " << backend_name(active_backend()));
}

TEST_CASE("scalar permutation composition") {
  const std::vector<std::int32_t> outer{2, 0, 1}, inner{1, 2, 0};
  std::vector<std::int32_t> out(3);
  scalar::compose_permutations(outer, inner, out);
  CHECK(out == std::vector<std::int32_t>{0, 1, 2});
}

TEST_CASE("scalar label map") {
  // u -> -u + 1 mod 4 on one coordinate.
  const std::vector<std::int64_t> m{-1}, s{-1};
  std::vector<std::int32_t> out(4);
  scalar::affine_label_map({1, 4, m, s}, out);
  CHECK(out == std::vector<std::int32_t>{1, 0, 3, 2});
}

TEST_CASE("AVX2 kernels equal the scalar reference") {
  if (!avx2_available()) {
    MESSAGE("AVX2 not available; skipped");
    return;
  }
  std::mt19937_64 rng(1);
  for (std::size_t n : {1u, 7u, 8u, 9u, 64u, 1000u, 4099u}) {
    const auto a = random_perm(rng, n), b = random_perm(rng, n);
    std::vector<std::int32_t> r1(n), r2(n);
    scalar::compose_permutations(a, b, r1);
    avx2::compose_permutations(a, b, r2);
    CHECK(r1 == r2);
  }

  std::uniform_int_distribution<std::int64_t> entry(-3, 3), shift(-40, 40);
  for (int dim = 1; dim <= 4; ++dim)
    for (std::int64_t modulus : {2, 3, 4, 8, 9}) {
      std::size_t count = 1;
      for (int j = 0; j < dim; ++j) count *= static_cast<std::size_t>(modulus);
      if (count > 5000) continue;
      std::vector<std::int64_t> m(dim * dim), s(dim);
      for (auto& x : m) x = entry(rng);
      for (auto& x : s) x = shift(rng);
      std::vector<std::int32_t> r1(count), r2(count);
      scalar::affine_label_map({dim, modulus, m, s}, r1);
      avx2::affine_label_map({dim, modulus, m, s}, r2);
      CHECK(r1 == r2);
    }

  std::uniform_real_distribution<double> real(-2.0, 2.0);
  std::uniform_int_distribution<int> weight(-4, 4);
  for (std::size_t n : {1u, 2u, 3u, 8u})
    for (std::size_t count : {1u, 3u, 4u, 5u, 6u, 24u, 126u}) {
      std::vector<double> w(n * count), xr(n), xi(n);
      for (auto& x : w) x = weight(rng);
      for (auto& x : xr) x = real(rng);
      for (auto& x : xi) x = real(rng);
      std::vector<double> r1(count), i1(count), r2(count), i2(count);
      scalar::orbit_pairings(w, count, n, xr, xi, r1, i1);
      avx2::orbit_pairings(w, count, n, xr, xi, r2, i2);
      for (std::size_t i = 0; i < count; ++i) {
        CHECK(std::abs(r1[i] - r2[i]) <= 1e-12 * (1.0 + std::abs(r1[i])));
        CHECK(std::abs(i1[i] - i2[i]) <= 1e-12 * (1.0 + std::abs(i1[i])));
      }
    }
}

TEST_CASE("dispatch switches backends") {
  BackendGuard guard;
  set_backend(Backend::Scalar);
  CHECK(active_backend() == Backend::Scalar);
  std::vector<std::int32_t> out(2);
  compose_permutations(std::vector<std::int32_t>{1, 0}, std::vector<std::int32_t>{1, 0}, out);
  CHECK(out == std::vector<std::int32_t>{0, 1});
  if (avx2_available()) {
    set_backend(Backend::Avx2);
    CHECK(active_backend() == Backend::Avx2);
  } else {
    CHECK_THROWS_AS(set_backend(Backend::Avx2), std::runtime_error);
  }
}
