#pragma once

// Critical and post-critical structure: sampling of the Cartan-Stiefel
// diagram H, critical points of T over (1/d)H, invariance d H = H, and the
// deltoid equation of A2.

#include "chebimg/chebmap.hpp"
#include "chebimg/gencos.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace chebimg {

struct DiagramSample {
  std::size_t root_index = 0;  // positive root v
  long long ell = 0;           // the wall H_{v,ell}
  ComplexVector point;
  ComplexVector offset;  // the random point that was projected onto the wall
};

struct DiagramSampling {
  long long ell_min = -2;
  long long ell_max = 2;
  double real_half_width = 1.0;
  double imag_half_width = 0.25;
};

// Random z, projected by x = z - ((<v,z> - ell) / 2) v^vee.
std::vector<DiagramSample> sample_diagram_points(const RootSystem& rs, std::size_t count,
                                                 std::uint64_t seed,
                                                 const DiagramSampling& opts = {});

// Random points at least `min_distance` away from H.
std::vector<ComplexVector> sample_generic_points(const RootSystem& rs, std::size_t count,
                                                 std::uint64_t seed, double min_distance,
                                                 const DiagramSampling& opts = {});

struct PostCriticalReport {
  std::string type_spec;
  long long d = 0;
  double tol = 0.0;
  std::size_t requested = 0;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;  // samples y lying on H itself
  // max over samples of normalized_determinant(DT(Psi(y)))
  double max_det_normalized = 0.0;
  double max_det_abs = 0.0;
  // |T(Psi(y)) - Psi(d y)|_inf / max(1, |Psi(d y)|_inf)
  double max_functional_residual = 0.0;
  bool critical_values_on_diagram = true;  // d y lies on H with the expected wall
  bool passed = false;
};

// y = z / d for diagram samples z whose wall index ell is not a multiple of d.
PostCriticalReport post_critical_check(const GeneralizedCosine& psi, long long d,
                                       const PolynomialMap& p, std::size_t samples, double tol,
                                       std::uint64_t seed = 0,
                                       const DiagramSampling& opts = {});

struct DiagramInvarianceReport {
  std::string type_spec;
  long long d = 0;
  std::size_t samples = 0;
  std::size_t witnessed = 0;  // wall index of d y equals d * ell exactly
  double max_distance = 0.0;
  bool passed = false;
};

DiagramInvarianceReport diagram_invariance_check(const RootSystem& rs, long long d,
                                                 std::size_t samples, std::uint64_t seed = 0,
                                                 const DiagramSampling& opts = {});

// X1^2 X2^2 + 18 X1 X2 - 4 (X1^3 + X2^3) - 27
Complex deltoid_residual(Complex x1, Complex x2);

struct DeltoidReport {
  std::size_t samples = 0;
  double max_on_diagram = 0.0;
  double min_off_diagram = 0.0;
};

// Requires an A2 system.
DeltoidReport deltoid_check(const GeneralizedCosine& psi, std::size_t samples,
                            std::uint64_t seed = 0, const DiagramSampling& opts = {});

}  // namespace chebimg
