#include "chebimg/critical.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace chebimg;

TEST_CASE("diagram samples lie on their walls") {
  for (const char* spec : {"A1", "A2", "B2", "G2", "A3", "A1xA1"}) {
    CAPTURE(std::string(spec));
    const RootSystem rs = build_root_system(spec);
    for (const DiagramSample& s : sample_diagram_points(rs, 200, 5)) {
      CHECK(rs.roots[s.root_index].positive());
      CHECK(s.ell >= -2);
      CHECK(s.ell <= 2);
      const DiagramHit hit = wall_witness(rs, s.root_index, s.point, 1e-12);
      CHECK(hit.on_diagram);
      CHECK(hit.ell == s.ell);
      // Projection moves along v^vee only.
      const Complex moved = dot(rs.roots[s.root_index].weight_coords, s.offset) -
                            static_cast<double>(s.ell);
      CHECK(std::abs(moved) < 10.0);
    }
  }
}

TEST_CASE("sampling is deterministic in the seed") {
  const RootSystem rs = build_root_system("B2");
  const auto a = sample_diagram_points(rs, 30, 99);
  const auto b = sample_diagram_points(rs, 30, 99);
  const auto c = sample_diagram_points(rs, 30, 100);
  bool same = true, differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    same = same && a[i].point == b[i].point && a[i].root_index == b[i].root_index;
    differs = differs || a[i].point != c[i].point;
  }
  CHECK(same);
  CHECK(differs);
  CHECK(sample_generic_points(rs, 20, 4, 0.05) == sample_generic_points(rs, 20, 4, 0.05));
}

TEST_CASE("A1 degree 2: the critical point X = 0 maps to the critical value -2") {
  const RootSystem rs = build_root_system("A1");
  const GeneralizedCosine psi(rs);
  const PolynomialMap t = build_cheb_map(rs, 2);
  // T(X) = X^2 - 2 is critical at X = 0 = Psi(1/4), and Psi(2 / 4) = -2.
  const ComplexVector y{Complex(0.25)};
  CHECK(std::abs(psi.eval(y)[0]) < 1e-14);
  CHECK(is_on_diagram(rs, {Complex(0.5)}, 1e-12).on_diagram);
  CHECK(std::abs(eval_poly_map(t, psi.eval(y))[0] - Complex(-2.0)) < 1e-14);
  const PostCriticalReport rep = post_critical_check(psi, 2, t, 40, 1e-7, 3);
  CHECK(rep.passed);
  CHECK(rep.evaluated == 40);
}

TEST_CASE("post-critical checks pass for rank 2") {
  for (const char* spec : {"A2", "B2", "G2"}) {
    for (long long d : {2, 3}) {
      CAPTURE(std::string(spec));
      CAPTURE(d);
      const RootSystem rs = build_root_system(spec);
      const GeneralizedCosine psi(rs);
      const PostCriticalReport rep = post_critical_check(psi, d, build_cheb_map(rs, d), 50, 1e-7, 8);
      CHECK(rep.passed);
      CHECK(rep.evaluated == 50);
      CHECK(rep.max_det_normalized <= 1e-7);
      CHECK(rep.max_functional_residual <= 1e-8);
      CHECK(rep.critical_values_on_diagram);
    }
  }
}

TEST_CASE("the diagram is invariant under multiplication by d") {
  for (const char* spec : {"A1", "A2", "B2", "G2", "A3"}) {
    for (long long d : {1, 2, 3}) {
      CAPTURE(std::string(spec));
      CAPTURE(d);
      const DiagramInvarianceReport rep =
          diagram_invariance_check(build_root_system(spec), d, 60, 2);
      CHECK(rep.passed);
      CHECK(rep.witnessed == 60);
      CHECK(rep.max_distance < 1e-9);
    }
  }
}

TEST_CASE("deltoid") {
  CHECK(std::abs(deltoid_residual(3.0, 3.0)) < 1e-12);
  // The wall <alpha_1, x> = 0 is x = (s, 2 s); Psi traces 2 e^{i th} + e^{-2 i th}.
  for (int k = 0; k < 50; ++k) {
    const double th = 2.0 * std::numbers::pi * k / 50.0;
    const Complex z = 2.0 * std::exp(Complex(0, th)) + std::exp(Complex(0, -2.0 * th));
    CHECK(std::abs(deltoid_residual(z, std::conj(z))) < 1e-11);
  }
  const GeneralizedCosine psi(build_root_system("A2"));
  const DeltoidReport rep = deltoid_check(psi, 100, 1);
  CHECK(rep.max_on_diagram <= 1e-7);
  CHECK(rep.min_off_diagram > 1e-4);
  CHECK_THROWS_AS(deltoid_check(GeneralizedCosine(build_root_system("B2")), 10), std::invalid_argument);
}
