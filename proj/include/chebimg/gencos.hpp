#pragma once

// The generalized cosine Psi : C^n -> C^n, psi_k(x) = sum over the W-orbit of
// omega_k of exp(2 pi i <lambda, x>), with x in simple-coroot coordinates.

#include "chebimg/continuation.hpp"
#include "chebimg/rootsys.hpp"

#include <Eigen/Dense>

#include <vector>

namespace chebimg {

class GeneralizedCosine {
 public:
  explicit GeneralizedCosine(RootSystem rs);

  const RootSystem& root_system() const { return rs_; }
  int rank() const { return rs_.rank; }
  const std::vector<IntVector>& fundamental_orbit(int k) const { return orbits_[k]; }

  ComplexVector eval(const ComplexVector& x) const;
  // entry (k, j) = 2 pi i sum_{lambda in W omega_k} lambda_j exp(2 pi i <lambda, x>)
  Eigen::MatrixXcd jacobian(const ComplexVector& x) const;

 private:
  // exp(2 pi i <lambda, x>) for each lambda of orbit k, via the pairing kernel.
  void orbit_exponentials(int k, const ComplexVector& x, std::vector<Complex>& out) const;

  RootSystem rs_;
  std::vector<std::vector<IntVector>> orbits_;
  std::vector<std::vector<double>> orbit_columns_;  // column-major weights per orbit
};

ComplexVector eval_psi(const GeneralizedCosine& psi, const ComplexVector& x);

// Stabilizer-normalized sum over the whole Weyl group.
ComplexVector eval_psi_fullsum(const RootSystem& rs, const std::vector<WeylElement>& weyl,
                               const ComplexVector& x);
ComplexVector eval_psi_fullsum(const RootSystem& rs, const ComplexVector& x,
                               std::size_t cap = kDefaultWeylCap);

Eigen::MatrixXcd jacobian_psi(const GeneralizedCosine& psi, const ComplexVector& x);

// |det J| / max(1, product of the row norms of J). Scale-free for large
// entries; for tiny rows it falls back to |det J| itself.
double normalized_determinant(const Eigen::MatrixXcd& j);

struct DiagramHit {
  bool on_diagram = false;
  std::size_t root_index = 0;  // index into RootSystem::roots
  long long ell = 0;
  double distance = 0.0;       // |<v, x> - ell|
};

// Searches positive roots; ell is the integer nearest Re <v, x>.
DiagramHit is_on_diagram(const RootSystem& rs, const ComplexVector& x, double tol);
// Same test restricted to a single root.
DiagramHit wall_witness(const RootSystem& rs, std::size_t root_index, const ComplexVector& x,
                        double tol);
// min over positive roots of |<v, x> - round(Re <v, x>)|
double diagram_distance(const RootSystem& rs, const ComplexVector& x);

// sum_k omega_k in coroot coordinates; lies in the open fundamental chamber.
RationalVector regular_direction(const RootSystem& rs);
RationalVector fundamental_weight_in_coroots(const RootSystem& rs, int k);

ComplexVector to_complex(const RationalVector& x);

// Lift target through Psi starting at y_start. Corrector moves are bounded
// by half the distance to the Cartan-Stiefel diagram so a step cannot jump
// to another sheet.
PathSample lift_path_psi(const GeneralizedCosine& psi, const PathFunction& target,
                         const ComplexVector& y_start, const LiftSettings& settings = {});
PathSample lift_path_psi(const GeneralizedCosine& psi, const PathSample& target,
                         const ComplexVector& y_start, const LiftSettings& settings = {});

// Finds g with g . y0 = y1 up to tol by trying every Weyl part and rounding
// the translation.
AffineElement deck_identify(const RootSystem& rs, const std::vector<WeylElement>& weyl,
                            const ComplexVector& y0, const ComplexVector& y1, double tol);
AffineElement deck_identify(const RootSystem& rs, const ComplexVector& y0,
                            const ComplexVector& y1, double tol,
                            std::size_t cap = kDefaultWeylCap);

}  // namespace chebimg
