#pragma once

#include <complex>

#include <Eigen/Dense>

namespace ggrover {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double pi = 3.141592653589793238462643383279502884;

/// Central tolerance knobs. Property tests key off these values, so changing
/// one here retunes every check that depends on it.
namespace tol {
inline constexpr double hermiticity = 1e-10;     // max |H - H'| accepted as Hermitian
inline constexpr double rank_pivot = 1e-10;      // Gram-Schmidt pivot floor
inline constexpr double reconstruction = 1e-9;   // eigendecomposition residual budget
inline constexpr double gram = 1e-12;            // orthonormality residual budget
inline constexpr double zero_mode = 1e-12;       // eigenvalues of P_T P_S P_T below this count as c = 0
inline constexpr double rank_margin = 1e-10;     // overlaps must stay below 1 - rank_margin
inline constexpr double overlap_floor = 1e-12;   // per-source target overlap must exceed this
inline constexpr double empty_branch = 1e-15;    // branch norm below this counts as absent
}  // namespace tol

inline double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// max-entry deviation from H = H'.
inline double hermiticity_residual(const ComplexMatrix& m) {
  return max_abs(m - m.adjoint());
}

}  // namespace ggrover
