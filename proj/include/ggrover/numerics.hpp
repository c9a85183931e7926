#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "ggrover/error.hpp"
#include "ggrover/types.hpp"

namespace ggrover {

/// Hermitian eigendecomposition, eigenvalues ascending, eigenvector columns
/// unitary and in matching order.
struct EigenDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

namespace detail {

// Rotate v so its largest-magnitude component is real and nonnegative.
inline void canonical_phase(Eigen::Ref<Eigen::VectorXcd> v) {
  Eigen::Index pivot = 0;
  v.cwiseAbs().maxCoeff(&pivot);
  const double mag = std::abs(v(pivot));
  if (mag > 0.0) v *= std::conj(v(pivot)) / mag;
}

// Lexicographic (re, im) comparison of columns after normalizing each so its
// first non-negligible component is real positive; used only to order exact
// eigenvalue ties deterministically.
inline bool lex_less(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  auto first_phase = [](const Eigen::VectorXcd& v) -> Complex {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      const double mag = std::abs(v(i));
      if (mag > tol::rank_pivot) return std::conj(v(i)) / mag;
    }
    return {1.0, 0.0};
  };
  const Complex pa = first_phase(a);
  const Complex pb = first_phase(b);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const Complex x = pa * a(i);
    const Complex y = pb * b(i);
    if (x.real() != y.real()) return x.real() < y.real();
    if (x.imag() != y.imag()) return x.imag() < y.imag();
  }
  return false;
}

}  // namespace detail

/// Dense Hermitian eigendecomposition. Deterministic for identical input:
/// ascending eigenvalues, exact ties ordered by eigenvector lexicographic
/// comparison, each returned eigenvector phase-rotated so its
/// largest-magnitude component is real and nonnegative.
inline EigenDecomposition hermitian_eig(const ComplexMatrix& m) {
  if (m.rows() != m.cols())
    throw Error(errc::non_square, "hermitian_eig: matrix is not square");
  if (!m.allFinite())
    throw Error(errc::numerical_failure, "hermitian_eig: non-finite entries");
  if (hermiticity_residual(m) > tol::hermiticity)
    throw Error(errc::non_hermitian, "hermitian_eig: symmetry residual exceeds tolerance");

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (m + m.adjoint()));
  if (solver.info() != Eigen::Success)
    throw Error(errc::numerical_failure, "hermitian_eig: eigensolver did not converge");

  EigenDecomposition out{solver.eigenvalues(), solver.eigenvectors()};

  std::vector<Eigen::Index> order(static_cast<std::size_t>(m.rows()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    if (out.eigenvalues(i) != out.eigenvalues(j))
      return out.eigenvalues(i) < out.eigenvalues(j);
    return detail::lex_less(out.eigenvectors.col(i), out.eigenvectors.col(j));
  });

  EigenDecomposition sorted;
  sorted.eigenvalues.resize(m.rows());
  sorted.eigenvectors.resize(m.rows(), m.cols());
  for (Eigen::Index k = 0; k < m.rows(); ++k) {
    sorted.eigenvalues(k) = out.eigenvalues(order[static_cast<std::size_t>(k)]);
    sorted.eigenvectors.col(k) = out.eigenvectors.col(order[static_cast<std::size_t>(k)]);
    detail::canonical_phase(sorted.eigenvectors.col(k));
  }
  return sorted;
}

/// Two-pass modified Gram-Schmidt. Output Gram matrix is the identity to
/// machine precision and each output lies in the span of the inputs.
/// Already-orthonormal input passes through (no phase changes).
inline std::vector<StateVector> orthonormalize(const std::vector<StateVector>& vectors) {
  std::vector<StateVector> out;
  out.reserve(vectors.size());
  for (const StateVector& input : vectors) {
    if (!vectors.empty() && input.size() != vectors.front().size())
      throw Error(errc::dimension_mismatch, "orthonormalize: mixed vector lengths");
    StateVector v = input;
    for (int pass = 0; pass < 2; ++pass)
      for (const StateVector& basis : out) v -= basis.dot(v) * basis;
    const double norm = v.norm();
    if (norm < tol::rank_pivot)
      throw Error(errc::rank_deficient, "orthonormalize: pivot norm below tolerance");
    out.push_back(v / norm);
  }
  return out;
}

/// Probability weight of `state` inside the target index set: sum of
/// |amplitude|^2 over the listed basis indices.
inline double target_projection_norm(const StateVector& state,
                                     std::span<const Eigen::Index> targets) {
  double total = 0.0;
  for (Eigen::Index x : targets) {
    if (x < 0 || x >= state.size())
      throw Error(errc::index_out_of_range, "target_projection_norm: index out of range");
    total += std::norm(state(x));
  }
  return total;
}

}  // namespace ggrover
