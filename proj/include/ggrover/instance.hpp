#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "ggrover/numerics.hpp"
#include "ggrover/rng.hpp"

namespace ggrover {

/// A search problem: an orthonormal source family spanning the subspace S and
/// a set of computational-basis target indices spanning T. Immutable after
/// construction; safe to share across threads.
class SearchInstance {
 public:
  Eigen::Index dim() const { return sources_.rows(); }
  Eigen::Index num_sources() const { return sources_.cols(); }
  Eigen::Index num_targets() const { return static_cast<Eigen::Index>(targets_.size()); }

  /// D x N matrix whose columns are the orthonormal source states.
  const ComplexMatrix& sources() const { return sources_; }
  StateVector source(Eigen::Index n) const { return sources_.col(n); }

  /// Target indices, ascending.
  const std::vector<Eigen::Index>& targets() const { return targets_; }

  bool is_target(Eigen::Index x) const {
    return x >= 0 && x < dim() && target_mask_[static_cast<std::size_t>(x)] != 0;
  }

  friend SearchInstance make_instance(Eigen::Index d,
                                      const std::vector<StateVector>& raw_sources,
                                      std::vector<Eigen::Index> targets);

 private:
  SearchInstance(ComplexMatrix sources, std::vector<Eigen::Index> targets,
                 std::vector<char> mask)
      : sources_(std::move(sources)),
        targets_(std::move(targets)),
        target_mask_(std::move(mask)) {}

  ComplexMatrix sources_;
  std::vector<Eigen::Index> targets_;
  std::vector<char> target_mask_;
};

/// M x N matrix of source amplitudes on the target indices:
/// entry (i, n) = <t_i|psi_n>. Its singular values are the overlaps c_n.
inline ComplexMatrix target_overlap_matrix(const ComplexMatrix& sources,
                                           const std::vector<Eigen::Index>& targets) {
  ComplexMatrix x(static_cast<Eigen::Index>(targets.size()), sources.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    x.row(i) = sources.row(targets[static_cast<std::size_t>(i)]);
  return x;
}

inline ComplexMatrix target_overlap_matrix(const SearchInstance& inst) {
  return target_overlap_matrix(inst.sources(), inst.targets());
}

/// Validates and builds an instance: orthonormalizes the raw sources, checks
/// that every source meets the target subspace and that no source-span
/// direction lies inside it (all overlaps strictly below 1).
inline SearchInstance make_instance(Eigen::Index d,
                                    const std::vector<StateVector>& raw_sources,
                                    std::vector<Eigen::Index> targets) {
  if (d < 1) throw Error(errc::out_of_range, "make_instance: dimension must be positive");
  if (raw_sources.empty())
    throw Error(errc::out_of_range, "make_instance: need at least one source state");
  if (targets.empty())
    throw Error(errc::out_of_range, "make_instance: need at least one target index");
  for (const StateVector& s : raw_sources)
    if (s.size() != d)
      throw Error(errc::dimension_mismatch, "make_instance: source length differs from dimension");

  std::sort(targets.begin(), targets.end());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= d)
      throw Error(errc::index_out_of_range, "make_instance: target index out of range");
    if (i > 0 && targets[i] == targets[i - 1])
      throw Error(errc::duplicate_target, "make_instance: duplicate target index");
  }

  const Eigen::Index n = static_cast<Eigen::Index>(raw_sources.size());
  const Eigen::Index m = static_cast<Eigen::Index>(targets.size());
  if (n + m > d)
    throw Error(errc::rank_violation,
                "make_instance: N + M exceeds the dimension, joint rank cannot be N+M");

  const std::vector<StateVector> ortho = orthonormalize(raw_sources);
  ComplexMatrix sources(d, n);
  for (Eigen::Index k = 0; k < n; ++k) sources.col(k) = ortho[static_cast<std::size_t>(k)];

  std::vector<char> mask(static_cast<std::size_t>(d), 0);
  for (Eigen::Index t : targets) mask[static_cast<std::size_t>(t)] = 1;

  const ComplexMatrix x = target_overlap_matrix(sources, targets);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (x.col(k).squaredNorm() <= tol::overlap_floor)
      throw Error(errc::orthogonal_to_targets,
                  "make_instance: a source state is orthogonal to the target space");
  }

  const EigenDecomposition core = hermitian_eig(x * x.adjoint());
  const double c_max = std::sqrt(std::max(0.0, core.eigenvalues(m - 1)));
  if (c_max >= 1.0 - tol::rank_margin)
    throw Error(errc::rank_violation,
                "make_instance: a source-span direction lies inside the target span");

  return SearchInstance(std::move(sources), std::move(targets), std::move(mask));
}

/// Rows of the q-fold Hadamard transform: entries (-1)^{popcount(n & x)} / sqrt(D).
inline std::vector<StateVector> hadamard_sources(int qubits,
                                                 const std::vector<Eigen::Index>& indices) {
  if (qubits < 1 || qubits > 30)
    throw Error(errc::out_of_range, "hadamard_sources: qubit count out of range");
  const Eigen::Index d = Eigen::Index{1} << qubits;
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<Eigen::Index> seen = indices;
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] < 0 || seen[i] >= d)
      throw Error(errc::index_out_of_range, "hadamard_sources: index out of range");
    if (i > 0 && seen[i] == seen[i - 1])
      throw Error(errc::duplicate_source_index, "hadamard_sources: duplicate index");
  }
  std::vector<StateVector> out;
  out.reserve(indices.size());
  for (Eigen::Index n : indices) {
    StateVector v(d);
    for (Eigen::Index x = 0; x < d; ++x) {
      const int parity = std::popcount(static_cast<std::uint64_t>(n & x)) & 1;
      v(x) = Complex(parity ? -amp : amp, 0.0);
    }
    out.push_back(std::move(v));
  }
  return out;
}

/// N orthonormal vectors from standard complex Gaussian draws; deterministic
/// given the seed. Retries fresh draws (new substream) up to 8 times if a
/// draw comes out rank deficient.
inline std::vector<StateVector> random_orthonormal_sources(Eigen::Index d, Eigen::Index n,
                                                           std::uint64_t seed) {
  if (n < 1 || n > d)
    throw Error(errc::out_of_range, "random_orthonormal_sources: need 1 <= N <= D");
  for (std::uint64_t attempt = 0; attempt < 8; ++attempt) {
    Rng rng = Rng::substream(seed, attempt);
    std::vector<StateVector> raw;
    raw.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index k = 0; k < n; ++k) {
      StateVector v(d);
      for (Eigen::Index i = 0; i < d; ++i) v(i) = rng.complex_gaussian();
      raw.push_back(std::move(v));
    }
    try {
      return orthonormalize(raw);
    } catch (const Error& e) {
      if (e.code() != errc::rank_deficient || attempt == 7) throw;
    }
  }
  throw Error(errc::rank_deficient, "random_orthonormal_sources: exhausted retries");
}

/// Oracle reflection O = 1 - 2 P_T: negates amplitudes on target indices.
inline StateVector oracle_apply(const SearchInstance& inst, const StateVector& state) {
  if (state.size() != inst.dim())
    throw Error(errc::dimension_mismatch, "oracle_apply: state length differs from dimension");
  StateVector out = state;
  for (Eigen::Index t : inst.targets()) out(t) = -out(t);
  return out;
}

/// Grover reflection G = 1 - 2 P_S, evaluated through the N source inner
/// products (O(ND)); no dense D x D operator is ever formed.
inline StateVector grover_reflect(const SearchInstance& inst, const StateVector& state) {
  if (state.size() != inst.dim())
    throw Error(errc::dimension_mismatch, "grover_reflect: state length differs from dimension");
  const Eigen::VectorXcd coeff = inst.sources().adjoint() * state;
  return state - 2.0 * (inst.sources() * coeff);
}

/// Dense H = P_S + P_T. Intended for verification at small D; the evolution
/// and iteration paths never build it.
inline ComplexMatrix build_hamiltonian(const SearchInstance& inst) {
  ComplexMatrix h = inst.sources() * inst.sources().adjoint();
  for (Eigen::Index t : inst.targets()) h(t, t) += 1.0;
  return h;
}

}  // namespace ggrover
