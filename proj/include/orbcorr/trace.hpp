// Copyright 2026 The orbcorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file trace.hpp
 * @brief Sparse partial-trace kernels for one- and two-qubit traced density
 *        matrices, the one-body reduced density matrix, and a dense
 *        statevector oracle.
 *
 * The two-qubit kernel groups terms by environment key (the bitstring with
 * the pair positions masked to zero), accumulates a 4-component local
 * amplitude vector per group and sums outer products over groups — O(chi)
 * time and O(#distinct environments) space per pair. Group keys are sorted
 * before the final reduction so results are bit-identical for any worker
 * count or term order.
 *
 * Two distinct "reduced density matrix" notions live here. The traced
 * matrices (PairDensityMatrix, SingleDensityMatrix) are qubit-space partial
 * traces of |psi><psi|. The OneBodyRDM is the fermionic matrix
 * <a_k^dag a_l> over spin-orbitals; its off-diagonals carry fermionic
 * parity signs absent from the qubit-space traces.
 */

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "orbcorr/wavefunction.hpp"

namespace orbcorr {

/// Two-qubit traced density matrix for qubit pair i < j, in the basis
/// (|00>, |01>, |10>, |11>) with the first bit belonging to qubit i.
struct PairDensityMatrix {
  int i = 0;
  int j = 0;
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
};

/// Single-qubit traced density matrix. For particle-number-conserving
/// states the coherence <0|rho|1> vanishes identically (fermion-parity
/// mismatch), so only the diagonal is stored.
struct SingleDensityMatrix {
  int i = 0;
  double p0 = 1.0;
  double p1 = 0.0;
};

/// Fermionic one-body reduced density matrix, entry (k,l) = <a_k^dag a_l>
/// over the N spin-orbitals / qubits.
struct OneBodyRDM {
  Eigen::MatrixXd m;
  int n_electrons = 0;
};

/// Joint two-bit occupation probabilities for every qubit pair:
/// entry (i, j, b_i, b_j) = sum of c^2 over terms with those bits.
class PairProbabilities {
 public:
  explicit PairProbabilities(int n) : n_(n), t_(static_cast<std::size_t>(n) * n * 4, 0.0) {}

  int n() const noexcept { return n_; }

  double operator()(int i, int j, int bi, int bj) const noexcept {
    return t_[idx(i, j, bi, bj)];
  }
  double& at(int i, int j, int bi, int bj) noexcept { return t_[idx(i, j, bi, bj)]; }

  void add_scaled(const PairProbabilities& other);

 private:
  std::size_t idx(int i, int j, int bi, int bj) const noexcept {
    return ((static_cast<std::size_t>(i) * n_ + j) << 2) | (bi << 1) | bj;
  }
  int n_;
  std::vector<double> t_;
};

/// Partial trace of |psi><psi| onto qubits {i, j}, i < j. Requires a
/// normalized wavefunction.
PairDensityMatrix pair_density_matrix(const SparseWavefunction& wfn, int i, int j);

/// Diagonal single-qubit traced matrix: p1 = sum of c^2 over terms with
/// bit i set, p0 = 1 - p1.
SingleDensityMatrix single_density_matrix(const SparseWavefunction& wfn, int i);

/// Joint occupation probabilities for all pairs i != j in one sweep over
/// the terms. Work is split into fixed-size blocks merged in block order,
/// so the result does not depend on the worker count.
PairProbabilities all_pair_probabilities(const SparseWavefunction& wfn, int n_workers = 0);

/// <a_k^dag a_l> over all spin-orbitals. Off-diagonal (k,l) accumulates
/// sign * c_d * c_d' over term pairs where d' is d with occupied l moved
/// to empty k, sign = (-1)^(occupied qubits strictly between k and l).
/// Requires a normalized, particle-number-conserving wavefunction.
OneBodyRDM one_body_rdm(const SparseWavefunction& wfn);

/// Fermionic-path evaluation of the pair coherence <01|rho_{qi,qj}|10> for
/// two same-spin qubits qi < qj: the expectation of a_qj^dag a_qi dressed
/// with the Jordan-Wigner parity string over the qubits strictly between
/// qi and qj, evaluated with explicit sign bookkeeping. Equality with
/// pair_density_matrix(qi,qj).m(1,2) is the module's cross-validation; a
/// discrepancy beyond tolerance is a test failure, not a warning.
///
/// In site-interleaved orderings of the literature the string reduces to
/// the opposite-spin-partner factor (1 - 2 n_jbar); under the blocked
/// layout used here it runs over the same-spin orbitals between i and j.
double pair_coherence_fermionic(const SparseWavefunction& wfn, int qi, int qj);

/// Spatial-orbital front end for pair_coherence_fermionic: i, j are alpha
/// spatial indices in [0, M), M = N/2. Beta-block values follow by spin
/// symmetry. Throws ArgumentError for i == j or indices outside the alpha
/// block.
double same_spin_offdiag(const SparseWavefunction& wfn, int i, int j);

/// Dense statevector oracle, N <= 24: amplitude at index sum(bit_q 2^q)
/// equals the term amplitude, zero elsewhere.
std::vector<double> dense_statevector(const SparseWavefunction& wfn);

namespace detail {
/// Throws NormalizationError unless |norm^2 - 1| <= tol.
void require_normalized(const SparseWavefunction& wfn, double tol = 1e-6);
}  // namespace detail

}  // namespace orbcorr
