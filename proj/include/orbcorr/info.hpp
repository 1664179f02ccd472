// Copyright 2026 The orbcorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file info.hpp
 * @brief Entropies, mutual-information matrices, the measurement channel,
 *        and the scalar metrics L1 and gamma.
 *
 * All entropies are in natural-log units (nats). Ratio-type outputs (L1)
 * are base-invariant.
 *
 * The quantum mutual information of a qubit pair is
 * S(i) + S(j) - S(ij) over traced density matrices; the classical (Shannon)
 * value is the same combination over the diagonal joint distribution and
 * its marginals. Dephasing cannot increase mutual information, so
 * I_vN >= I_Sh holds pairwise, with equality for diagonal pair matrices.
 */

#pragma once

#include <Eigen/Dense>
#include <limits>
#include <span>
#include <vector>

#include "orbcorr/trace.hpp"
#include "orbcorr/wavefunction.hpp"

namespace orbcorr {

/// -sum lambda ln lambda over the eigenvalues of a small density matrix,
/// eigenvalues clamped to [0, 1], 0 ln 0 := 0. Requires unit trace within
/// 1e-6 (NormalizationError) and eigenvalues >= -1e-8 (ModelError).
double von_neumann_entropy(const Eigen::MatrixXd& dm);

/// -sum p ln p with 0 ln 0 := 0. Requires entries >= -1e-12 and unit sum
/// within 1e-6.
double shannon_entropy(std::span<const double> p);

/// Orthogonal-measurement channel: zero the off-diagonal, keep the diagonal.
Eigen::MatrixXd measurement_channel(const Eigen::MatrixXd& dm);

/// Dephase only one qubit of a two-qubit density matrix (0 = first bit of
/// the pair basis, 1 = second): entries where that qubit's bit differs
/// between row and column are zeroed.
Eigen::Matrix4d dephase_pair_qubit(const Eigen::Matrix4d& dm, int which);

/// Marginal of a two-qubit density matrix onto its first / second qubit.
Eigen::Matrix2d pair_marginal(const Eigen::Matrix4d& dm, int which);

/// Mutual information S(A) + S(B) - S(AB) of an arbitrary two-qubit
/// density matrix (marginals by partial trace). Exact for any state.
double pair_mutual_information(const Eigen::Matrix4d& dm);

struct PairMutualInformation {
  double quantum = 0.0;
  double classical = 0.0;
};

/// Quantum and classical mutual information of qubit pair (i, j).
/// Requires a normalized, particle-number-conserving wavefunction (the
/// single-qubit matrices are diagonal only in that regime).
PairMutualInformation mutual_information_pair(const SparseWavefunction& wfn, int i, int j);

/// Symmetric N x N matrices of pairwise mutual information. Diagonal
/// entries are undefined and stored as NaN, never 0.
struct MutualInformationMatrix {
  int n = 0;
  Eigen::MatrixXd quantum;
  Eigen::MatrixXd classical;

  static constexpr double undefined() { return std::numeric_limits<double>::quiet_NaN(); }
};

/// Fill both matrices for all pairs, parallel over pairs with one isolated
/// accumulator per pair and a deterministic merge.
MutualInformationMatrix mutual_information_matrix(const SparseWavefunction& wfn,
                                                  int n_workers = 0);

/// 100 * sum_{i<j} (I_vN - I_Sh) / sum_{i<j} I_vN. Throws
/// UndefinedMetricError when the quantum total is zero.
double l1_metric(const MutualInformationMatrix& mi);

/// (1 / n_electrons) * sum_{k != l} |rdm(k,l)| over the spin-orbital
/// one-body RDM. Throws ConsistencyError if the RDM trace and electron
/// count disagree beyond 1e-6.
double gamma_metric(const OneBodyRDM& rdm, int n_electrons);

/// Full analysis product: matrices, per-qubit entropies, descending sorted
/// curves, the L1 and gamma scalars, and the top-min(100, N) qubits by
/// entropy (ties broken by ascending index).
struct CorrelationReport {
  MutualInformationMatrix mi;
  std::vector<double> entropies_vn;
  std::vector<double> entropies_sh;
  double l1_percent = MutualInformationMatrix::undefined();
  bool l1_defined = false;
  double gamma = MutualInformationMatrix::undefined();
  bool gamma_defined = false;
  std::vector<double> sorted_mi_quantum;
  std::vector<double> sorted_mi_classical;
  /// Elementwise sorted_mi_classical - sorted_mi_quantum, the plotted
  /// difference curve.
  std::vector<double> sorted_mi_diff;
  std::vector<double> sorted_entropy;
  std::vector<int> top_entropy_qubits;
};

CorrelationReport build_report(const SparseWavefunction& wfn, int n_workers = 0);

}  // namespace orbcorr
