// Copyright 2026 The orbcorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fci.hpp
 * @brief Desk-scale exact diagonalization: sector basis enumeration and the
 *        lowest eigenpair via dense diagonalization or Davidson iteration.
 */

#pragma once

#include <vector>

#include "orbcorr/hamiltonian.hpp"
#include "orbcorr/wavefunction.hpp"

namespace orbcorr {

/// All determinants of the (n_alpha, n_beta) sector of M spatial orbitals,
/// enumerated as alpha-strings x beta-strings in ascending bitstring order.
struct CIBasis {
  int n_spatial = 0;
  int n_alpha = 0;
  int n_beta = 0;
  std::vector<Determinant> dets;

  std::size_t size() const noexcept { return dets.size(); }
};

inline constexpr std::size_t kMaxBasisSize = 1000000;

/// Throws CapacityError when the sector exceeds kMaxBasisSize determinants
/// (or M > 64).
CIBasis enumerate_basis(int m, int n_alpha, int n_beta);

struct SolverOptions {
  /// Densely diagonalize when the basis is at most this large; Davidson
  /// above. The dense path is capped at 20000 regardless.
  std::size_t dense_threshold = 1500;
  double residual_tol = 1e-9;
  int max_iterations = 300;
  int max_subspace = 32;
  double degeneracy_tol = 1e-8;
  int n_workers = 0;
};

struct GroundStateResult {
  double energy = 0.0;
  SparseWavefunction wfn;
  /// Gap to the second root (exact on the dense path, subspace estimate on
  /// the Davidson path; infinite for a 1-dimensional sector).
  double gap = 0.0;
  bool degenerate = false;
  bool used_davidson = false;
  int iterations = 0;
  double residual = 0.0;
};

/// Lowest eigenpair of the (n_alpha, n_beta) sector. The wavefunction is
/// normalized with a deterministic global sign: the largest-|c| coefficient
/// is positive (ties by lowest basis index). Throws ConvergenceError with
/// the residual when Davidson fails to converge.
GroundStateResult ground_state(const Hamiltonian& h, int n_alpha, int n_beta,
                               const SolverOptions& opts = {});

}  // namespace orbcorr
