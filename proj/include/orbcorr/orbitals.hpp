// Copyright 2026 The orbcorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file orbitals.hpp
 * @brief Orbital rotation of integrals, natural-orbital extraction, and the
 *        iterative natural-orbital (INO) loop.
 *
 * Natural orbitals are spin-traced spatial orbitals (restricted regime):
 * the spatial RDM is the alpha block plus the beta block of the
 * spin-orbital one-body RDM, and the same rotation is applied to both spin
 * channels. The full-CI energy is invariant under these rotations; only the
 * determinant expansion of the state changes.
 */

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "orbcorr/fci.hpp"
#include "orbcorr/hamiltonian.hpp"
#include "orbcorr/trace.hpp"
#include "orbcorr/wavefunction.hpp"

namespace orbcorr {

/// Real orthogonal M x M matrix; columns are the new orbitals expressed in
/// the old basis.
struct OrbitalRotation {
  Eigen::MatrixXd u;

  /// Max |u^T u - I| entry.
  double orthogonality_defect() const;
};

/// h1' = u^T h1 u and the four-index transform of the two-electron
/// integrals, staged one index at a time (four O(M^5) passes) with the
/// 8-fold symmetry restored at the end; e_core unchanged. Throws
/// ArgumentError when u is not orthogonal within 1e-8.
Hamiltonian rotate_integrals(const Hamiltonian& h, const OrbitalRotation& rot,
                             int n_workers = 0);

struct NaturalOrbitals {
  OrbitalRotation rotation;
  /// Descending spatial occupation numbers, in [0, 2].
  Eigen::VectorXd occupations;
  /// Some occupation numbers coincide within 1e-10; the rotation within
  /// such a block is arbitrary.
  bool degenerate = false;
};

/// Eigenvectors of the spin-traced spatial RDM, columns sorted by
/// descending occupation, each column's largest-magnitude entry made
/// positive. Throws ArgumentError if the RDM is asymmetric beyond 1e-8.
NaturalOrbitals natural_orbitals(const OneBodyRDM& rdm);

struct InoIteration {
  int iteration = 0;
  double energy = 0.0;
  double gamma = 0.0;
  double l1_percent = 0.0;
  bool l1_defined = false;
  bool degenerate_ground_state = false;
  bool degenerate_occupations = false;
};

struct InoTrace {
  std::vector<InoIteration> iterations;
  bool converged = false;
  /// Gamma increased in two consecutive iterations at some point.
  bool oscillation = false;
};

struct InoOptions {
  double gamma_tol = 1e-8;
  int max_iterations = 10;
  SolverOptions solver;
  int n_workers = 0;
};

struct InoResult {
  Hamiltonian h_final;
  SparseWavefunction wfn_final;
  InoTrace trace;
};

/// Repeat { solve FCI -> spin-orbital 1-RDM -> natural orbitals -> rotate
/// integrals } until gamma < gamma_tol or max_iterations. Records energy,
/// gamma and L1 per iteration; gamma increasing twice in a row sets the
/// oscillation flag but the loop continues.
InoResult ino_loop(const Hamiltonian& h, int n_alpha, int n_beta, const InoOptions& opts = {});

}  // namespace orbcorr
