// Copyright 2026 The orbcorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file hamiltonian.hpp
 * @brief Second-quantized Hamiltonian over M spatial orbitals and
 *        Slater-Condon matrix elements between determinants.
 *
 * Integrals are spin-free: h1 is the M x M one-electron matrix and eri the
 * two-electron integrals (pq|rs) in chemists' notation with 8-fold
 * permutational symmetry, all in hartree. Determinants live over N = 2M
 * qubits in the blocked alpha/beta layout.
 */

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "orbcorr/determinant.hpp"

namespace orbcorr {

struct Hamiltonian {
  int n_spatial = 0;
  Eigen::MatrixXd h1;
  std::vector<double> eri;  // dense M^4, chemists' (pq|rs)
  double e_core = 0.0;

  explicit Hamiltonian(int m);
  Hamiltonian() = default;

  double eri_at(int p, int q, int r, int s) const noexcept {
    const std::size_t m = static_cast<std::size_t>(n_spatial);
    return eri[((static_cast<std::size_t>(p) * m + static_cast<std::size_t>(q)) * m +
                static_cast<std::size_t>(r)) *
                   m +
               static_cast<std::size_t>(s)];
  }

  /// Store v at (pq|rs) and all 8 permutation images.
  void set_eri(int p, int q, int r, int s, double v);

  /// Max deviation from h1 symmetry and eri 8-fold symmetry.
  double symmetry_defect() const;
};

/// 1-D Hubbard model: h1 = -t on nearest-neighbour bonds, (pp|pp) = u.
Hamiltonian hubbard_hamiltonian(int sites, double t, double u, bool periodic);

/// <d1|H|d2> by the Slater-Condon rules, including fermionic phases and
/// e_core on the diagonal; zero when the excitation degree exceeds 2.
double hamiltonian_element(const Hamiltonian& h, const Determinant& d1, const Determinant& d2);

/// Diagonal element <d|H|d> (fast path used to precondition the solver).
double hamiltonian_diagonal(const Hamiltonian& h, const Determinant& d);

}  // namespace orbcorr
