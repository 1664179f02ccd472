// Copyright 2026 The orbcorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// Test-only helpers: random state generators and independent dense oracles.
// The oracles work on the full 2^N statevector and share no code with the
// sparse kernels they check.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <random>
#include <vector>

#include "orbcorr/fci.hpp"
#include "orbcorr/trace.hpp"
#include "orbcorr/wavefunction.hpp"

namespace testsupport {

using orbcorr::Determinant;
using orbcorr::SparseWavefunction;
using orbcorr::WfnTerm;

/// Random state over arbitrary bitstrings (no conservation law).
inline SparseWavefunction random_state(int n_qubits, std::size_t n_terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << n_qubits) - 1);
  std::normal_distribution<double> amp(0.0, 1.0);
  std::vector<std::uint64_t> picked;
  while (picked.size() < n_terms) {
    const auto b = bits(rng);
    if (std::find(picked.begin(), picked.end(), b) == picked.end()) picked.push_back(b);
  }
  std::vector<WfnTerm> terms;
  int total = 0;
  for (auto b : picked) {
    Determinant d(n_qubits);
    for (int q = 0; q < n_qubits; ++q)
      if ((b >> q) & 1) d.set(q);
    total = d.popcount();
    terms.push_back({std::move(d), amp(rng)});
  }
  // Declared counts are metadata only here; clamp to something legal.
  const int na = std::min(total, n_qubits);
  return orbcorr::normalize(SparseWavefunction(n_qubits, na, 0, std::move(terms)));
}

/// Random particle/Sz-conserving state in the (n_alpha, n_beta) sector of
/// M spatial orbitals (N = 2M qubits).
inline SparseWavefunction random_sector_state(int m, int n_alpha, int n_beta,
                                              std::size_t n_terms, std::mt19937_64& rng) {
  const auto basis = orbcorr::enumerate_basis(m, n_alpha, n_beta);
  std::vector<std::size_t> idx(basis.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::shuffle(idx.begin(), idx.end(), rng);
  const std::size_t keep = std::min(n_terms, basis.size());
  std::normal_distribution<double> amp(0.0, 1.0);
  std::vector<WfnTerm> terms;
  for (std::size_t k = 0; k < keep; ++k) terms.push_back({basis.dets[idx[k]], amp(rng)});
  return orbcorr::normalize(
      SparseWavefunction(2 * m, n_alpha, n_beta, std::move(terms)));
}

/// Dense-statevector partial trace onto qubits {i, j}, i < j; basis
/// (|00>,|01>,|10>,|11>) with the first bit = qubit i.
inline Eigen::Matrix4d dense_pair_trace(const std::vector<double>& psi, int n, int i, int j) {
  Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();
  const std::size_t size = std::size_t{1} << n;
  for (std::size_t x = 0; x < size; ++x) {
    if (psi[x] == 0.0) continue;
    const int xb = static_cast<int>(((x >> i) & 1) << 1 | ((x >> j) & 1));
    for (std::size_t y = 0; y < size; ++y) {
      if (psi[y] == 0.0) continue;
      const std::size_t mask = (std::size_t{1} << i) | (std::size_t{1} << j);
      if ((x & ~mask) != (y & ~mask)) continue;
      const int yb = static_cast<int>(((y >> i) & 1) << 1 | ((y >> j) & 1));
      rho(xb, yb) += psi[x] * psi[y];
    }
  }
  return rho;
}

/// Dense single-qubit reduced density matrix (including any coherence).
inline Eigen::Matrix2d dense_single_trace(const std::vector<double>& psi, int n, int i) {
  Eigen::Matrix2d rho = Eigen::Matrix2d::Zero();
  const std::size_t size = std::size_t{1} << n;
  const std::size_t mask = std::size_t{1} << i;
  for (std::size_t x = 0; x < size; ++x) {
    if (psi[x] == 0.0) continue;
    for (int b = 0; b < 2; ++b) {
      const std::size_t y = b ? (x | mask) : (x & ~mask);
      rho(static_cast<int>((x >> i) & 1), b) += psi[x] * psi[y];
    }
  }
  return rho;
}

/// Dense second-quantized <a_k^dag a_l> via explicit operator action on the
/// statevector, with Jordan-Wigner parity from the occupations below the
/// touched qubit.
inline Eigen::MatrixXd dense_one_body_rdm(const std::vector<double>& psi, int n) {
  Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(n, n);
  const std::size_t size = std::size_t{1} << n;
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      double acc = 0.0;
      for (std::size_t x = 0; x < size; ++x) {
        if (psi[x] == 0.0) continue;
        // a_l
        if (!((x >> l) & 1)) continue;
        std::size_t y = x & ~(std::size_t{1} << l);
        int parity = std::popcount(y & ((std::size_t{1} << l) - 1));
        // a_k^dag
        if ((y >> k) & 1) continue;
        parity += std::popcount(y & ((std::size_t{1} << k) - 1));
        y |= std::size_t{1} << k;
        acc += (parity & 1 ? -1.0 : 1.0) * psi[y] * psi[x];
      }
      rho(k, l) = acc;
    }
  return rho;
}

/// Deterministic random orthogonal matrix (QR of a random Gaussian matrix
/// with a sign-fixed R diagonal).
inline Eigen::MatrixXd random_orthogonal(int m, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXd a(m, m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) a(r, c) = g(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < m; ++c)
    if (r(c, c) < 0) q.col(c) = -q.col(c);
  return q;
}

}  // namespace testsupport
