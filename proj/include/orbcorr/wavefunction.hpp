// Copyright 2026 The orbcorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file wavefunction.hpp
 * @brief Sparse wavefunction container, text I/O and chi-truncation.
 *
 * A SparseWavefunction is an ordered list of (determinant, real amplitude)
 * terms over N qubits together with the declared electron counts
 * (n_alpha, n_beta). Determinants are pairwise distinct. The container is
 * immutable after construction and safe for concurrent reads.
 *
 * Text format (UTF-8, line oriented):
 *   line 1:            N N_alpha N_beta
 *   subsequent lines:  <bitstring> <amplitude>
 * with the bitstring N characters of '0'/'1', qubit 0 leftmost. Lines
 * starting with '#' are comments. Term order is file order.
 */

#pragma once

#include <iosfwd>
#include <vector>

#include "orbcorr/determinant.hpp"

namespace orbcorr {

struct WfnTerm {
  Determinant det;
  double amplitude = 0.0;
};

class SparseWavefunction {
 public:
  /// Validates sizes and pairwise-distinct determinants.
  SparseWavefunction(int n_qubits, int n_alpha, int n_beta, std::vector<WfnTerm> terms);

  int n_qubits() const noexcept { return n_qubits_; }
  int n_alpha() const noexcept { return n_alpha_; }
  int n_beta() const noexcept { return n_beta_; }
  int n_electrons() const noexcept { return n_alpha_ + n_beta_; }

  const std::vector<WfnTerm>& terms() const noexcept { return terms_; }
  std::size_t n_terms() const noexcept { return terms_.size(); }

  /// Squared norm, compensated summation.
  double norm2() const noexcept;

  /// Every determinant has exactly n_alpha + n_beta occupied qubits.
  bool is_number_conserving() const noexcept;

  /// Number conserving and, with N = 2M, every determinant has n_alpha
  /// occupied qubits in [0, M) and n_beta in [M, 2M).
  bool is_sz_conserving() const noexcept;

 private:
  int n_qubits_;
  int n_alpha_;
  int n_beta_;
  std::vector<WfnTerm> terms_;
};

/// Parse the text format. Throws ParseError with the offending line number,
/// DimensionError on bitstring length mismatch, DuplicateTermError on a
/// repeated determinant.
SparseWavefunction parse_wavefunction(std::istream& in);

/// Inverse of parse_wavefunction: amplitudes written with 17 significant
/// digits so that parse(write(w)) reproduces w exactly.
void write_wavefunction(std::ostream& out, const SparseWavefunction& wfn);

/// Scale amplitudes to unit norm. Throws DegenerateStateError when the
/// norm is zero (or there are no terms).
SparseWavefunction normalize(const SparseWavefunction& wfn);

/// Keep the min(chi, n_terms) terms of largest |amplitude|; ties broken by
/// determinant bitstring ascending (as unsigned integer, qubit 0 = least
/// significant bit). Relative order of the retained terms is preserved.
SparseWavefunction truncate_top_chi(const SparseWavefunction& wfn, std::size_t chi,
                                    bool renormalize);

}  // namespace orbcorr
