// Copyright 2026 The orbcorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fcidump.hpp
 * @brief FCIDUMP text interchange format for molecular integrals.
 *
 * Namelist header `&FCI NORB=<M>,NELEC=<n>,MS2=<2Sz>,` with optional
 * ORBSYM/ISYM entries, terminated by `&END` or `/`. Body lines are
 * `<value> <i> <j> <k> <l>` with 1-based indices in chemists' notation:
 * (ij|kl) two-electron integrals, `<value> i j 0 0` one-electron h_ij,
 * `<value> 0 0 0 0` the core energy. The parser completes the 8-fold
 * permutational symmetry from the stored unique values; the writer emits
 * only symmetry-unique values.
 */

#pragma once

#include <iosfwd>
#include <vector>

#include "orbcorr/hamiltonian.hpp"

namespace orbcorr {

struct Fcidump {
  Hamiltonian hamiltonian;
  int nelec = 0;
  int ms2 = 0;
  /// Parsed but not used; point-group symmetry is out of scope.
  std::vector<int> orbsym;
};

/// Throws FormatError on a missing/invalid header or unsupported index
/// pattern, DimensionError when an index exceeds NORB.
Fcidump read_fcidump(std::istream& in);

void write_fcidump(std::ostream& out, const Hamiltonian& h, int nelec, int ms2);

}  // namespace orbcorr
