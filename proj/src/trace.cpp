// Copyright 2026 The orbcorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "orbcorr/trace.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <unordered_map>

#include "orbcorr/errors.hpp"
#include "orbcorr/numeric.hpp"
#include "orbcorr/parallel.hpp"

namespace orbcorr {

namespace detail {

void require_normalized(const SparseWavefunction& wfn, double tol) {
  const double n2 = wfn.norm2();
  if (std::abs(n2 - 1.0) > tol)
    throw NormalizationError("wavefunction norm^2 = " + std::to_string(n2) +
                             " deviates from 1 beyond tolerance");
}

void check_qubit_index(const SparseWavefunction& wfn, int q) {
  if (q < 0 || q >= wfn.n_qubits())
    throw DimensionError("qubit index " + std::to_string(q) + " outside [0, " +
                         std::to_string(wfn.n_qubits()) + ")");
}

}  // namespace detail

void PairProbabilities::add_scaled(const PairProbabilities& other) {
  for (std::size_t k = 0; k < t_.size(); ++k) t_[k] += other.t_[k];
}

PairDensityMatrix pair_density_matrix(const SparseWavefunction& wfn, int i, int j) {
  detail::check_qubit_index(wfn, i);
  detail::check_qubit_index(wfn, j);
  if (i == j) throw ArgumentError("pair indices must differ");
  if (i > j) throw ArgumentError("pair indices must satisfy i < j");
  detail::require_normalized(wfn);

  // Environment key: the determinant with bits i, j cleared.
  std::unordered_map<Determinant, std::array<double, 4>, DeterminantHash> groups;
  groups.reserve(wfn.n_terms());
  for (const auto& t : wfn.terms()) {
    const int slot = (t.det.test(i) ? 2 : 0) | (t.det.test(j) ? 1 : 0);
    Determinant key = t.det;
    key.reset(i);
    key.reset(j);
    auto [it, inserted] = groups.try_emplace(std::move(key), std::array<double, 4>{});
    it->second[static_cast<std::size_t>(slot)] += t.amplitude;
  }

  // Deterministic reduction: keys sorted before accumulating outer products.
  std::vector<const Determinant*> keys;
  keys.reserve(groups.size());
  for (const auto& kv : groups) keys.push_back(&kv.first);
  std::sort(keys.begin(), keys.end(),
            [](const Determinant* a, const Determinant* b) { return *a < *b; });

  PairDensityMatrix out;
  out.i = i;
  out.j = j;
  for (const Determinant* k : keys) {
    const auto& v = groups.find(*k)->second;
    for (int r = 0; r < 4; ++r) {
      if (v[static_cast<std::size_t>(r)] == 0.0) continue;
      for (int c = 0; c < 4; ++c)
        out.m(r, c) += v[static_cast<std::size_t>(r)] * v[static_cast<std::size_t>(c)];
    }
  }
  return out;
}

SingleDensityMatrix single_density_matrix(const SparseWavefunction& wfn, int i) {
  detail::check_qubit_index(wfn, i);
  KahanSum p1;
  for (const auto& t : wfn.terms())
    if (t.det.test(i)) p1.add(t.amplitude * t.amplitude);
  SingleDensityMatrix out;
  out.i = i;
  out.p1 = p1.value();
  out.p0 = 1.0 - out.p1;
  return out;
}

PairProbabilities all_pair_probabilities(const SparseWavefunction& wfn, int n_workers) {
  detail::require_normalized(wfn);
  const int n = wfn.n_qubits();
  const auto& terms = wfn.terms();

  // Fixed number of logical blocks, independent of the worker count, merged
  // in block order: bit-identical results for any parallel configuration.
  constexpr std::size_t kBlocks = 16;
  const bool parallel = n <= 128 && terms.size() >= 2 * kBlocks;
  const std::size_t nblocks = parallel ? kBlocks : 1;
  const std::size_t block_len = (terms.size() + nblocks - 1) / std::max<std::size_t>(nblocks, 1);

  std::vector<PairProbabilities> partial(nblocks, PairProbabilities(n));
  const int workers = resolve_workers(n_workers);

  ORBCORR_PRAGMA_PARALLEL_FOR(workers)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
    auto& table = partial[static_cast<std::size_t>(b)];
    const std::size_t lo = static_cast<std::size_t>(b) * block_len;
    const std::size_t hi = std::min(terms.size(), lo + block_len);
    std::vector<unsigned char> bits(static_cast<std::size_t>(n));
    for (std::size_t k = lo; k < hi; ++k) {
      const auto& t = terms[k];
      const double w = t.amplitude * t.amplitude;
      for (int q = 0; q < n; ++q) bits[static_cast<std::size_t>(q)] = t.det.test(q) ? 1 : 0;
      for (int i = 0; i < n; ++i) {
        const int bi = bits[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j)
          table.at(i, j, bi, bits[static_cast<std::size_t>(j)]) += w;
      }
    }
  }

  PairProbabilities out(n);
  for (const auto& p : partial) out.add_scaled(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int bi = 0; bi < 2; ++bi)
        for (int bj = 0; bj < 2; ++bj) out.at(j, i, bj, bi) = out(i, j, bi, bj);
  return out;
}

OneBodyRDM one_body_rdm(const SparseWavefunction& wfn) {
  detail::require_normalized(wfn);
  if (!wfn.is_number_conserving())
    throw ModelError("one-body RDM requires a fixed electron count; found determinants "
                     "with occupation different from n_alpha + n_beta");
  const int n = wfn.n_qubits();
  const auto& terms = wfn.terms();

  std::unordered_map<Determinant, double, DeterminantHash> amp;
  amp.reserve(terms.size());
  for (const auto& t : terms) amp.emplace(t.det, t.amplitude);

  OneBodyRDM out;
  out.m = Eigen::MatrixXd::Zero(n, n);
  out.n_electrons = wfn.n_electrons();

  for (const auto& t : terms) {
    const double c = t.amplitude;
    const auto occ = t.det.occupied();
    for (int q : occ) out.m(q, q) += c * c;
    for (int l : occ) {
      for (int k = 0; k < n; ++k) {
        if (k == l || t.det.test(k)) continue;
        Determinant moved = t.det;
        moved.reset(l);
        moved.set(k);
        const auto it = amp.find(moved);
        if (it == amp.end()) continue;
        const double sign = (t.det.popcount_between(k, l) & 1) ? -1.0 : 1.0;
        out.m(k, l) += sign * c * it->second;
      }
    }
  }
  return out;
}

double pair_coherence_fermionic(const SparseWavefunction& wfn, int qi, int qj) {
  detail::check_qubit_index(wfn, qi);
  detail::check_qubit_index(wfn, qj);
  if (qi == qj) throw ArgumentError("pair indices must differ");
  if (qi > qj) throw ArgumentError("pair indices must satisfy qi < qj");
  if (wfn.n_qubits() % 2 != 0)
    throw ModelError("fermionic coherence needs an even qubit count (alpha/beta blocks)");
  const int m = wfn.n_qubits() / 2;
  if ((qi < m) != (qj < m))
    throw ArgumentError("fermionic coherence is defined for same-spin qubit pairs");

  std::unordered_map<Determinant, double, DeterminantHash> amp;
  amp.reserve(wfn.n_terms());
  for (const auto& t : wfn.terms()) amp.emplace(t.det, t.amplitude);

  // <psi| a_qj^dag [prod_{qi<q<qj} (1 - 2 n_q)] a_qi |psi>, each factor
  // applied with its own parity count so the cancellation against the
  // trace path emerges from the algebra.
  KahanSum total;
  for (const auto& t : wfn.terms()) {
    if (!t.det.test(qi) || t.det.test(qj)) continue;
    int parity = t.det.popcount_below(qi);  // a_qi
    Determinant d = t.det;
    d.reset(qi);
    parity += d.popcount_between(qi, qj);  // Z string
    parity += d.popcount_below(qj);        // a_qj^dag
    d.set(qj);
    const auto it = amp.find(d);
    if (it == amp.end()) continue;
    const double sign = (parity & 1) ? -1.0 : 1.0;
    total.add(sign * t.amplitude * it->second);
  }
  return total.value();
}

double same_spin_offdiag(const SparseWavefunction& wfn, int i, int j) {
  if (wfn.n_qubits() % 2 != 0)
    throw ModelError("same-spin coherence needs an even qubit count (alpha/beta blocks)");
  const int m = wfn.n_qubits() / 2;
  if (i == j) throw ArgumentError("spatial indices must differ");
  if (i < 0 || j < 0 || i >= m || j >= m)
    throw ArgumentError("spatial indices must lie in the alpha block [0, " +
                        std::to_string(m) + "); use spin symmetry for beta pairs");
  return pair_coherence_fermionic(wfn, std::min(i, j), std::max(i, j));
}

std::vector<double> dense_statevector(const SparseWavefunction& wfn) {
  if (wfn.n_qubits() > 24)
    throw CapacityError("dense statevector limited to 24 qubits, got " +
                        std::to_string(wfn.n_qubits()));
  std::vector<double> psi(std::size_t{1} << wfn.n_qubits(), 0.0);
  for (const auto& t : wfn.terms()) psi[static_cast<std::size_t>(t.det.word(0))] = t.amplitude;
  return psi;
}

}  // namespace orbcorr
