// Copyright 2026 The orbcorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "orbcorr/info.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "orbcorr/errors.hpp"
#include "orbcorr/numeric.hpp"
#include "orbcorr/parallel.hpp"

namespace orbcorr {

namespace {

constexpr double kTraceTol = 1e-6;
constexpr double kEigenFloor = -1e-8;

double entropy_of_values(std::span<const double> vals) {
  KahanSum s;
  for (double lam : vals) {
    if (lam < kEigenFloor)
      throw ModelError("density matrix eigenvalue " + std::to_string(lam) +
                       " below the PSD tolerance");
    const double x = std::min(std::max(lam, 0.0), 1.0);
    if (x > 0.0) s.add(-x * std::log(x));
  }
  return s.value();
}

void require_conserving(const SparseWavefunction& wfn) {
  if (!wfn.is_number_conserving())
    throw ModelError("mutual-information analysis requires a fixed electron count");
}

}  // namespace

double von_neumann_entropy(const Eigen::MatrixXd& dm) {
  if (dm.rows() != dm.cols()) throw DimensionError("density matrix must be square");
  if (std::abs(dm.trace() - 1.0) > kTraceTol)
    throw NormalizationError("density matrix trace deviates from 1 beyond 1e-6");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dm, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return entropy_of_values(std::span<const double>(ev.data(), static_cast<std::size_t>(ev.size())));
}

double shannon_entropy(std::span<const double> p) {
  KahanSum sum;
  for (double x : p) {
    if (x < -1e-12)
      throw ArgumentError("probability " + std::to_string(x) + " below tolerance");
    sum.add(x);
  }
  if (std::abs(sum.value() - 1.0) > kTraceTol)
    throw NormalizationError("probabilities sum to " + std::to_string(sum.value()) +
                             ", deviating from 1 beyond 1e-6");
  return entropy_of_values(p);
}

Eigen::MatrixXd measurement_channel(const Eigen::MatrixXd& dm) {
  return dm.diagonal().asDiagonal();
}

Eigen::Matrix4d dephase_pair_qubit(const Eigen::Matrix4d& dm, int which) {
  if (which != 0 && which != 1) throw ArgumentError("pair qubit selector must be 0 or 1");
  const int bit = which == 0 ? 2 : 1;
  Eigen::Matrix4d out = dm;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if ((r & bit) != (c & bit)) out(r, c) = 0.0;
  return out;
}

Eigen::Matrix2d pair_marginal(const Eigen::Matrix4d& dm, int which) {
  if (which != 0 && which != 1) throw ArgumentError("pair qubit selector must be 0 or 1");
  Eigen::Matrix2d out = Eigen::Matrix2d::Zero();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        const int r = which == 0 ? (a << 1) | c : (c << 1) | a;
        const int col = which == 0 ? (b << 1) | c : (c << 1) | b;
        out(a, b) += dm(r, col);
      }
  return out;
}

double pair_mutual_information(const Eigen::Matrix4d& dm) {
  const double sa = von_neumann_entropy(pair_marginal(dm, 0));
  const double sb = von_neumann_entropy(pair_marginal(dm, 1));
  const double sab = von_neumann_entropy(dm);
  return sa + sb - sab;
}

namespace {

double classical_mi_from_joint(const std::array<double, 4>& joint) {
  const std::array<double, 2> pi = {joint[0] + joint[1], joint[2] + joint[3]};
  const std::array<double, 2> pj = {joint[0] + joint[2], joint[1] + joint[3]};
  return entropy_of_values(pi) + entropy_of_values(pj) - entropy_of_values(joint);
}

double single_entropy(const SingleDensityMatrix& s) {
  const std::array<double, 2> p = {s.p0, s.p1};
  return entropy_of_values(p);
}

}  // namespace

PairMutualInformation mutual_information_pair(const SparseWavefunction& wfn, int i, int j) {
  require_conserving(wfn);
  if (i > j) std::swap(i, j);
  const auto dm = pair_density_matrix(wfn, i, j);
  const double si = single_entropy(single_density_matrix(wfn, i));
  const double sj = single_entropy(single_density_matrix(wfn, j));
  PairMutualInformation out;
  out.quantum = si + sj - von_neumann_entropy(dm.m);
  const std::array<double, 4> joint = {dm.m(0, 0), dm.m(1, 1), dm.m(2, 2), dm.m(3, 3)};
  out.classical = classical_mi_from_joint(joint);
  return out;
}

MutualInformationMatrix mutual_information_matrix(const SparseWavefunction& wfn,
                                                  int n_workers) {
  require_conserving(wfn);
  detail::require_normalized(wfn);
  const int n = wfn.n_qubits();

  MutualInformationMatrix mi;
  mi.n = n;
  mi.quantum = Eigen::MatrixXd::Constant(n, n, MutualInformationMatrix::undefined());
  mi.classical = Eigen::MatrixXd::Constant(n, n, MutualInformationMatrix::undefined());

  std::vector<double> s1(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    s1[static_cast<std::size_t>(i)] = single_entropy(single_density_matrix(wfn, i));

  const auto probs = all_pair_probabilities(wfn, n_workers);

  const int npairs = n * (n - 1) / 2;
  const int workers = resolve_workers(n_workers);
  ORBCORR_PRAGMA_PARALLEL_FOR(workers)
  for (int p = 0; p < npairs; ++p) {
    // unrank p -> (i, j), i < j, row-major over the strict upper triangle
    int i = 0;
    int rem = p;
    while (rem >= n - 1 - i) {
      rem -= n - 1 - i;
      ++i;
    }
    const int j = i + 1 + rem;
    const auto dm = pair_density_matrix(wfn, i, j);
    const double q = s1[static_cast<std::size_t>(i)] + s1[static_cast<std::size_t>(j)] -
                     von_neumann_entropy(dm.m);
    const std::array<double, 4> joint = {probs(i, j, 0, 0), probs(i, j, 0, 1),
                                         probs(i, j, 1, 0), probs(i, j, 1, 1)};
    const double c = classical_mi_from_joint(joint);
    mi.quantum(i, j) = q;
    mi.quantum(j, i) = q;
    mi.classical(i, j) = c;
    mi.classical(j, i) = c;
  }
  return mi;
}

double l1_metric(const MutualInformationMatrix& mi) {
  KahanSum num;
  KahanSum den;
  for (int i = 0; i < mi.n; ++i)
    for (int j = i + 1; j < mi.n; ++j) {
      num.add(mi.quantum(i, j) - mi.classical(i, j));
      den.add(mi.quantum(i, j));
    }
  if (den.value() <= 0.0)
    throw UndefinedMetricError("L1 undefined: total quantum mutual information is zero");
  return 100.0 * num.value() / den.value();
}

double gamma_metric(const OneBodyRDM& rdm, int n_electrons) {
  if (n_electrons < 1) throw ConsistencyError("gamma requires at least one electron");
  if (std::abs(rdm.m.trace() - n_electrons) > 1e-6)
    throw ConsistencyError("RDM trace " + std::to_string(rdm.m.trace()) +
                           " does not match electron count " + std::to_string(n_electrons));
  KahanSum s;
  for (int i = 0; i < rdm.m.rows(); ++i)
    for (int j = 0; j < rdm.m.cols(); ++j)
      if (i != j) s.add(std::abs(rdm.m(i, j)));
  return s.value() / n_electrons;
}

CorrelationReport build_report(const SparseWavefunction& wfn, int n_workers) {
  CorrelationReport rep;
  rep.mi = mutual_information_matrix(wfn, n_workers);
  const int n = rep.mi.n;

  rep.entropies_vn.resize(static_cast<std::size_t>(n));
  rep.entropies_sh.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto s = single_density_matrix(wfn, i);
    const std::array<double, 2> p = {s.p0, s.p1};
    // The single-qubit matrix is diagonal for number-conserving states, so
    // the two entropies coincide by construction.
    rep.entropies_vn[static_cast<std::size_t>(i)] = entropy_of_values(p);
    rep.entropies_sh[static_cast<std::size_t>(i)] = shannon_entropy(p);
  }

  try {
    rep.l1_percent = l1_metric(rep.mi);
    rep.l1_defined = true;
  } catch (const UndefinedMetricError&) {
    rep.l1_percent = MutualInformationMatrix::undefined();
    rep.l1_defined = false;
  }

  if (wfn.n_electrons() >= 1) {
    rep.gamma = gamma_metric(one_body_rdm(wfn), wfn.n_electrons());
    rep.gamma_defined = true;
  }

  // Sorted descending curves; ties broken by pair / qubit index so the
  // output is a pure function of the matrices.
  struct Entry {
    double v;
    int i, j;
  };
  std::vector<Entry> q, c;
  q.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  c.reserve(q.capacity());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      q.push_back({rep.mi.quantum(i, j), i, j});
      c.push_back({rep.mi.classical(i, j), i, j});
    }
  const auto desc = [](const Entry& a, const Entry& b) {
    if (a.v != b.v) return a.v > b.v;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::sort(q.begin(), q.end(), desc);
  std::sort(c.begin(), c.end(), desc);
  rep.sorted_mi_quantum.reserve(q.size());
  rep.sorted_mi_classical.reserve(c.size());
  rep.sorted_mi_diff.reserve(q.size());
  for (std::size_t k = 0; k < q.size(); ++k) {
    rep.sorted_mi_quantum.push_back(q[k].v);
    rep.sorted_mi_classical.push_back(c[k].v);
    rep.sorted_mi_diff.push_back(c[k].v - q[k].v);
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const double ea = rep.entropies_vn[static_cast<std::size_t>(a)];
    const double eb = rep.entropies_vn[static_cast<std::size_t>(b)];
    if (ea != eb) return ea > eb;
    return a < b;
  });
  rep.sorted_entropy.reserve(order.size());
  for (int idx : order) rep.sorted_entropy.push_back(rep.entropies_vn[static_cast<std::size_t>(idx)]);
  const int top = std::min(100, n);
  rep.top_entropy_qubits.assign(order.begin(), order.begin() + top);
  return rep;
}

}  // namespace orbcorr
