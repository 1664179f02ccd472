// Copyright 2026 The orbcorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "orbcorr/orbitals.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "orbcorr/errors.hpp"
#include "orbcorr/info.hpp"
#include "orbcorr/parallel.hpp"

namespace orbcorr {

double OrbitalRotation::orthogonality_defect() const {
  const Eigen::MatrixXd g = u.transpose() * u;
  return (g - Eigen::MatrixXd::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
}

namespace {

/// One transform stage: out(a, qrs) = sum_p u(p, a) in(p, qrs), with the
/// transformed index rotated to the back so four identical stages complete
/// the four-index transform.
void transform_stage(const std::vector<double>& in, std::vector<double>& out,
                     const Eigen::MatrixXd& u, int m, int workers) {
  const std::size_t mm = static_cast<std::size_t>(m);
  const std::size_t rest = mm * mm * mm;
  ORBCORR_PRAGMA_PARALLEL_FOR(workers)
  for (std::int64_t a = 0; a < m; ++a) {
    for (std::size_t t = 0; t < rest; ++t) {
      double acc = 0.0;
      for (std::size_t p = 0; p < mm; ++p)
        acc += u(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(a)) *
               in[p * rest + t];
      // (a, t) lands at position t * m + a: index cycling p q r s -> q r s a
      out[t * mm + static_cast<std::size_t>(a)] = acc;
    }
  }
}

}  // namespace

Hamiltonian rotate_integrals(const Hamiltonian& h, const OrbitalRotation& rot, int n_workers) {
  const int m = h.n_spatial;
  if (rot.u.rows() != m || rot.u.cols() != m)
    throw DimensionError("rotation dimension does not match orbital count");
  if (rot.orthogonality_defect() > 1e-8)
    throw ArgumentError("rotation matrix is not orthogonal within 1e-8");
  const int workers = resolve_workers(n_workers);

  Hamiltonian out(m);
  out.e_core = h.e_core;
  out.h1 = rot.u.transpose() * h.h1 * rot.u;

  std::vector<double> a = h.eri;
  std::vector<double> b(a.size());
  for (int stage = 0; stage < 4; ++stage) {
    transform_stage(a, b, rot.u, m, workers);
    std::swap(a, b);
  }
  // Restore exact 8-fold symmetry (averaging the fp images).
  for (int p = 0; p < m; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r <= p; ++r)
        for (int s = 0; s <= (r == p ? q : r); ++s) {
          const auto at = [&](int aa, int bb, int cc, int dd) {
            return a[((static_cast<std::size_t>(aa) * m + bb) * m + cc) * m + dd];
          };
          const double v = (at(p, q, r, s) + at(q, p, r, s) + at(p, q, s, r) +
                            at(q, p, s, r) + at(r, s, p, q) + at(s, r, p, q) +
                            at(r, s, q, p) + at(s, r, q, p)) /
                           8.0;
          out.set_eri(p, q, r, s, v);
        }
  return out;
}

NaturalOrbitals natural_orbitals(const OneBodyRDM& rdm) {
  const int n = static_cast<int>(rdm.m.rows());
  if (rdm.m.cols() != n) throw DimensionError("RDM must be square");
  if (n % 2 != 0)
    throw DimensionError("spin-orbital RDM must have even dimension (alpha/beta blocks)");
  if ((rdm.m - rdm.m.transpose()).cwiseAbs().maxCoeff() > 1e-8)
    throw ArgumentError("RDM asymmetric beyond 1e-8");
  const int m = n / 2;

  Eigen::MatrixXd spatial = rdm.m.topLeftCorner(m, m) + rdm.m.bottomRightCorner(m, m);
  spatial = 0.5 * (spatial + spatial.transpose());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(spatial);
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const double ax = es.eigenvalues()[x];
    const double ay = es.eigenvalues()[y];
    if (ax != ay) return ax > ay;
    return x < y;
  });

  NaturalOrbitals no;
  no.rotation.u = Eigen::MatrixXd(m, m);
  no.occupations = Eigen::VectorXd(m);
  for (int c = 0; c < m; ++c) {
    no.occupations[c] = es.eigenvalues()[order[static_cast<std::size_t>(c)]];
    Eigen::VectorXd col = es.eigenvectors().col(order[static_cast<std::size_t>(c)]);
    int big = 0;
    for (int r = 1; r < m; ++r)
      if (std::abs(col[r]) > std::abs(col[big])) big = r;
    if (col[big] < 0.0) col = -col;
    no.rotation.u.col(c) = col;
  }
  for (int c = 0; c + 1 < m; ++c)
    if (std::abs(no.occupations[c] - no.occupations[c + 1]) < 1e-10) no.degenerate = true;
  return no;
}

InoResult ino_loop(const Hamiltonian& h, int n_alpha, int n_beta, const InoOptions& opts) {
  if (opts.max_iterations < 1) throw ArgumentError("INO needs at least one iteration");
  Hamiltonian current = h;
  InoTrace trace;
  SolverOptions solver = opts.solver;
  if (solver.n_workers == 0) solver.n_workers = opts.n_workers;

  int rising = 0;
  for (int it = 1; it <= opts.max_iterations; ++it) {
    auto gs = ground_state(current, n_alpha, n_beta, solver);
    const auto rdm = one_body_rdm(gs.wfn);
    const auto no = natural_orbitals(rdm);

    InoIteration rec;
    rec.iteration = it;
    rec.energy = gs.energy;
    rec.gamma = gamma_metric(rdm, n_alpha + n_beta);
    rec.degenerate_ground_state = gs.degenerate;
    rec.degenerate_occupations = no.degenerate;
    try {
      rec.l1_percent = l1_metric(mutual_information_matrix(gs.wfn, opts.n_workers));
      rec.l1_defined = true;
    } catch (const UndefinedMetricError&) {
      rec.l1_defined = false;
    }
    if (!trace.iterations.empty() && rec.gamma > trace.iterations.back().gamma) {
      if (++rising >= 2) trace.oscillation = true;
    } else {
      rising = 0;
    }
    trace.iterations.push_back(rec);

    if (rec.gamma < opts.gamma_tol) {
      trace.converged = true;
      return {std::move(current), std::move(gs.wfn), std::move(trace)};
    }
    if (it == opts.max_iterations) return {std::move(current), std::move(gs.wfn), std::move(trace)};
    current = rotate_integrals(current, no.rotation, opts.n_workers);
  }
  throw Error("unreachable");  // loop always returns
}

}  // namespace orbcorr
