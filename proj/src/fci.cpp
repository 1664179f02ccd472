// Copyright 2026 The orbcorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "orbcorr/fci.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "orbcorr/errors.hpp"
#include "orbcorr/parallel.hpp"

namespace orbcorr {

namespace {

using u64 = std::uint64_t;

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// All m-bit words with popcount k, ascending (Gosper's hack).
std::vector<u64> spin_strings(int m, int k) {
  std::vector<u64> out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  u64 v = (u64{1} << k) - 1;
  const u64 limit = m == 64 ? ~u64{0} : (u64{1} << m) - 1;
  while (v <= limit) {
    out.push_back(v);
    const u64 c = v & (~v + 1);
    const u64 r = v + c;
    if (r > limit || r < v) break;
    v = (((r ^ v) >> 2) / c) | r;
  }
  return out;
}

Determinant make_det(int m, u64 alpha, u64 beta) {
  Determinant d(2 * m);
  for (int q = 0; q < m; ++q) {
    if ((alpha >> q) & 1) d.set(q);
    if ((beta >> q) & 1) d.set(m + q);
  }
  return d;
}

}  // namespace

CIBasis enumerate_basis(int m, int n_alpha, int n_beta) {
  if (m < 1) throw ArgumentError("need at least one spatial orbital");
  if (m > 64) throw CapacityError("FCI basis enumeration supports at most 64 spatial orbitals");
  if (n_alpha < 0 || n_alpha > m || n_beta < 0 || n_beta > m)
    throw ArgumentError("electron counts must lie in [0, M]");
  const double sz = binomial(m, n_alpha) * binomial(m, n_beta);
  if (sz > static_cast<double>(kMaxBasisSize))
    throw CapacityError("sector size " + std::to_string(sz) + " exceeds the basis limit " +
                        std::to_string(kMaxBasisSize));

  CIBasis basis;
  basis.n_spatial = m;
  basis.n_alpha = n_alpha;
  basis.n_beta = n_beta;
  const auto alphas = spin_strings(m, n_alpha);
  const auto betas = spin_strings(m, n_beta);
  basis.dets.reserve(alphas.size() * betas.size());
  for (u64 a : alphas)
    for (u64 b : betas) basis.dets.push_back(make_det(m, a, b));
  return basis;
}

namespace {

/// Enumerates the determinants connected to `d` by single or double
/// excitations within the (n_alpha, n_beta) sector, in a fixed order.
class ConnectionScratch {
 public:
  void prepare(const Determinant& d, int m) {
    occ_a_.clear();
    occ_b_.clear();
    emp_a_.clear();
    emp_b_.clear();
    for (int q = 0; q < m; ++q) (d.test(q) ? occ_a_ : emp_a_).push_back(q);
    for (int q = m; q < 2 * m; ++q) (d.test(q) ? occ_b_ : emp_b_).push_back(q);
  }

  template <typename F>
  void for_each_connected(const Determinant& d, F&& visit) const {
    auto single = [&](const std::vector<int>& occ, const std::vector<int>& emp) {
      for (int l : occ)
        for (int k : emp) {
          Determinant t = d;
          t.reset(l);
          t.set(k);
          visit(t);
        }
    };
    auto doubles_same = [&](const std::vector<int>& occ, const std::vector<int>& emp) {
      for (std::size_t i = 0; i < occ.size(); ++i)
        for (std::size_t j = i + 1; j < occ.size(); ++j)
          for (std::size_t a = 0; a < emp.size(); ++a)
            for (std::size_t b = a + 1; b < emp.size(); ++b) {
              Determinant t = d;
              t.reset(occ[i]);
              t.reset(occ[j]);
              t.set(emp[a]);
              t.set(emp[b]);
              visit(t);
            }
    };
    single(occ_a_, emp_a_);
    single(occ_b_, emp_b_);
    doubles_same(occ_a_, emp_a_);
    doubles_same(occ_b_, emp_b_);
    for (int la : occ_a_)
      for (int lb : occ_b_)
        for (int ka : emp_a_)
          for (int kb : emp_b_) {
            Determinant t = d;
            t.reset(la);
            t.reset(lb);
            t.set(ka);
            t.set(kb);
            visit(t);
          }
  }

 private:
  std::vector<int> occ_a_, occ_b_, emp_a_, emp_b_;
};

using DetIndex = std::unordered_map<Determinant, std::size_t, DeterminantHash>;

/// y = H x, parallel over rows; each row is one fixed serial scan so the
/// result does not depend on the worker count.
void apply_hamiltonian(const Hamiltonian& h, const CIBasis& basis, const DetIndex& index,
                       const Eigen::VectorXd& x, Eigen::VectorXd& y, int workers) {
  const auto dim = static_cast<std::int64_t>(basis.size());
  ORBCORR_PRAGMA_PARALLEL_FOR(workers)
  for (std::int64_t r = 0; r < dim; ++r) {
    const Determinant& dr = basis.dets[static_cast<std::size_t>(r)];
    double acc = hamiltonian_diagonal(h, dr) * x[r];
    ConnectionScratch scratch;
    scratch.prepare(dr, h.n_spatial);
    scratch.for_each_connected(dr, [&](const Determinant& dc) {
      const auto it = index.find(dc);
      if (it == index.end()) return;
      const double el = hamiltonian_element(h, dr, dc);
      if (el != 0.0) acc += el * x[static_cast<Eigen::Index>(it->second)];
    });
    y[r] = acc;
  }
}

struct DavidsonOutput {
  double e0 = 0.0;
  double e1 = std::numeric_limits<double>::infinity();
  Eigen::VectorXd ground;
  int iterations = 0;
  double residual = 0.0;
};

DavidsonOutput davidson_lowest(const Hamiltonian& h, const CIBasis& basis,
                               const SolverOptions& opts) {
  const auto dim = static_cast<Eigen::Index>(basis.size());
  const int workers = resolve_workers(opts.n_workers);

  DetIndex index;
  index.reserve(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis.dets[k], k);

  Eigen::VectorXd diag(dim);
  ORBCORR_PRAGMA_PARALLEL_FOR(workers)
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(dim); ++r)
    diag[r] = hamiltonian_diagonal(h, basis.dets[static_cast<std::size_t>(r)]);

  std::vector<Eigen::Index> by_diag(static_cast<std::size_t>(dim));
  std::iota(by_diag.begin(), by_diag.end(), Eigen::Index{0});
  std::sort(by_diag.begin(), by_diag.end(), [&](Eigen::Index a, Eigen::Index b) {
    if (diag[a] != diag[b]) return diag[a] < diag[b];
    return a < b;
  });

  const int maxsub =
      static_cast<int>(std::min<Eigen::Index>(std::max(opts.max_subspace, 4), dim));
  Eigen::MatrixXd V(dim, maxsub);
  Eigen::MatrixXd S(dim, maxsub);  // sigma vectors H * V
  int k = 0;

  const int nguess = static_cast<int>(std::min<Eigen::Index>(2, dim));
  for (int g = 0; g < nguess; ++g) {
    V.col(k).setZero();
    V(by_diag[static_cast<std::size_t>(g)], k) = 1.0;
    ++k;
  }
  int sigma_done = 0;

  // Small subspace products are done with explicit serial loops: they stay
  // bit-identical for any thread configuration.
  const auto dot = [dim](const Eigen::MatrixXd& A, int col, const Eigen::VectorXd& v) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < dim; ++i) s += A(i, col) * v[i];
    return s;
  };

  DavidsonOutput out;
  Eigen::VectorXd x(dim), y(dim), ritz(dim), resid(dim);
  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(maxsub, maxsub);

  for (int iter = 1; iter <= opts.max_iterations; ++iter) {
    for (; sigma_done < k; ++sigma_done) {
      x = V.col(sigma_done);
      apply_hamiltonian(h, basis, index, x, y, workers);
      S.col(sigma_done) = y;
      for (int c = 0; c <= sigma_done; ++c) {
        double g = 0.0;
        for (Eigen::Index i = 0; i < dim; ++i) g += V(i, c) * S(i, sigma_done);
        G(c, sigma_done) = g;
        G(sigma_done, c) = g;
      }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G.topLeftCorner(k, k));
    const auto& theta = es.eigenvalues();
    const auto& yvecs = es.eigenvectors();
    out.e0 = theta[0];
    out.e1 = k > 1 ? theta[1] : std::numeric_limits<double>::infinity();

    ritz.setZero();
    resid.setZero();
    for (int c = 0; c < k; ++c) {
      const double w = yvecs(c, 0);
      for (Eigen::Index i = 0; i < dim; ++i) {
        ritz[i] += w * V(i, c);
        resid[i] += w * S(i, c);
      }
    }
    resid -= out.e0 * ritz;
    out.residual = std::sqrt(resid.squaredNorm());
    out.iterations = iter;
    if (out.residual < opts.residual_tol) {
      out.ground = ritz;
      return out;
    }

    if (k == maxsub) {
      // Restart from the two lowest Ritz vectors.
      Eigen::MatrixXd fresh = Eigen::MatrixXd::Zero(dim, maxsub);
      const int keep = std::min(2, k);
      for (int r = 0; r < keep; ++r)
        for (int c = 0; c < k; ++c) fresh.col(r) += yvecs(c, r) * V.col(c);
      V = fresh;
      for (int r = 0; r < keep; ++r) {
        for (int p = 0; p < r; ++p) {
          const double pr = dot(V, p, V.col(r));
          V.col(r) -= pr * V.col(p);
        }
        V.col(r) /= std::sqrt(V.col(r).squaredNorm());
      }
      k = keep;
      sigma_done = 0;
      G.setZero();
      continue;
    }

    // Diagonal preconditioner with a deterministic small-denominator guard.
    for (Eigen::Index i = 0; i < dim; ++i) {
      double den = out.e0 - diag[i];
      if (std::abs(den) < 1e-6) den = den < 0.0 ? -1e-6 : 1e-6;
      resid[i] /= den;
    }
    // Orthogonalize twice against the current block.
    for (int pass = 0; pass < 2; ++pass)
      for (int c = 0; c < k; ++c) {
        const double pr = dot(V, c, resid);
        resid -= pr * V.col(c);
      }
    double nrm = std::sqrt(resid.squaredNorm());
    if (nrm < 1e-10) {
      // Stagnation: expand with the lowest-diagonal basis vector not yet
      // represented (fixed order, hence deterministic).
      bool added = false;
      for (Eigen::Index cand : by_diag) {
        resid.setZero();
        resid[cand] = 1.0;
        for (int pass = 0; pass < 2; ++pass)
          for (int c = 0; c < k; ++c) {
            const double pr = dot(V, c, resid);
            resid -= pr * V.col(c);
          }
        nrm = std::sqrt(resid.squaredNorm());
        if (nrm > 1e-6) {
          added = true;
          break;
        }
      }
      if (!added) {
        out.ground = ritz;
        return out;  // subspace spans the full space; Ritz pair is exact
      }
    }
    V.col(k) = resid / nrm;
    ++k;
  }
  throw ConvergenceError("Davidson did not converge within " +
                             std::to_string(opts.max_iterations) +
                             " iterations (residual " + std::to_string(out.residual) + ")",
                         out.residual);
}

}  // namespace

GroundStateResult ground_state(const Hamiltonian& h, int n_alpha, int n_beta,
                               const SolverOptions& opts) {
  const CIBasis basis = enumerate_basis(h.n_spatial, n_alpha, n_beta);
  const auto dim = static_cast<Eigen::Index>(basis.size());
  const std::size_t dense_cap = std::min<std::size_t>(opts.dense_threshold, 20000);
  const int workers = resolve_workers(opts.n_workers);

  double e0 = 0.0;
  double gap = std::numeric_limits<double>::infinity();
  Eigen::VectorXd c;
  bool used_davidson = false;
  int iterations = 0;
  double residual = 0.0;

  if (basis.size() <= dense_cap || basis.size() <= 2) {
    Eigen::MatrixXd H(dim, dim);
    ORBCORR_PRAGMA_PARALLEL_FOR(workers)
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(dim); ++r)
      for (Eigen::Index col = 0; col <= r; ++col) {
        const double v = hamiltonian_element(h, basis.dets[static_cast<std::size_t>(r)],
                                             basis.dets[static_cast<std::size_t>(col)]);
        H(r, col) = v;
        H(col, r) = v;
      }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
    e0 = es.eigenvalues()[0];
    if (dim > 1) gap = es.eigenvalues()[1] - e0;
    c = es.eigenvectors().col(0);
  } else {
    auto dav = davidson_lowest(h, basis, opts);
    e0 = dav.e0;
    gap = dav.e1 - dav.e0;
    c = std::move(dav.ground);
    used_davidson = true;
    iterations = dav.iterations;
    residual = dav.residual;
  }

  // Deterministic global sign: largest-|c| coefficient positive, ties by
  // lowest basis index.
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < dim; ++i)
    if (std::abs(c[i]) > std::abs(c[best])) best = i;
  if (c[best] < 0.0) c = -c;
  c /= std::sqrt(c.squaredNorm());

  std::vector<WfnTerm> terms;
  terms.reserve(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k)
    terms.push_back({basis.dets[k], c[static_cast<Eigen::Index>(k)]});

  GroundStateResult res{
      e0,
      SparseWavefunction(2 * h.n_spatial, n_alpha, n_beta, std::move(terms)),
      gap,
      gap < opts.degeneracy_tol,
      used_davidson,
      iterations,
      residual};
  return res;
}

}  // namespace orbcorr
