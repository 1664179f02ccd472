// Copyright 2026 The orbcorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "orbcorr/hamiltonian.hpp"

#include <bit>
#include <cmath>

#include "orbcorr/errors.hpp"

namespace orbcorr {

Hamiltonian::Hamiltonian(int m) : n_spatial(m) {
  if (m < 1) throw ArgumentError("need at least one spatial orbital");
  h1 = Eigen::MatrixXd::Zero(m, m);
  eri.assign(static_cast<std::size_t>(m) * m * m * m, 0.0);
}

void Hamiltonian::set_eri(int p, int q, int r, int s, double v) {
  const auto put = [&](int a, int b, int c, int d) {
    const std::size_t m = static_cast<std::size_t>(n_spatial);
    eri[((static_cast<std::size_t>(a) * m + static_cast<std::size_t>(b)) * m +
         static_cast<std::size_t>(c)) *
            m +
        static_cast<std::size_t>(d)] = v;
  };
  put(p, q, r, s);
  put(q, p, r, s);
  put(p, q, s, r);
  put(q, p, s, r);
  put(r, s, p, q);
  put(s, r, p, q);
  put(r, s, q, p);
  put(s, r, q, p);
}

double Hamiltonian::symmetry_defect() const {
  double worst = (h1 - h1.transpose()).cwiseAbs().maxCoeff();
  const int m = n_spatial;
  for (int p = 0; p < m; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r <= p; ++r)
        for (int s = 0; s <= (r == p ? q : r); ++s) {
          const double v = eri_at(p, q, r, s);
          for (double img : {eri_at(q, p, r, s), eri_at(p, q, s, r), eri_at(q, p, s, r),
                             eri_at(r, s, p, q), eri_at(s, r, p, q), eri_at(r, s, q, p),
                             eri_at(s, r, q, p)})
            worst = std::max(worst, std::abs(v - img));
        }
  return worst;
}

Hamiltonian hubbard_hamiltonian(int sites, double t, double u, bool periodic) {
  if (sites < 2) throw ArgumentError("Hubbard model needs at least 2 sites");
  Hamiltonian h(sites);
  for (int p = 0; p + 1 < sites; ++p) {
    h.h1(p, p + 1) = -t;
    h.h1(p + 1, p) = -t;
  }
  if (periodic && sites > 2) {
    h.h1(0, sites - 1) = -t;
    h.h1(sites - 1, 0) = -t;
  }
  for (int p = 0; p < sites; ++p) h.set_eri(p, p, p, p, u);
  return h;
}

namespace {

struct SpinOrbital {
  int spatial;
  int spin;  // 0 = alpha, 1 = beta
};

inline SpinOrbital split(int q, int m) { return {q < m ? q : q - m, q < m ? 0 : 1}; }

/// Positions of the bits set in (a & ~b), ascending; at most `cap` entries.
inline int diff_bits(const Determinant& a, const Determinant& b, int* out, int cap) {
  int n = 0;
  for (std::size_t k = 0; k < a.n_words(); ++k) {
    std::uint64_t w = a.word(k) & ~b.word(k);
    while (w != 0) {
      if (n == cap) return n + 1;  // overflow marker
      out[n++] = static_cast<int>(k * 64) + std::countr_zero(w);
      w &= w - 1;
    }
  }
  return n;
}

}  // namespace

double hamiltonian_diagonal(const Hamiltonian& h, const Determinant& d) {
  const int m = h.n_spatial;
  double e = h.e_core;
  const auto occ = d.occupied();
  for (std::size_t a = 0; a < occ.size(); ++a) {
    const auto p = split(occ[a], m);
    e += h.h1(p.spatial, p.spatial);
    for (std::size_t b = a + 1; b < occ.size(); ++b) {
      const auto q = split(occ[b], m);
      e += h.eri_at(p.spatial, p.spatial, q.spatial, q.spatial);
      if (p.spin == q.spin) e -= h.eri_at(p.spatial, q.spatial, q.spatial, p.spatial);
    }
  }
  return e;
}

double hamiltonian_element(const Hamiltonian& h, const Determinant& d1, const Determinant& d2) {
  const int m = h.n_spatial;
  if (d1.size() != 2 * m || d2.size() != 2 * m)
    throw DimensionError("determinant size must equal 2 * n_spatial");
  if (d1 == d2) return hamiltonian_diagonal(h, d1);

  int cre[2];
  int ann[2];
  const int nc = diff_bits(d1, d2, cre, 2);
  if (nc > 2) return 0.0;
  const int na = diff_bits(d2, d1, ann, 2);
  if (na != nc) return 0.0;  // different particle number

  if (nc == 1) {
    const auto p = split(cre[0], m);
    const auto q = split(ann[0], m);
    if (p.spin != q.spin) return 0.0;
    double val = h.h1(p.spatial, q.spatial);
    for (int r : d2.occupied()) {
      if (r == ann[0]) continue;
      const auto ro = split(r, m);
      val += h.eri_at(p.spatial, q.spatial, ro.spatial, ro.spatial);
      if (ro.spin == p.spin) val -= h.eri_at(p.spatial, ro.spatial, ro.spatial, q.spatial);
    }
    const double sign = (d2.popcount_between(cre[0], ann[0]) & 1) ? -1.0 : 1.0;
    return sign * val;
  }

  // Double excitation: pair sorted creations with sorted annihilations and
  // accumulate the phase as two sequential single moves.
  const auto c1 = split(cre[0], m);
  const auto c2 = split(cre[1], m);
  const auto x1 = split(ann[0], m);
  const auto x2 = split(ann[1], m);
  double t1 = 0.0;
  double t2 = 0.0;
  if (c1.spin == x1.spin && c2.spin == x2.spin)
    t1 = h.eri_at(c1.spatial, x1.spatial, c2.spatial, x2.spatial);
  if (c1.spin == x2.spin && c2.spin == x1.spin)
    t2 = h.eri_at(c1.spatial, x2.spatial, c2.spatial, x1.spatial);
  if (t1 == 0.0 && t2 == 0.0) return 0.0;

  int parity = d2.popcount_between(ann[0], cre[0]);
  Determinant mid = d2;
  mid.reset(ann[0]);
  mid.set(cre[0]);
  parity += mid.popcount_between(ann[1], cre[1]);
  const double sign = (parity & 1) ? -1.0 : 1.0;
  return sign * (t1 - t2);
}

}  // namespace orbcorr
