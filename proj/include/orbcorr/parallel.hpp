// Copyright 2026 The orbcorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace orbcorr {

/// Effective worker count: `requested` if positive, else the OpenMP default
/// (1 in serial builds). Every parallel region in this library writes each
/// output element from a single fixed serial scan, so results are
/// bit-identical for any worker count.
inline int resolve_workers(int requested) {
#ifdef _OPENMP
  return requested > 0 ? requested : omp_get_max_threads();
#else
  (void)requested;
  return 1;
#endif
}

}  // namespace orbcorr

#ifdef _OPENMP
#define ORBCORR_DETAIL_PRAGMA(text) _Pragma(#text)
#define ORBCORR_PRAGMA_PARALLEL_FOR(nw) \
  ORBCORR_DETAIL_PRAGMA(omp parallel for schedule(dynamic) num_threads(nw))
#else
#define ORBCORR_PRAGMA_PARALLEL_FOR(nw)
#endif
