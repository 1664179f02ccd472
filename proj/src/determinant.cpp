// Copyright 2026 The orbcorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "orbcorr/determinant.hpp"

#include <bit>

#include "orbcorr/errors.hpp"

namespace orbcorr {

Determinant::Determinant(int n_bits) {
  if (n_bits < 1 || n_bits > kMaxQubits)
    throw CapacityError("determinant size must be in [1, " + std::to_string(kMaxQubits) +
                        "], got " + std::to_string(n_bits));
  n_bits_ = n_bits;
  w_.assign((static_cast<std::size_t>(n_bits) + 63) / 64, u64{0});
}

Determinant Determinant::from_string(std::string_view s) {
  Determinant d(static_cast<int>(s.size()));
  for (std::size_t q = 0; q < s.size(); ++q) {
    if (s[q] == '1')
      d.set(static_cast<int>(q));
    else if (s[q] != '0')
      throw ParseError("bitstring may contain only '0' and '1'");
  }
  return d;
}

int Determinant::popcount() const noexcept {
  int c = 0;
  for (u64 w : w_) c += std::popcount(w);
  return c;
}

int Determinant::popcount_below(int q) const noexcept {
  if (q <= 0) return 0;
  const std::size_t wlim = static_cast<std::size_t>(q) >> 6;
  int c = 0;
  for (std::size_t k = 0; k < wlim; ++k) c += std::popcount(w_[k]);
  const int rem = q & 63;
  if (rem != 0 && wlim < w_.size()) c += std::popcount(w_[wlim] & ((u64{1} << rem) - 1));
  return c;
}

int Determinant::popcount_range(int lo, int hi) const noexcept {
  if (hi <= lo) return 0;
  return popcount_below(hi) - popcount_below(lo);
}

int Determinant::popcount_between(int a, int b) const noexcept {
  const int lo = a < b ? a : b;
  const int hi = a < b ? b : a;
  return popcount_range(lo + 1, hi);
}

std::vector<int> Determinant::occupied() const {
  std::vector<int> occ;
  occ.reserve(static_cast<std::size_t>(popcount()));
  for (std::size_t k = 0; k < w_.size(); ++k) {
    u64 w = w_[k];
    while (w != 0) {
      const int b = std::countr_zero(w);
      occ.push_back(static_cast<int>(k * 64) + b);
      w &= w - 1;
    }
  }
  return occ;
}

std::string Determinant::to_string() const {
  std::string s(static_cast<std::size_t>(n_bits_), '0');
  for (int q = 0; q < n_bits_; ++q)
    if (test(q)) s[static_cast<std::size_t>(q)] = '1';
  return s;
}

std::size_t Determinant::hash() const noexcept {
  // FNV-1a over words, platform-independent given identical word content.
  std::uint64_t h = 1469598103934665603ull;
  for (u64 w : w_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const Determinant& a, const Determinant& b) noexcept {
  if (a.n_bits_ != b.n_bits_) return a.n_bits_ <=> b.n_bits_;
  for (std::size_t k = a.w_.size(); k-- > 0;) {
    if (a.w_[k] != b.w_[k]) return a.w_[k] <=> b.w_[k];
  }
  return std::strong_ordering::equal;
}

}  // namespace orbcorr
