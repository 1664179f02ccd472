// Copyright 2026 The orbcorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file determinant.hpp
 * @brief Occupation bitstring over N spin-orbitals/qubits.
 *
 * Bit q holds the occupation of qubit q. Under the blocked layout used
 * throughout, qubits [0, M) are the alpha spin-orbitals and [M, 2M) the
 * beta spin-orbitals of M spatial orbitals. A determinant is the product
 * of creation operators in ascending qubit index applied to the vacuum;
 * stored amplitudes are relative to that ordering.
 *
 * Storage is 64-bit words sized for up to 1024 qubits.
 */

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace orbcorr {

inline constexpr int kMaxQubits = 1024;

class Determinant {
 public:
  Determinant() = default;

  /// All-empty determinant over `n_bits` qubits.
  explicit Determinant(int n_bits);

  /// Parse from '0'/'1' characters, qubit 0 first.
  static Determinant from_string(std::string_view s);

  int size() const noexcept { return n_bits_; }

  bool test(int q) const noexcept {
    return (w_[static_cast<std::size_t>(q) >> 6] >> (q & 63)) & 1u;
  }
  void set(int q) noexcept { w_[static_cast<std::size_t>(q) >> 6] |= u64{1} << (q & 63); }
  void reset(int q) noexcept { w_[static_cast<std::size_t>(q) >> 6] &= ~(u64{1} << (q & 63)); }

  int popcount() const noexcept;
  /// Number of set bits in [0, q).
  int popcount_below(int q) const noexcept;
  /// Number of set bits in [lo, hi).
  int popcount_range(int lo, int hi) const noexcept;
  /// Number of set bits strictly between a and b (order-insensitive).
  int popcount_between(int a, int b) const noexcept;

  /// Ascending list of occupied qubit indices.
  std::vector<int> occupied() const;

  std::string to_string() const;

  std::size_t n_words() const noexcept { return w_.size(); }
  std::uint64_t word(std::size_t k) const noexcept { return w_[k]; }

  std::size_t hash() const noexcept;

  friend bool operator==(const Determinant& a, const Determinant& b) noexcept {
    return a.n_bits_ == b.n_bits_ && a.w_ == b.w_;
  }

  /// Total order by value as an unsigned integer, qubit 0 = least
  /// significant bit. Used for deterministic tie-breaking and sorting.
  friend std::strong_ordering operator<=>(const Determinant& a, const Determinant& b) noexcept;

 private:
  using u64 = std::uint64_t;
  int n_bits_ = 0;
  std::vector<u64> w_;
};

struct DeterminantHash {
  std::size_t operator()(const Determinant& d) const noexcept { return d.hash(); }
};

}  // namespace orbcorr
