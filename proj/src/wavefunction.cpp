// Copyright 2026 The orbcorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "orbcorr/wavefunction.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>
#include <unordered_set>

#include "orbcorr/errors.hpp"
#include "orbcorr/numeric.hpp"

namespace orbcorr {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool parse_double(std::string_view tok, double& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last && std::isfinite(out);
}

bool parse_int(std::string_view tok, long& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) toks.push_back(s.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

SparseWavefunction::SparseWavefunction(int n_qubits, int n_alpha, int n_beta,
                                       std::vector<WfnTerm> terms)
    : n_qubits_(n_qubits), n_alpha_(n_alpha), n_beta_(n_beta), terms_(std::move(terms)) {
  if (n_qubits_ < 1 || n_qubits_ > kMaxQubits)
    throw CapacityError("qubit count must be in [1, " + std::to_string(kMaxQubits) + "]");
  if (n_alpha_ < 0 || n_beta_ < 0 || n_alpha_ + n_beta_ > n_qubits_)
    throw ArgumentError("invalid electron counts (" + std::to_string(n_alpha_) + ", " +
                        std::to_string(n_beta_) + ") for " + std::to_string(n_qubits_) +
                        " qubits");
  std::unordered_set<Determinant, DeterminantHash> seen;
  seen.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.det.size() != n_qubits_)
      throw DimensionError("determinant length " + std::to_string(t.det.size()) +
                           " does not match qubit count " + std::to_string(n_qubits_));
    if (!seen.insert(t.det).second)
      throw DuplicateTermError("duplicate determinant " + t.det.to_string());
  }
}

double SparseWavefunction::norm2() const noexcept {
  KahanSum s;
  for (const auto& t : terms_) s.add(t.amplitude * t.amplitude);
  return s.value();
}

bool SparseWavefunction::is_number_conserving() const noexcept {
  const int ne = n_alpha_ + n_beta_;
  for (const auto& t : terms_)
    if (t.det.popcount() != ne) return false;
  return true;
}

bool SparseWavefunction::is_sz_conserving() const noexcept {
  if (n_qubits_ % 2 != 0) return false;
  const int m = n_qubits_ / 2;
  for (const auto& t : terms_) {
    if (t.det.popcount_below(m) != n_alpha_) return false;
    if (t.det.popcount_range(m, n_qubits_) != n_beta_) return false;
  }
  return true;
}

SparseWavefunction parse_wavefunction(std::istream& in) {
  std::string raw;
  long line_no = 0;
  long n = -1, na = -1, nb = -1;

  // Header: first non-comment, non-blank line.
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto toks = split_ws(line);
    if (toks.size() != 3 || !parse_int(toks[0], n) || !parse_int(toks[1], na) ||
        !parse_int(toks[2], nb))
      throw ParseError("expected header 'N N_alpha N_beta'", line_no);
    break;
  }
  if (n < 0) throw ParseError("missing header line");
  if (n < 1 || n > kMaxQubits)
    throw CapacityError("qubit count " + std::to_string(n) + " outside [1, " +
                        std::to_string(kMaxQubits) + "]");
  if (na < 0 || nb < 0 || na + nb > n)
    throw ParseError("invalid electron counts in header", line_no);

  std::vector<WfnTerm> terms;
  std::unordered_set<Determinant, DeterminantHash> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto toks = split_ws(line);
    if (toks.size() != 2) throw ParseError("expected '<bitstring> <amplitude>'", line_no);
    if (static_cast<long>(toks[0].size()) != n)
      throw DimensionError("bitstring length " + std::to_string(toks[0].size()) +
                           " does not match N=" + std::to_string(n) + " (line " +
                           std::to_string(line_no) + ")");
    Determinant det(static_cast<int>(n));
    for (std::size_t q = 0; q < toks[0].size(); ++q) {
      if (toks[0][q] == '1')
        det.set(static_cast<int>(q));
      else if (toks[0][q] != '0')
        throw ParseError("bitstring may contain only '0' and '1'", line_no);
    }
    double amp = 0.0;
    if (!parse_double(toks[1], amp)) throw ParseError("invalid amplitude", line_no);
    if (!seen.insert(det).second)
      throw DuplicateTermError("duplicate determinant " + det.to_string() + " (line " +
                               std::to_string(line_no) + ")");
    terms.push_back({std::move(det), amp});
  }
  return SparseWavefunction(static_cast<int>(n), static_cast<int>(na), static_cast<int>(nb),
                            std::move(terms));
}

void write_wavefunction(std::ostream& out, const SparseWavefunction& wfn) {
  out << wfn.n_qubits() << ' ' << wfn.n_alpha() << ' ' << wfn.n_beta() << '\n';
  char buf[64];
  for (const auto& t : wfn.terms()) {
    std::snprintf(buf, sizeof(buf), "%.17g", t.amplitude);
    out << t.det.to_string() << ' ' << buf << '\n';
  }
}

SparseWavefunction normalize(const SparseWavefunction& wfn) {
  const double n2 = wfn.norm2();
  if (!(n2 > 0.0)) throw DegenerateStateError("cannot normalize zero-norm wavefunction");
  const double inv = 1.0 / std::sqrt(n2);
  std::vector<WfnTerm> terms = wfn.terms();
  for (auto& t : terms) t.amplitude *= inv;
  return SparseWavefunction(wfn.n_qubits(), wfn.n_alpha(), wfn.n_beta(), std::move(terms));
}

SparseWavefunction truncate_top_chi(const SparseWavefunction& wfn, std::size_t chi,
                                    bool renormalize) {
  if (chi < 1) throw ArgumentError("chi must be >= 1");
  const auto& terms = wfn.terms();
  const std::size_t keep = std::min(chi, terms.size());

  std::vector<std::size_t> order(terms.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double ma = std::abs(terms[a].amplitude);
    const double mb = std::abs(terms[b].amplitude);
    if (ma != mb) return ma > mb;
    return terms[a].det < terms[b].det;
  });
  order.resize(keep);
  std::sort(order.begin(), order.end());  // preserve file order of the survivors

  std::vector<WfnTerm> kept;
  kept.reserve(keep);
  for (std::size_t idx : order) kept.push_back(terms[idx]);
  SparseWavefunction out(wfn.n_qubits(), wfn.n_alpha(), wfn.n_beta(), std::move(kept));
  return renormalize ? normalize(out) : out;
}

}  // namespace orbcorr
