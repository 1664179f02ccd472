// Copyright 2026 The orbcorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file report_io.hpp
 * @brief Machine-readable report rendering (JSON and CSV).
 *
 * All floats are serialized with 12 significant digits through a single
 * formatter, and every value is produced by a fixed serial traversal, so
 * identical inputs yield byte-identical files regardless of worker count.
 * Undefined values (matrix diagonals, undefined metrics) are serialized as
 * JSON null / empty CSV fields, never 0.
 */

#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbcorr/info.hpp"
#include "orbcorr/orbitals.hpp"

namespace orbcorr {

/// Provenance block embedded in every report: tool version, config echo,
/// chi used, entropy unit.
struct ReportMeta {
  std::string command;
  /// Key/value config echo, rendered in insertion order.
  std::vector<std::pair<std::string, std::string>> config;
  std::size_t chi = 0;
  std::size_t chi_used = 0;
};

/// 12 significant digits; "null" for NaN/inf when `null_for_nan`.
std::string format_double(double v, bool null_for_nan = false);

std::string render_report_json(const CorrelationReport& rep, const ReportMeta& meta);

/// Heatmap over the top-min(100, N) entropy qubits (axes in ascending qubit
/// index): upper triangle quantum MI, lower triangle classical, diagonal
/// empty.
std::string render_heatmap_csv(const CorrelationReport& rep, const ReportMeta& meta);

/// Descending sorted curves: pair MI (quantum, classical, difference) and
/// single-qubit entropies, padded with empty fields past their lengths.
std::string render_curves_csv(const CorrelationReport& rep, const ReportMeta& meta);

/// Per-iteration INO trace (iter, energy, gamma, l1_percent) with a footer
/// recording convergence and oscillation flags.
std::string render_ino_csv(const InoTrace& trace, const ReportMeta& meta);

}  // namespace orbcorr
