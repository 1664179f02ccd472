// Copyright 2026 The orbcorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "orbcorr/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "orbcorr/version.hpp"

namespace orbcorr {

std::string format_double(double v, bool null_for_nan) {
  if (!std::isfinite(v)) return null_for_nan ? "null" : "";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

void append_meta_json(std::string& out, const ReportMeta& meta) {
  out += "  \"meta\": {\n";
  out += "    \"tool\": \"orbcorr\",\n";
  out += std::string("    \"version\": \"") + kVersion + "\",\n";
  out += "    \"command\": \"" + json_escape(meta.command) + "\",\n";
  out += "    \"entropy_unit\": \"nats\",\n";
  out += "    \"chi\": " + std::to_string(meta.chi) + ",\n";
  out += "    \"chi_used\": " + std::to_string(meta.chi_used) + ",\n";
  out += "    \"config\": {";
  bool first = true;
  for (const auto& [k, v] : meta.config) {
    out += first ? "\n" : ",\n";
    out += "      \"" + json_escape(k) + "\": \"" + json_escape(v) + "\"";
    first = false;
  }
  out += first ? "}\n" : "\n    }\n";
  out += "  }";
}

void append_array(std::string& out, const std::vector<double>& v) {
  out += '[';
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += format_double(v[k], true);
  }
  out += ']';
}

void append_matrix(std::string& out, const Eigen::MatrixXd& m) {
  out += '[';
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out += r ? ",\n    [" : "\n    [";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out += ", ";
      out += format_double(m(r, c), true);
    }
    out += ']';
  }
  out += "\n  ]";
}

std::string meta_comment_lines(const ReportMeta& meta) {
  std::string out;
  out += std::string("# tool=orbcorr version=") + kVersion + " command=" + meta.command +
         " entropy_unit=nats chi=" + std::to_string(meta.chi) +
         " chi_used=" + std::to_string(meta.chi_used) + "\n";
  if (!meta.config.empty()) {
    out += "# config:";
    for (const auto& [k, v] : meta.config) out += " " + k + "=" + v;
    out += "\n";
  }
  return out;
}

}  // namespace

std::string render_report_json(const CorrelationReport& rep, const ReportMeta& meta) {
  std::string out = "{\n";
  append_meta_json(out, meta);
  out += ",\n";

  out += "  \"l1_percent\": ";
  out += rep.l1_defined ? format_double(rep.l1_percent, true) : "null";
  out += ",\n  \"gamma\": ";
  out += rep.gamma_defined ? format_double(rep.gamma, true) : "null";

  out += ",\n  \"entropies_vn\": ";
  append_array(out, rep.entropies_vn);
  out += ",\n  \"entropies_sh\": ";
  append_array(out, rep.entropies_sh);

  out += ",\n  \"top_entropy_qubits\": [";
  for (std::size_t k = 0; k < rep.top_entropy_qubits.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(rep.top_entropy_qubits[k]);
  }
  out += ']';

  out += ",\n  \"sorted_entropy\": ";
  append_array(out, rep.sorted_entropy);
  out += ",\n  \"sorted_mi_quantum\": ";
  append_array(out, rep.sorted_mi_quantum);
  out += ",\n  \"sorted_mi_classical\": ";
  append_array(out, rep.sorted_mi_classical);
  out += ",\n  \"sorted_mi_classical_minus_quantum\": ";
  append_array(out, rep.sorted_mi_diff);

  out += ",\n  \"mi_quantum\": [";
  append_matrix(out, rep.mi.quantum);
  out += ",\n  \"mi_classical\": [";
  append_matrix(out, rep.mi.classical);
  out += "\n}\n";
  return out;
}

std::string render_heatmap_csv(const CorrelationReport& rep, const ReportMeta& meta) {
  std::string out = meta_comment_lines(meta);
  out += "# upper triangle: quantum mutual information; lower: classical; diagonal undefined\n";

  std::vector<int> axis = rep.top_entropy_qubits;
  std::sort(axis.begin(), axis.end());

  out += "qubit";
  for (int q : axis) out += "," + std::to_string(q);
  out += '\n';
  for (std::size_t r = 0; r < axis.size(); ++r) {
    out += std::to_string(axis[r]);
    for (std::size_t c = 0; c < axis.size(); ++c) {
      out += ',';
      if (r == c) continue;  // undefined diagonal stays an empty field
      const double v = r < c ? rep.mi.quantum(axis[r], axis[c])
                             : rep.mi.classical(axis[r], axis[c]);
      out += format_double(v);
    }
    out += '\n';
  }
  return out;
}

std::string render_curves_csv(const CorrelationReport& rep, const ReportMeta& meta) {
  std::string out = meta_comment_lines(meta);
  out += "rank,mi_quantum,mi_classical,mi_classical_minus_quantum,entropy_vn,entropy_sh\n";
  const std::size_t rows = std::max(rep.sorted_mi_quantum.size(), rep.sorted_entropy.size());
  for (std::size_t r = 0; r < rows; ++r) {
    out += std::to_string(r);
    if (r < rep.sorted_mi_quantum.size()) {
      out += ',' + format_double(rep.sorted_mi_quantum[r]);
      out += ',' + format_double(rep.sorted_mi_classical[r]);
      out += ',' + format_double(rep.sorted_mi_diff[r]);
    } else {
      out += ",,,";
    }
    if (r < rep.sorted_entropy.size()) {
      const double e = rep.sorted_entropy[r];
      out += ',' + format_double(e);
      out += ',' + format_double(e);  // single-qubit matrices are diagonal
    } else {
      out += ",,";
    }
    out += '\n';
  }
  return out;
}

std::string render_ino_csv(const InoTrace& trace, const ReportMeta& meta) {
  std::string out = meta_comment_lines(meta);
  out += "iter,energy,gamma,l1_percent\n";
  for (const auto& it : trace.iterations) {
    out += std::to_string(it.iteration);
    out += ',' + format_double(it.energy);
    out += ',' + format_double(it.gamma);
    out += ',';
    if (it.l1_defined) out += format_double(it.l1_percent);
    out += '\n';
  }
  out += std::string("# converged=") + (trace.converged ? "true" : "false") + "\n";
  out += std::string("# oscillation=") + (trace.oscillation ? "true" : "false") + "\n";
  return out;
}

}  // namespace orbcorr
