// Copyright 2026 The orbcorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: `analyze` a wavefunction file, solve a model or
// FCIDUMP with `fci`, or run the iterative natural-orbital loop with `ino`.
// All reports embed the tool version, the configuration echo, the chi used
// and the entropy unit, and are byte-identical for any --workers value.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "orbcorr/errors.hpp"
#include "orbcorr/fci.hpp"
#include "orbcorr/fcidump.hpp"
#include "orbcorr/info.hpp"
#include "orbcorr/orbitals.hpp"
#include "orbcorr/report_io.hpp"
#include "orbcorr/version.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kExitError = 1;
constexpr int kExitInput = 2;
constexpr int kExitConvergence = 3;

struct CommonConfig {
  std::size_t chi = 1000000;
  bool no_renormalize = false;
  std::string out_dir = ".";
  int workers = 0;
  std::string formats = "json,csv";

  bool wants(const std::string& fmt) const {
    std::stringstream ss(formats);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (tok == fmt) return true;
    return false;
  }
};

struct ModelConfig {
  std::string fcidump_path;
  int hubbard_sites = 0;
  double t = 1.0;
  double u = 0.0;
  bool periodic = false;
  std::optional<int> nelec;
  std::optional<int> ms2;
};

void add_common(CLI::App* cmd, CommonConfig& c) {
  cmd->add_option("--chi", c.chi, "Keep only the chi largest-|c| determinants")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--no-renormalize", c.no_renormalize,
                "Do not renormalize after chi-truncation");
  cmd->add_option("--out", c.out_dir, "Output directory");
  cmd->add_option("--workers", c.workers, "Worker threads (0 = hardware default)");
  cmd->add_option("--format", c.formats, "Comma-separated report formats: json,csv");
}

void add_model(CLI::App* cmd, ModelConfig& m, bool fcidump_positional_required) {
  auto* pos = cmd->add_option("fcidump", m.fcidump_path, "FCIDUMP integrals file");
  if (fcidump_positional_required) pos->check(CLI::ExistingFile);
  cmd->add_option("--hubbard", m.hubbard_sites, "Built-in 1-D Hubbard model with this many sites");
  cmd->add_option("--t", m.t, "Hubbard hopping");
  cmd->add_option("--u", m.u, "Hubbard on-site interaction");
  cmd->add_flag("--periodic", m.periodic, "Periodic Hubbard chain");
  cmd->add_option("--nelec", m.nelec, "Electron count (defaults to FCIDUMP NELEC)");
  cmd->add_option("--ms2", m.ms2, "Twice the Sz projection (defaults to FCIDUMP MS2)");
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw orbcorr::Error("cannot open output file " + path.string());
  out << content;
}

orbcorr::SparseWavefunction load_wavefunction(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw orbcorr::ParseError("cannot open wavefunction file " + path);
  return orbcorr::parse_wavefunction(in);
}

struct ModelProblem {
  orbcorr::Hamiltonian h;
  int n_alpha = 0;
  int n_beta = 0;
  std::string source;
};

ModelProblem load_model(const ModelConfig& m) {
  ModelProblem p;
  int nelec = -1;
  int ms2 = m.ms2.value_or(0);
  if (m.hubbard_sites > 0) {
    p.h = orbcorr::hubbard_hamiltonian(m.hubbard_sites, m.t, m.u, m.periodic);
    p.source = "hubbard";
    if (!m.nelec) throw orbcorr::ArgumentError("--nelec is required with --hubbard");
    nelec = *m.nelec;
  } else if (!m.fcidump_path.empty()) {
    std::ifstream in(m.fcidump_path);
    if (!in) throw orbcorr::ParseError("cannot open FCIDUMP file " + m.fcidump_path);
    auto dump = orbcorr::read_fcidump(in);
    p.h = std::move(dump.hamiltonian);
    p.source = m.fcidump_path;
    nelec = m.nelec.value_or(dump.nelec);
    if (!m.ms2) ms2 = dump.ms2;
  } else {
    throw orbcorr::ArgumentError("either an FCIDUMP path or --hubbard is required");
  }
  if (nelec < 0) throw orbcorr::ArgumentError("electron count unspecified");
  if ((nelec + ms2) % 2 != 0 || nelec < std::abs(ms2))
    throw orbcorr::ArgumentError("inconsistent NELEC/MS2 combination");
  p.n_alpha = (nelec + ms2) / 2;
  p.n_beta = (nelec - ms2) / 2;
  return p;
}

orbcorr::ReportMeta make_meta(const std::string& command, const CommonConfig& c,
                              std::vector<std::pair<std::string, std::string>> extra,
                              std::size_t chi_used) {
  orbcorr::ReportMeta meta;
  meta.command = command;
  meta.chi = c.chi;
  meta.chi_used = chi_used;
  meta.config = std::move(extra);
  meta.config.emplace_back("renormalize", c.no_renormalize ? "false" : "true");
  meta.config.emplace_back("workers", std::to_string(c.workers));
  return meta;
}

int run_analyze(const std::string& input, const CommonConfig& c) {
  auto wfn = load_wavefunction(input);
  const std::size_t total = wfn.n_terms();
  wfn = orbcorr::truncate_top_chi(wfn, c.chi, !c.no_renormalize);

  const auto report = orbcorr::build_report(wfn, c.workers);
  auto meta = make_meta("analyze", c, {{"input", input}, {"n_terms_file", std::to_string(total)}},
                        wfn.n_terms());

  fs::create_directories(c.out_dir);
  if (c.wants("json"))
    write_file(fs::path(c.out_dir) / "report.json", orbcorr::render_report_json(report, meta));
  if (c.wants("csv")) {
    write_file(fs::path(c.out_dir) / "heatmap.csv", orbcorr::render_heatmap_csv(report, meta));
    write_file(fs::path(c.out_dir) / "sorted_curves.csv",
               orbcorr::render_curves_csv(report, meta));
  }

  std::printf("N = %d qubits, chi_used = %zu of %zu terms\n", wfn.n_qubits(), wfn.n_terms(),
              total);
  if (report.l1_defined)
    std::printf("L1 = %s %%\n", orbcorr::format_double(report.l1_percent).c_str());
  else
    std::printf("L1 undefined (no quantum mutual information)\n");
  if (report.gamma_defined)
    std::printf("gamma = %s\n", orbcorr::format_double(report.gamma).c_str());
  return 0;
}

int run_fci(const ModelConfig& m, const CommonConfig& c) {
  const auto problem = load_model(m);
  orbcorr::SolverOptions opts;
  opts.n_workers = c.workers;
  const auto result = orbcorr::ground_state(problem.h, problem.n_alpha, problem.n_beta, opts);

  std::printf("E0 = %.9f\n", result.energy);
  if (result.degenerate)
    std::fprintf(stderr,
                 "warning: ground state nearly degenerate (gap %.3e); correlation analyses "
                 "on it are basis-dependent\n",
                 result.gap);

  fs::create_directories(c.out_dir);
  const auto wfn = orbcorr::truncate_top_chi(result.wfn, c.chi, !c.no_renormalize);
  std::ostringstream os;
  orbcorr::write_wavefunction(os, wfn);
  write_file(fs::path(c.out_dir) / "wavefunction.txt", os.str());
  return 0;
}

int run_ino(const ModelConfig& m, const CommonConfig& c, double gamma_tol, int max_iter) {
  const auto problem = load_model(m);
  orbcorr::InoOptions opts;
  opts.gamma_tol = gamma_tol;
  opts.max_iterations = max_iter;
  opts.n_workers = c.workers;
  const auto result = orbcorr::ino_loop(problem.h, problem.n_alpha, problem.n_beta, opts);

  for (const auto& it : result.trace.iterations)
    std::printf("iter %d: E = %.9f  gamma = %s  L1 = %s\n", it.iteration, it.energy,
                orbcorr::format_double(it.gamma).c_str(),
                it.l1_defined ? orbcorr::format_double(it.l1_percent).c_str() : "undefined");
  std::printf("converged = %s\n", result.trace.converged ? "true" : "false");

  auto meta = make_meta("ino", c,
                        {{"input", problem.source},
                         {"gamma_tol", orbcorr::format_double(gamma_tol)},
                         {"max_iter", std::to_string(max_iter)}},
                        result.wfn_final.n_terms());

  fs::create_directories(c.out_dir);
  write_file(fs::path(c.out_dir) / "ino_trace.csv", orbcorr::render_ino_csv(result.trace, meta));

  std::ostringstream fd;
  orbcorr::write_fcidump(fd, result.h_final, problem.n_alpha + problem.n_beta,
                         problem.n_alpha - problem.n_beta);
  write_file(fs::path(c.out_dir) / "final.fcidump", fd.str());

  const auto wfn = orbcorr::truncate_top_chi(result.wfn_final, c.chi, !c.no_renormalize);
  std::ostringstream os;
  orbcorr::write_wavefunction(os, wfn);
  write_file(fs::path(c.out_dir) / "wavefunction.txt", os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("orbcorr ") + orbcorr::kVersion +
               " - classical vs quantum orbital-pair correlation analysis"};
  app.require_subcommand(1);

  CommonConfig c_analyze, c_fci, c_ino;
  ModelConfig m_fci, m_ino;
  std::string analyze_input;
  double gamma_tol = 1e-8;
  int max_iter = 10;

  auto* analyze = app.add_subcommand("analyze", "Correlation report for a wavefunction file");
  analyze->add_option("wavefunction", analyze_input, "Wavefunction text file")->required();
  add_common(analyze, c_analyze);

  auto* fci = app.add_subcommand("fci", "Ground state of an FCIDUMP or built-in model");
  add_model(fci, m_fci, false);
  add_common(fci, c_fci);

  auto* ino = app.add_subcommand("ino", "Iterative natural-orbital loop");
  add_model(ino, m_ino, false);
  ino->add_option("--gamma-tol", gamma_tol, "Stop when gamma drops below this");
  ino->add_option("--max-iter", max_iter, "Maximum INO iterations");
  add_common(ino, c_ino);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(analyze_input, c_analyze);
    if (fci->parsed()) return run_fci(m_fci, c_fci);
    if (ino->parsed()) return run_ino(m_ino, c_ino, gamma_tol, max_iter);
  } catch (const orbcorr::ConvergenceError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConvergence;
  } catch (const orbcorr::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  } catch (const orbcorr::FormatError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  } catch (const orbcorr::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitError;
  }
  return 0;
}
