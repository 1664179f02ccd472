// Copyright 2026 The orbcorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "orbcorr/fcidump.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "orbcorr/errors.hpp"

namespace orbcorr {

namespace {

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

// FCIDUMP floats may use Fortran 'D' exponents.
bool parse_value(std::string tok, double& out) {
  for (char& c : tok)
    if (c == 'D' || c == 'd') c = 'E';
  try {
    std::size_t pos = 0;
    out = std::stod(tok, &pos);
    return pos == tok.size() && std::isfinite(out);
  } catch (const std::exception&) {
    return false;
  }
}

struct HeaderFields {
  int norb = -1;
  int nelec = 0;
  int ms2 = 0;
  std::vector<int> orbsym;
};

HeaderFields parse_header(const std::string& text) {
  HeaderFields f;
  std::string body = upper(text);
  // Strip the &FCI opener; split on commas into KEY=VALUE items. ORBSYM's
  // own comma-separated list is handled by accumulating bare integers that
  // follow it.
  const auto amp = body.find("&FCI");
  if (amp == std::string::npos) throw FormatError("FCIDUMP header must start with &FCI");
  body = body.substr(amp + 4);
  std::string item;
  std::string pending_key;
  std::istringstream iss(body);
  auto handle = [&](const std::string& raw) {
    std::string s = raw;
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](unsigned char c) { return std::isspace(c) != 0; }),
            s.end());
    if (s.empty()) return;
    const auto eq = s.find('=');
    std::string key;
    std::string val;
    if (eq == std::string::npos) {
      key = pending_key;
      val = s;
    } else {
      key = s.substr(0, eq);
      val = s.substr(eq + 1);
    }
    if (key.empty()) throw FormatError("malformed FCIDUMP header item '" + raw + "'");
    long num = 0;
    const bool is_num =
        !val.empty() &&
        std::from_chars(val.data(), val.data() + val.size(), num).ec == std::errc{};
    if (key == "NORB") {
      if (!is_num) throw FormatError("invalid NORB value");
      f.norb = static_cast<int>(num);
    } else if (key == "NELEC") {
      if (!is_num) throw FormatError("invalid NELEC value");
      f.nelec = static_cast<int>(num);
    } else if (key == "MS2") {
      if (!is_num) throw FormatError("invalid MS2 value");
      f.ms2 = static_cast<int>(num);
    } else if (key == "ORBSYM") {
      if (is_num) f.orbsym.push_back(static_cast<int>(num));
      pending_key = "ORBSYM";
      return;
    }
    // other keys (ISYM, IUHF, ...) are recognized and ignored
    pending_key.clear();
  };
  while (std::getline(iss, item, ',')) handle(item);
  if (f.norb < 1) throw FormatError("FCIDUMP header missing NORB");
  return f;
}

}  // namespace

Fcidump read_fcidump(std::istream& in) {
  std::string line;
  std::string header;
  bool header_done = false;
  while (std::getline(in, line)) {
    std::string u = upper(line);
    const auto end_pos = std::min(u.find("&END"), u.find('/'));
    if (end_pos != std::string::npos) {
      header += line.substr(0, end_pos);
      header_done = true;
      break;
    }
    header += line;
    header += ' ';
  }
  if (!header_done) throw FormatError("FCIDUMP header not terminated by &END or /");
  const HeaderFields f = parse_header(header);

  Fcidump dump;
  dump.hamiltonian = Hamiltonian(f.norb);
  dump.nelec = f.nelec;
  dump.ms2 = f.ms2;
  dump.orbsym = f.orbsym;

  double v = 0.0;
  long i = 0, j = 0, k = 0, l = 0;
  while (in >> line) {
    if (!parse_value(line, v)) throw ParseError("invalid FCIDUMP value '" + line + "'");
    if (!(in >> i >> j >> k >> l)) throw FormatError("truncated FCIDUMP integral line");
    const auto check = [&](long idx) {
      if (idx < 0 || idx > f.norb)
        throw DimensionError("orbital index " + std::to_string(idx) + " outside [0, " +
                             std::to_string(f.norb) + "]");
    };
    check(i);
    check(j);
    check(k);
    check(l);
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      dump.hamiltonian.e_core = v;
    } else if (k == 0 && l == 0 && i > 0 && j > 0) {
      dump.hamiltonian.h1(i - 1, j - 1) = v;
      dump.hamiltonian.h1(j - 1, i - 1) = v;
    } else if (i > 0 && j > 0 && k > 0 && l > 0) {
      dump.hamiltonian.set_eri(static_cast<int>(i - 1), static_cast<int>(j - 1),
                               static_cast<int>(k - 1), static_cast<int>(l - 1), v);
    } else {
      throw FormatError("unsupported FCIDUMP index pattern " + std::to_string(i) + " " +
                        std::to_string(j) + " " + std::to_string(k) + " " +
                        std::to_string(l));
    }
  }
  return dump;
}

void write_fcidump(std::ostream& out, const Hamiltonian& h, int nelec, int ms2) {
  const int m = h.n_spatial;
  out << "&FCI NORB=" << m << ",NELEC=" << nelec << ",MS2=" << ms2 << ",\n";
  out << " ORBSYM=";
  for (int p = 0; p < m; ++p) out << "1,";
  out << "\n ISYM=1,\n&END\n";

  char buf[48];
  const auto emit = [&](double v, int a, int b, int c, int d) {
    std::snprintf(buf, sizeof(buf), "%23.16E", v);
    out << buf << ' ' << a << ' ' << b << ' ' << c << ' ' << d << '\n';
  };
  for (int p = 0; p < m; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r <= p; ++r)
        for (int s = 0; s <= (r == p ? q : r); ++s) {
          const double v = h.eri_at(p, q, r, s);
          if (v != 0.0) emit(v, p + 1, q + 1, r + 1, s + 1);
        }
  for (int p = 0; p < m; ++p)
    for (int q = 0; q <= p; ++q)
      if (h.h1(p, q) != 0.0) emit(h.h1(p, q), p + 1, q + 1, 0, 0);
  emit(h.e_core, 0, 0, 0, 0);
}

}  // namespace orbcorr
