#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lqdps/solver.hpp"

namespace lqdps {

inline std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// One row per iterate; transition fields of the last row are "nan".
inline void write_trace_csv(const IterationTrace& trace, std::ostream& os) {
  if (trace.records.empty()) throw std::invalid_argument("write_trace_csv: empty trace");
  std::size_t n = trace.records.front().x.size();
  std::size_t m = trace.records.front().z.size();
  os << "k";
  for (std::size_t i = 1; i <= n; ++i) os << ",x" << i;
  for (std::size_t i = 1; i <= m; ++i) os << ",z" << i;
  for (std::size_t i = 1; i <= m; ++i) os << ",F" << i;
  os << ",f,qsq_step,step_inf,z_residual,sublevel_violation,descent_margin\n";
  for (const IterationRecord& r : trace.records) {
    os << r.k;
    for (double v : r.x) os << ',' << fmt_g17(v);
    for (double v : r.z) os << ',' << fmt_g17(v);
    for (double v : r.f_values) os << ',' << fmt_g17(v);
    os << ',' << fmt_g17(r.f) << ',' << fmt_g17(r.qsq_step) << ',' << fmt_g17(r.step_inf) << ','
       << fmt_g17(r.z_res) << ',' << fmt_g17(r.sublevel_viol) << ',' << fmt_g17(r.descent_margin)
       << '\n';
  }
}

inline void write_trace_csv(const IterationTrace& trace, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_trace_csv: cannot open " + path);
  write_trace_csv(trace, os);
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  std::stringstream ss(line);
  while (std::getline(ss, cur, ',')) out.push_back(cur);
  return out;
}

// Rebuilds enough of a trace from its CSV to re-run the audits. The stop
// reason is not stored in the file; audits do not need it.
inline IterationTrace read_trace_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("read_trace_csv: empty file");
  std::vector<std::string> header = split_csv_line(line);
  std::size_t n = 0, m = 0;
  for (const std::string& h : header) {
    if (h.size() >= 2 && h[0] == 'x') ++n;
    if (h.size() >= 2 && h[0] == 'z' && h != "z_residual") ++m;
  }
  if (header.size() != 1 + n + 2 * m + 6)
    throw std::runtime_error("read_trace_csv: unexpected column layout");

  IterationTrace trace;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != header.size()) throw std::runtime_error("read_trace_csv: ragged row");
    IterationRecord r;
    std::size_t c = 0;
    r.k = std::stol(cells[c++]);
    r.x.resize(n);
    for (std::size_t i = 0; i < n; ++i) r.x[i] = std::stod(cells[c++]);
    r.z.resize(m);
    for (std::size_t i = 0; i < m; ++i) r.z[i] = std::stod(cells[c++]);
    r.f_values.resize(m);
    for (std::size_t i = 0; i < m; ++i) r.f_values[i] = std::stod(cells[c++]);
    r.f = std::stod(cells[c++]);
    r.qsq_step = std::stod(cells[c++]);
    r.step_inf = std::stod(cells[c++]);
    r.z_res = std::stod(cells[c++]);
    r.sublevel_viol = std::stod(cells[c++]);
    r.descent_margin = std::stod(cells[c++]);
    trace.records.push_back(std::move(r));
  }
  if (trace.records.empty()) throw std::runtime_error("read_trace_csv: no data rows");
  return trace;
}

inline IterationTrace read_trace_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("read_trace_csv: cannot open " + path);
  return read_trace_csv(is);
}

}  // namespace lqdps
