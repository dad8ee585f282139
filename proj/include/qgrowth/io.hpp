// SPDX-License-Identifier: Apache-2.0
//
// CSV reading/writing for trajectories and observation series. All numbers
// are rendered with 17 significant digits so a write/read round trip
// reproduces the exact double.

#ifndef QGROWTH_IO_HPP
#define QGROWTH_IO_HPP

#include <cstdio>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgrowth/dynamics.hpp"

namespace qgrowth {

inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

/// Writes the canonical trajectory table: columns t,p,method,flag.
inline void write_trajectory_csv(std::ostream& os, const Trajectory& traj,
                                 SolveMethod method,
                                 const std::optional<std::string>& header_comment) {
  if (header_comment) os << "# " << *header_comment << "\n";
  os << "t,p,method,flag\n";
  for (std::size_t i = 0; i < traj.size(); ++i)
    os << format_number(traj.times[i]) << ',' << format_number(traj.values[i]) << ','
       << to_string(method) << ',' << to_string(traj.flags[i]) << '\n';
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace detail

struct CsvSeries {
  std::vector<double> times;
  std::vector<double> values;
  bool normalized = true;  // true when the value column was 'p', false for 'n'
};

/// Reads a series with columns `t` and one of `p` (normalized) or `n` (raw
/// counts). Lines starting with '#' are comments; extra columns (method,
/// flag, ...) are ignored.
inline CsvSeries read_series_csv(std::istream& is) {
  std::string line;
  std::vector<std::string> header;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    header = detail::split_csv_line(line);
    break;
  }
  if (header.empty()) throw std::invalid_argument("csv: missing header row");

  int t_col = -1, p_col = -1, n_col = -1;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "t") t_col = static_cast<int>(i);
    if (header[i] == "p") p_col = static_cast<int>(i);
    if (header[i] == "n") n_col = static_cast<int>(i);
  }
  if (t_col < 0) throw std::invalid_argument("csv: missing required column 't'");
  if (p_col < 0 && n_col < 0)
    throw std::invalid_argument("csv: missing required column 'p' or 'n'");
  const int v_col = p_col >= 0 ? p_col : n_col;

  CsvSeries out;
  out.normalized = p_col >= 0;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto cells = detail::split_csv_line(line);
    if (cells.size() <= static_cast<std::size_t>(std::max(t_col, v_col)))
      throw std::invalid_argument("csv: short row at line " + std::to_string(line_no));
    try {
      out.times.push_back(std::stod(cells[t_col]));
      out.values.push_back(std::stod(cells[v_col]));
    } catch (const std::exception&) {
      throw std::invalid_argument("csv: unparsable number at line " + std::to_string(line_no));
    }
  }
  if (out.times.empty()) throw std::invalid_argument("csv: no data rows");
  return out;
}

}  // namespace qgrowth

#endif  // QGROWTH_IO_HPP
