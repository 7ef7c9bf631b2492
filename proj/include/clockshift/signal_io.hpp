// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <istream>
#include <sstream>

#include <json.hpp>

#include "clockshift/signal.hpp"

namespace clockshift {

/// CSV signal input: columns j,re,im, one row per sample, j covering the
/// centered range (any row order); a header row is skipped if present.
inline PeriodicSignal parse_signal_csv(std::istream& in) {
  struct Row {
    long j;
    cplx value;
  };
  std::vector<Row> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string a, b, c;
    if (!std::getline(ls, a, ',') || !std::getline(ls, b, ',') ||
        !std::getline(ls, c))
      throw std::invalid_argument("signal CSV: expected three columns j,re,im");
    try {
      rows.push_back({std::stol(a), cplx(std::stod(b), std::stod(c))});
    } catch (const std::exception&) {
      if (rows.empty()) continue;  // header row
      throw std::invalid_argument("signal CSV: unparsable row: " + line);
    }
  }
  require(rows.size() >= 2, "signal CSV: need at least 2 samples");
  IndexRange r(rows.size());
  std::vector<cplx> samples(rows.size());
  std::vector<bool> seen(rows.size(), false);
  for (const Row& row : rows) {
    require(r.contains(row.j), "signal CSV: index " + std::to_string(row.j) +
                                   " outside the centered range for d = " +
                                   std::to_string(rows.size()));
    std::size_t p = r.pos_of(row.j);
    require(!seen[p], "signal CSV: duplicate index " + std::to_string(row.j));
    seen[p] = true;
    samples[p] = row.value;
  }
  return make_signal(std::move(samples));
}

/// JSON signal input: array of [re, im] pairs in ascending-j order.
inline PeriodicSignal parse_signal_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("signal JSON: parse error: ") + e.what());
  }
  require(j.is_array() && j.size() >= 2,
          "signal JSON: expected an array of at least 2 [re, im] pairs");
  std::vector<cplx> samples;
  for (const auto& item : j) {
    require(item.is_array() && item.size() == 2 && item[0].is_number() &&
                item[1].is_number(),
            "signal JSON: each sample must be an [re, im] pair");
    samples.emplace_back(item[0].get<double>(), item[1].get<double>());
  }
  return make_signal(std::move(samples));
}

inline std::string signal_stats_json(std::size_t d, const SignalStats& stats,
                                     Feasibility verdict) {
  JsonObjectBuilder b;
  b.field("d", d)
      .raw("R", json_complex_array(stats.correlation))
      .raw("T", json_complex_array(stats.intensity_ft))
      .field("verdict", to_string(verdict));
  return b.str();
}

}  // namespace clockshift
