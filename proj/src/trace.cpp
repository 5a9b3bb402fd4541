/*
Copyright 2026 The RLA Simulator Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "rla/trace.hpp"

#include <algorithm>
#include <cmath>

#include "rla/csv.hpp"
#include "rla/error.hpp"

namespace rla {

namespace {

constexpr double kSecondsPerDay = 86400.0;
constexpr double kSecondsPerHour = 3600.0;

}  // namespace

void validate_trace(const DemandTrace& trace) {
  if (trace.empty()) throw Error(ErrorCode::EmptyTrace, "trace has no samples");
  for (std::size_t i = 0; i < trace.samples.size(); ++i) {
    const auto& s = trace.samples[i];
    if (!std::isfinite(s.t) || !std::isfinite(s.demand) || s.demand < 0.0) {
      throw Error(ErrorCode::BadParameter, "sample " + std::to_string(i) + ": bad time or demand");
    }
    if (i > 0 && !(s.t > trace.samples[i - 1].t)) {
      throw Error(ErrorCode::BadParameter,
                  "sample " + std::to_string(i) + ": time not strictly increasing");
    }
  }
}

DemandTrace parse_trace(std::string_view text) {
  const auto rows = csv::read(text);
  if (rows.empty()) throw ParseError(1, "missing header 'time_s,demand_mbps'");
  const auto& header = rows.front();
  if (header.cells.size() != 2 || header.cells[0] != "time_s" || header.cells[1] != "demand_mbps") {
    throw ParseError(header.line, "expected header 'time_s,demand_mbps'");
  }

  DemandTrace trace;
  trace.samples.reserve(rows.size() - 1);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.cells.size() != 2) throw ParseError(row.line, "expected 2 columns");
    const auto t = csv::to_double(row.cells[0]);
    if (!t) throw ParseError(row.line, "bad time '" + std::string(row.cells[0]) + "'");
    const auto demand = csv::to_double(row.cells[1]);
    if (!demand) throw ParseError(row.line, "bad demand '" + std::string(row.cells[1]) + "'");
    if (*demand < 0.0) throw ParseError(row.line, "negative demand");
    if (!trace.samples.empty() && !(*t > trace.samples.back().t)) {
      throw ParseError(row.line, "time not strictly increasing");
    }
    trace.samples.push_back({*t, *demand});
  }
  if (trace.empty()) throw Error(ErrorCode::EmptyTrace, "trace has no samples");
  return trace;
}

std::string serialize_trace(const DemandTrace& trace) {
  std::string out = "time_s,demand_mbps\n";
  for (const auto& s : trace.samples) {
    out += csv::format(s.t);
    out += ',';
    out += csv::format(s.demand);
    out += '\n';
  }
  return out;
}

DemandTrace synth_diurnal(double peak_start, double peak_end, double base, double peak,
                          int samples_per_hour) {
  if (!(peak_start >= 0.0 && peak_start < peak_end && peak_end <= kSecondsPerDay)) {
    throw Error(ErrorCode::BadWindow, "peak window must satisfy 0 <= start < end <= 24 h");
  }
  if (!(base >= 0.0 && base <= peak && std::isfinite(peak))) {
    throw Error(ErrorCode::BadParameter, "need 0 <= base <= peak");
  }
  if (samples_per_hour < 1) throw Error(ErrorCode::BadParameter, "samples_per_hour must be >= 1");

  const double half = (peak_end - peak_start) / 2.0;
  const double mid = peak_start + half;
  const int count = 24 * samples_per_hour;

  DemandTrace trace;
  trace.samples.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const double t = static_cast<double>(k) * kSecondsPerHour / samples_per_hour;
    double demand = base;
    if (t >= peak_start && t <= peak_end) {
      demand = base + (peak - base) * (1.0 - std::abs(t - mid) / half);
    }
    trace.samples.push_back({t, demand});
  }
  return trace;
}

double demand_at(const DemandTrace& trace, double t) {
  validate_trace(trace);
  const auto it = std::upper_bound(trace.samples.begin(), trace.samples.end(), t,
                                   [](double v, const DemandSample& s) { return v < s.t; });
  if (it == trace.samples.begin()) return trace.samples.front().demand;
  return std::prev(it)->demand;
}

}  // namespace rla
