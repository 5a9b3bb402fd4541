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

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace rla {

struct DemandSample {
  double t = 0.0;       ///< seconds since trace start
  double demand = 0.0;  ///< Mbit/s

  friend bool operator==(const DemandSample&, const DemandSample&) = default;
};

/// Requested bandwidth over time; strictly increasing t, demand >= 0.
struct DemandTrace {
  std::vector<DemandSample> samples;

  bool empty() const noexcept { return samples.empty(); }
  friend bool operator==(const DemandTrace&, const DemandTrace&) = default;
};

/// Throws EmptyTrace, or BadParameter naming the offending sample index.
void validate_trace(const DemandTrace& trace);

/// CSV `time_s,demand_mbps`. Throws ParseError(line, reason) or EmptyTrace.
DemandTrace parse_trace(std::string_view text);
std::string serialize_trace(const DemandTrace& trace);

/// A 24 h day at `base` Mbit/s with a triangular peak: linear ramp from base
/// at `peak_start` up to `peak` at mid-window and back to base at `peak_end`.
/// Samples are spaced 3600 / samples_per_hour seconds starting at t = 0.
/// Throws BadWindow for a window outside [0, 24 h] or start >= end, and
/// BadParameter for base > peak, negative base or samples_per_hour < 1.
DemandTrace synth_diurnal(double peak_start, double peak_end, double base, double peak,
                          int samples_per_hour);

/// Zero-order hold: demand of the latest sample at or before t (the first
/// sample's demand before the trace starts).
double demand_at(const DemandTrace& trace, double t);

}  // namespace rla
