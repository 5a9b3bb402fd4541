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

// Reports over a finished run. Each has a typed form for tests and a CSV
// form for the command line.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rla/engine.hpp"

namespace rla {

inline constexpr double kMbitPerGigabyte = 8000.0;
inline constexpr double kDaysPerYear = 365.0;

struct SupplyPoint {
  double t = 0.0;
  double demand_mbps = 0.0;
  double supplied_mbps = 0.0;
};

struct ShortfallPoint {
  double t = 0.0;
  double unmet_mbps = 0.0;
};

struct LinkCost {
  std::string link_id;
  double transmitted_gb = 0.0;
  double cost_per_gb = 0.0;
  double cost = 0.0;
};

struct CostReport {
  std::vector<LinkCost> links;
  double total = 0.0;
  /// total * 365, treating the run as one representative day.
  double annual_total = 0.0;
};

std::vector<SupplyPoint> supply_series(const SimulationResult& result);

/// unmet = max(0, demand - supplied) per tick.
std::vector<ShortfallPoint> shortfall_series(const SimulationResult& result);

/// Costs use the per-GB prices in `group` (matched to result links by index).
CostReport cost_report(const SimulationResult& result, const AggregationGroup& group);
inline CostReport cost_report(const SimulationResult& result) {
  return cost_report(result, result.group);
}

/// Per tick, adjacent enqueued quanta that went to different links.
std::vector<std::size_t> reorder_indicator(const SimulationResult& result);

std::string supply_csv(const SimulationResult& result);
std::string shortfall_csv(const SimulationResult& result);
std::string cost_csv(const SimulationResult& result);
std::string reorder_csv(const SimulationResult& result);

/// `time_s,demand_mbps,supplied_<policy>...`; all results must share one
/// tick grid and demand series.
std::string compare_csv(const std::vector<SimulationResult>& results);

}  // namespace rla
