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

#include "rla/report.hpp"

#include <algorithm>

#include "rla/csv.hpp"
#include "rla/error.hpp"

namespace rla {

std::vector<SupplyPoint> supply_series(const SimulationResult& result) {
  std::vector<SupplyPoint> out;
  out.reserve(result.ticks.size());
  for (const auto& rec : result.ticks) out.push_back({rec.t, rec.demand, rec.supplied_mbps});
  return out;
}

std::vector<ShortfallPoint> shortfall_series(const SimulationResult& result) {
  std::vector<ShortfallPoint> out;
  out.reserve(result.ticks.size());
  for (const auto& rec : result.ticks) {
    out.push_back({rec.t, std::max(0.0, rec.demand - rec.supplied_mbps)});
  }
  return out;
}

CostReport cost_report(const SimulationResult& result, const AggregationGroup& group) {
  const std::size_t n = group.size();
  std::vector<double> mbit(n, 0.0);
  for (const auto& rec : result.ticks) {
    if (rec.transmitted.size() != n) {
      throw Error(ErrorCode::BadParameter, "result and group disagree on link count");
    }
    for (std::size_t i = 0; i < n; ++i) mbit[i] += rec.transmitted[i];
  }

  CostReport report;
  for (std::size_t i = 0; i < n; ++i) {
    LinkCost lc;
    lc.link_id = group[i].id;
    lc.transmitted_gb = mbit[i] / kMbitPerGigabyte;
    lc.cost_per_gb = group[i].cost_per_gb;
    lc.cost = lc.transmitted_gb * lc.cost_per_gb;
    report.total += lc.cost;
    report.links.push_back(std::move(lc));
  }
  report.annual_total = report.total * kDaysPerYear;
  return report;
}

std::vector<std::size_t> reorder_indicator(const SimulationResult& result) {
  std::vector<std::size_t> out;
  out.reserve(result.ticks.size());
  for (const auto& rec : result.ticks) out.push_back(rec.link_switches);
  return out;
}

std::string supply_csv(const SimulationResult& result) {
  std::string out = "time_s,demand_mbps,supplied_mbps\n";
  for (const auto& p : supply_series(result)) {
    out += csv::format(p.t) + ',' + csv::format(p.demand_mbps) + ',' + csv::format(p.supplied_mbps) + '\n';
  }
  return out;
}

std::string shortfall_csv(const SimulationResult& result) {
  std::string out = "time_s,unmet_mbps\n";
  for (const auto& p : shortfall_series(result)) {
    out += csv::format(p.t) + ',' + csv::format(p.unmet_mbps) + '\n';
  }
  return out;
}

std::string cost_csv(const SimulationResult& result) {
  const auto report = cost_report(result);
  std::string out = "link_id,transmitted_gb,cost_per_gb,cost,annual_cost\n";
  double gb = 0.0;
  for (const auto& lc : report.links) {
    gb += lc.transmitted_gb;
    out += lc.link_id + ',' + csv::format(lc.transmitted_gb) + ',' + csv::format(lc.cost_per_gb) +
           ',' + csv::format(lc.cost) + ',' + csv::format(lc.cost * kDaysPerYear) + '\n';
  }
  out += "total," + csv::format(gb) + ",," + csv::format(report.total) + ',' +
         csv::format(report.annual_total) + '\n';
  return out;
}

std::string reorder_csv(const SimulationResult& result) {
  std::string out = "time_s,reorder_events\n";
  for (const auto& rec : result.ticks) {
    out += csv::format(rec.t) + ',' + std::to_string(rec.link_switches) + '\n';
  }
  return out;
}

std::string compare_csv(const std::vector<SimulationResult>& results) {
  if (results.empty()) throw Error(ErrorCode::BadParameter, "nothing to compare");
  const auto& base = results.front().ticks;
  for (const auto& r : results) {
    if (r.ticks.size() != base.size()) {
      throw Error(ErrorCode::BadParameter, "compared runs have different tick counts");
    }
  }

  std::string out = "time_s,demand_mbps";
  for (const auto& r : results) out += ",supplied_" + std::string(to_string(r.config.policy));
  out += '\n';
  for (std::size_t k = 0; k < base.size(); ++k) {
    out += csv::format(base[k].t) + ',' + csv::format(base[k].demand);
    for (const auto& r : results) out += ',' + csv::format(r.ticks[k].supplied_mbps);
    out += '\n';
  }
  return out;
}

}  // namespace rla
