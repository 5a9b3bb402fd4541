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

#include "rla/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rla/error.hpp"

namespace rla {

void validate_config(const EngineConfig& config, const AggregationGroup& group) {
  if (!(std::isfinite(config.tick) && config.tick > 0.0)) {
    throw Error(ErrorCode::BadParameter, "tick must be > 0");
  }
  if (!(std::isfinite(config.quantum) && config.quantum > 0.0)) {
    throw Error(ErrorCode::BadParameter, "quantum must be > 0");
  }
  for (const auto& link : group.links()) {
    if (config.quantum > link.threshold) {
      throw Error(ErrorCode::BadParameter, "quantum " + std::to_string(config.quantum) +
                                               " exceeds threshold of link '" + link.id + "'");
    }
  }
}

TickRecord step(AggregationGroup& group, PolicyState& state, const EngineConfig& config,
                double demand_mbps, const FailedMask& failed, double t) {
  if (!(std::isfinite(demand_mbps) && demand_mbps >= 0.0)) {
    throw Error(ErrorCode::BadParameter, "demand must be finite and >= 0");
  }
  const std::size_t n = group.size();
  TickRecord rec;
  rec.t = t;
  rec.demand = demand_mbps;
  rec.assigned.assign(n, 0.0);
  rec.transmitted.assign(n, 0.0);
  rec.buffer_end.assign(n, 0.0);

  const double arrivals = demand_mbps * config.tick;
  const double quanta = std::ceil(arrivals / config.quantum);
  std::size_t previous = n;
  for (double m = 0.0; m < quanta; m += 1.0) {
    const double piece = (m + 1.0 < quanta) ? config.quantum : arrivals - (quanta - 1.0) * config.quantum;
    const std::size_t z = select_link(config.policy, group, state, failed);
    const Link& link = group[z];
    if (link.buffer + piece > link.buffer_cap) {
      rec.dropped += piece;
      continue;
    }
    group.add_to_buffer(z, piece);
    rec.assigned[z] += piece;
    if (previous != n && previous != z) ++rec.link_switches;
    previous = z;
  }

  double sent_total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const bool down = i < failed.size() && failed[i];
    const double buffer = group[i].buffer;
    const double sent = down ? 0.0 : std::min(buffer, group[i].capacity * config.tick);
    group.set_buffer(i, buffer - sent);
    rec.transmitted[i] = sent;
    rec.buffer_end[i] = group[i].buffer;
    sent_total += sent;
  }
  rec.supplied_mbps = sent_total / config.tick;
  return rec;
}

SimulationResult run(const AggregationGroup& group, const EngineConfig& config,
                     const DemandTrace& trace, const FailureSchedule& failures) {
  validate_trace(trace);
  validate_config(config, group);

  SimulationResult result;
  result.config = config;
  result.group = group;
  result.group.clear_buffers();

  FailureSchedule events = failures;
  std::stable_sort(events.begin(), events.end(),
                   [](const FailureEvent& a, const FailureEvent& b) { return a.t < b.t; });
  std::vector<std::size_t> event_link;
  event_link.reserve(events.size());
  for (const auto& e : events) {
    const auto i = group.find(e.link_id);
    if (i == group.size()) {
      throw Error(ErrorCode::BadParameter, "failure schedule names unknown link '" + e.link_id + "'");
    }
    event_link.push_back(i);
  }

  AggregationGroup live = result.group;
  PolicyState state = make_policy_state(live, config.policy, config.wfq_direction);
  FailedMask failed;  // stays empty (all up) until the first event

  const auto& samples = trace.samples;
  // The last sample is held for one sample interval (one tick for a
  // single-sample trace), so a day of samples covers the whole day.
  const double t0 = samples.front().t;
  const double hold = samples.size() > 1 ? samples.back().t - samples[samples.size() - 2].t : config.tick;
  const double slots = (samples.back().t + hold - t0) / config.tick;
  const auto ticks = static_cast<std::size_t>(std::max(1.0, std::ceil(slots - 1e-9 * slots)));
  result.ticks.reserve(ticks);

  std::size_t sample = 0;
  std::size_t next_event = 0;
  for (std::size_t k = 0; k < ticks; ++k) {
    const double t = t0 + static_cast<double>(k) * config.tick;
    while (sample + 1 < samples.size() && samples[sample + 1].t <= t) ++sample;
    while (next_event < events.size() && events[next_event].t <= t) {
      if (failed.empty()) failed.assign(group.size(), false);
      failed[event_link[next_event]] = events[next_event].event == LinkEvent::Down;
      ++next_event;
    }
    result.ticks.push_back(step(live, state, config, samples[sample].demand, failed, t - t0));
  }
  return result;
}

}  // namespace rla
