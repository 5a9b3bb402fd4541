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

// Discrete-time engine.
//
// Each tick: demand * tick Mbit arrive as quanta of `quantum` Mbit (the last
// one possibly smaller). Quanta are placed one at a time by the active
// policy against live buffer state, so overflow cascades down the priority
// list within a tick. A quantum that would push its link past buffer_cap is
// dropped whole. After placement every live link drains up to
// capacity * tick.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rla/link.hpp"
#include "rla/policy.hpp"
#include "rla/trace.hpp"

namespace rla {

struct EngineConfig {
  double tick = 1.0;     ///< seconds
  double quantum = 1.0;  ///< Mbit per placement
  PolicyId policy = PolicyId::OLB;
  CostDirection wfq_direction = CostDirection::Inverse;
  std::size_t warmup_ticks = 1;
};

/// Throws BadParameter unless tick > 0, quantum > 0 and quantum does not
/// exceed the smallest threshold in `group`.
void validate_config(const EngineConfig& config, const AggregationGroup& group);

struct TickRecord {
  double t = 0.0;
  double demand = 0.0;  ///< Mbit/s
  std::vector<double> assigned;
  std::vector<double> transmitted;
  std::vector<double> buffer_end;
  double dropped = 0.0;
  double supplied_mbps = 0.0;
  /// Consecutive enqueued quanta that went to different links.
  std::size_t link_switches = 0;

  friend bool operator==(const TickRecord&, const TickRecord&) = default;
};

struct SimulationResult {
  EngineConfig config;
  AggregationGroup group;  ///< as configured, buffers at their initial zero
  std::vector<TickRecord> ticks;
};

enum class LinkEvent { Up, Down };

struct FailureEvent {
  double t = 0.0;
  std::string link_id;
  LinkEvent event = LinkEvent::Down;
};

/// Events ordered by time; applied at the first tick whose start is >= t.
using FailureSchedule = std::vector<FailureEvent>;

/// Advance one tick. Mutates the group's buffers and the policy state.
TickRecord step(AggregationGroup& group, PolicyState& state, const EngineConfig& config,
                double demand_mbps, const FailedMask& failed = {}, double t = 0.0);

/// Run a whole trace from empty buffers and fresh policy state. Ticks start
/// at the first sample and continue until the last sample has been held for
/// one sample interval; demand is held from the latest sample at or before
/// each tick start.
SimulationResult run(const AggregationGroup& group, const EngineConfig& config,
                     const DemandTrace& trace, const FailureSchedule& failures = {});

}  // namespace rla
