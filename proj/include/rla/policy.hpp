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

// Data forwarding: per-quantum egress selection.
//
// Every selector is a pure function of the group snapshot, its own state and
// the set of links that are down. Failed links are never returned.
#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rla/link.hpp"

namespace rla {

enum class PolicyId { OLB, ROUND_ROBIN, WFQ, VRRP };

/// Accepts the CLI names `olb`, `rr`, `wfq`, `vrrp`. Throws UnknownPolicy.
PolicyId parse_policy(std::string_view name);
std::string_view to_string(PolicyId id);

enum class CostDirection { Inverse, Direct };

CostDirection parse_cost_direction(std::string_view name);
std::string_view to_string(CostDirection dir);

/// `failed[i]` is true when link i is down. An empty mask means all up.
using FailedMask = std::vector<bool>;

FailedMask make_failed_mask(const AggregationGroup& group, const std::set<std::string>& failed_ids);

struct PolicyState {
  std::size_t rr_cursor = 0;
  std::vector<double> wfq_weights;
  std::vector<double> wfq_deficits;
  std::string vrrp_master;
};

/// Fresh state for `policy`. WFQ weights are computed here, so this throws
/// ZeroCost for a WFQ group that cannot be weighted.
PolicyState make_policy_state(const AggregationGroup& group, PolicyId policy,
                              CostDirection direction = CostDirection::Inverse);

/// Odd Load Balancing: scan links in priority order and take the first one
/// whose buffer is still below its threshold. When every live link is at or
/// above threshold the scan falls through to the last live link; the engine
/// then drops whatever would exceed that link's cap.
std::size_t olb_select(const AggregationGroup& group, const FailedMask& failed = {});

std::size_t rr_select(const AggregationGroup& group, PolicyState& state,
                      const FailedMask& failed = {});

/// Normalized per-link weights, proportional to 1/cost (Inverse) or cost
/// (Direct). Throws ZeroCost when a weight would be undefined.
std::vector<double> wfq_weights(const AggregationGroup& group,
                                CostDirection direction = CostDirection::Inverse);

/// Largest-deficit scheduling: credit every live link with its weight, pick
/// the largest deficit (ties to the higher-priority link), debit the winner.
std::size_t wfq_select(const AggregationGroup& group, PolicyState& state,
                       const std::vector<double>& weights, const FailedMask& failed = {});

/// Preference order of the redundancy baseline: capacity descending, then id.
std::vector<std::size_t> vrrp_preference(const AggregationGroup& group);

/// The live link that currently carries everything. Throws AllLinksFailed.
std::size_t vrrp_select(const AggregationGroup& group, PolicyState& state,
                        const FailedMask& failed = {});

/// Dispatch on `policy`; uses `state.wfq_weights` for WFQ.
std::size_t select_link(PolicyId policy, const AggregationGroup& group, PolicyState& state,
                        const FailedMask& failed = {});

}  // namespace rla
