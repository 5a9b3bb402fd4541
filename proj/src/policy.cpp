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

#include "rla/policy.hpp"

#include <algorithm>
#include <numeric>

#include "rla/error.hpp"

namespace rla {

namespace {

bool is_down(const FailedMask& failed, std::size_t i) { return i < failed.size() && failed[i]; }

[[noreturn]] void all_failed(const AggregationGroup& group) {
  throw Error(ErrorCode::AllLinksFailed, "every link in group '" + group.id() + "' is down");
}

}  // namespace

PolicyId parse_policy(std::string_view name) {
  if (name == "olb") return PolicyId::OLB;
  if (name == "rr") return PolicyId::ROUND_ROBIN;
  if (name == "wfq") return PolicyId::WFQ;
  if (name == "vrrp") return PolicyId::VRRP;
  throw Error(ErrorCode::UnknownPolicy, "unknown policy '" + std::string(name) + "'");
}

std::string_view to_string(PolicyId id) {
  switch (id) {
    case PolicyId::OLB: return "olb";
    case PolicyId::ROUND_ROBIN: return "rr";
    case PolicyId::WFQ: return "wfq";
    case PolicyId::VRRP: return "vrrp";
  }
  return "?";
}

CostDirection parse_cost_direction(std::string_view name) {
  if (name == "inverse") return CostDirection::Inverse;
  if (name == "direct") return CostDirection::Direct;
  throw Error(ErrorCode::BadParameter, "unknown WFQ direction '" + std::string(name) + "'");
}

std::string_view to_string(CostDirection dir) {
  return dir == CostDirection::Inverse ? "inverse" : "direct";
}

FailedMask make_failed_mask(const AggregationGroup& group,
                            const std::set<std::string>& failed_ids) {
  FailedMask mask(group.size(), false);
  for (const auto& id : failed_ids) {
    const auto i = group.find(id);
    if (i == group.size()) throw Error(ErrorCode::BadParameter, "unknown link id '" + id + "'");
    mask[i] = true;
  }
  return mask;
}

PolicyState make_policy_state(const AggregationGroup& group, PolicyId policy,
                              CostDirection direction) {
  PolicyState state;
  if (policy == PolicyId::WFQ) {
    state.wfq_weights = wfq_weights(group, direction);
    state.wfq_deficits.assign(group.size(), 0.0);
  }
  if (policy == PolicyId::VRRP) state.vrrp_master = group[vrrp_preference(group).front()].id;
  return state;
}

std::size_t olb_select(const AggregationGroup& group, const FailedMask& failed) {
  std::size_t last_live = group.size();
  for (std::size_t z = 0; z < group.size(); ++z) {
    if (is_down(failed, z)) continue;
    const Link& link = group[z];
    if (link.buffer < link.threshold) return z;
    last_live = z;
  }
  if (last_live == group.size()) all_failed(group);
  return last_live;
}

std::size_t rr_select(const AggregationGroup& group, PolicyState& state,
                      const FailedMask& failed) {
  const std::size_t n = group.size();
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = (state.rr_cursor + k) % n;
    if (is_down(failed, i)) continue;
    state.rr_cursor = (i + 1) % n;
    return i;
  }
  all_failed(group);
}

std::vector<double> wfq_weights(const AggregationGroup& group, CostDirection direction) {
  std::vector<double> raw;
  raw.reserve(group.size());
  for (const auto& link : group.links()) {
    if (direction == CostDirection::Inverse) {
      if (link.cost_per_gb <= 0.0) {
        throw Error(ErrorCode::ZeroCost,
                    "link '" + link.id + "' has zero cost; inverse-cost weights are undefined");
      }
      raw.push_back(1.0 / link.cost_per_gb);
    } else {
      raw.push_back(link.cost_per_gb);
    }
  }
  const double sum = std::accumulate(raw.begin(), raw.end(), 0.0);
  if (sum <= 0.0) throw Error(ErrorCode::ZeroCost, "all link costs are zero");
  for (auto& w : raw) w /= sum;
  return raw;
}

std::size_t wfq_select(const AggregationGroup& group, PolicyState& state,
                       const std::vector<double>& weights, const FailedMask& failed) {
  const std::size_t n = group.size();
  if (weights.size() != n) throw Error(ErrorCode::BadParameter, "weight vector size mismatch");
  if (state.wfq_deficits.size() != n) state.wfq_deficits.assign(n, 0.0);

  bool any_down = false;
  double live_weight = 0.0;
  std::size_t best = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_down(failed, i)) {
      any_down = true;
      continue;
    }
    live_weight += weights[i];
    state.wfq_deficits[i] += weights[i];
    if (best == n || state.wfq_deficits[i] > state.wfq_deficits[best]) best = i;
  }
  if (best == n) all_failed(group);
  // Debit exactly one quantum's worth of credit so the live deficits keep summing to zero.
  state.wfq_deficits[best] -= any_down ? live_weight : 1.0;
  return best;
}

std::vector<std::size_t> vrrp_preference(const AggregationGroup& group) {
  std::vector<std::size_t> order(group.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (group[a].capacity != group[b].capacity) return group[a].capacity > group[b].capacity;
    return group[a].id < group[b].id;
  });
  return order;
}

std::size_t vrrp_select(const AggregationGroup& group, PolicyState& state,
                        const FailedMask& failed) {
  const std::size_t n = group.size();
  std::size_t best = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_down(failed, i)) continue;
    if (best == n || group[i].capacity > group[best].capacity ||
        (group[i].capacity == group[best].capacity && group[i].id < group[best].id)) {
      best = i;
    }
  }
  if (best == n) all_failed(group);
  if (state.vrrp_master != group[best].id) state.vrrp_master = group[best].id;
  return best;
}

std::size_t select_link(PolicyId policy, const AggregationGroup& group, PolicyState& state,
                        const FailedMask& failed) {
  switch (policy) {
    case PolicyId::OLB: return olb_select(group, failed);
    case PolicyId::ROUND_ROBIN: return rr_select(group, state, failed);
    case PolicyId::WFQ: return wfq_select(group, state, state.wfq_weights, failed);
    case PolicyId::VRRP: return vrrp_select(group, state, failed);
  }
  throw Error(ErrorCode::UnknownPolicy, "unknown policy");
}

}  // namespace rla
