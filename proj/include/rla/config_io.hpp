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

// Link and failure-schedule files.
//
//   links:    id,capacity_mbps,priority,cost_per_gb,threshold_mbit,buffer_cap_mbit
//   failures: time_s,link_id,event        (event is `up` or `down`)
//
// Empty threshold/buffer_cap cells take the defaults for the given tick.
#pragma once

#include <string>
#include <string_view>

#include "rla/engine.hpp"
#include "rla/link.hpp"

namespace rla {

inline constexpr std::string_view kLinksHeader =
    "id,capacity_mbps,priority,cost_per_gb,threshold_mbit,buffer_cap_mbit";
inline constexpr std::string_view kFailuresHeader = "time_s,link_id,event";

AggregationGroup parse_links(std::string_view text, double tick = 1.0,
                             std::string group_id = "group");
/// With `explicit_buffers` false the threshold and cap cells are left empty so
/// the reader applies its defaults for whatever tick it runs with.
std::string serialize_links(const AggregationGroup& group, bool explicit_buffers = true);

/// Times must be nondecreasing. Link ids are checked against `group` when
/// given.
FailureSchedule parse_failures(std::string_view text, const AggregationGroup* group = nullptr);

}  // namespace rla
