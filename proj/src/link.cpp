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

#include "rla/link.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "rla/error.hpp"

namespace rla {

namespace {

void require(bool ok, const Link& link, const char* what) {
  if (!ok) throw Error(ErrorCode::BadParameter, "link '" + link.id + "': " + what);
}

void check_link(const Link& link) {
  require(!link.id.empty(), link, "empty id");
  require(std::isfinite(link.capacity) && link.capacity > 0.0, link, "capacity must be > 0");
  require(link.priority > 0, link, "priority must be a positive integer");
  require(std::isfinite(link.cost_per_gb) && link.cost_per_gb >= 0.0, link,
          "cost_per_gb must be >= 0");
  require(std::isfinite(link.threshold) && link.threshold > 0.0, link, "threshold must be > 0");
  require(std::isfinite(link.buffer_cap) && link.buffer_cap >= link.threshold, link,
          "buffer_cap must be >= threshold");
  require(link.buffer >= 0.0 && link.buffer <= link.buffer_cap, link,
          "buffer must lie in [0, buffer_cap]");
}

}  // namespace

double default_threshold(const Link& link, double tick) {
  if (!(tick > 0.0)) throw Error(ErrorCode::BadParameter, "tick must be > 0");
  return link.capacity * tick;
}

double default_buffer_cap(double threshold) { return threshold; }

std::size_t AggregationGroup::find(const std::string& link_id) const {
  const auto it = std::find_if(links_.begin(), links_.end(),
                               [&](const Link& l) { return l.id == link_id; });
  return static_cast<std::size_t>(it - links_.begin());
}

void AggregationGroup::clear_buffers() {
  for (auto& link : links_) link.buffer = 0.0;
}

AggregationGroup validate_group(std::string group_id, std::vector<Link> links) {
  if (links.empty()) throw Error(ErrorCode::EmptyGroup, "group '" + group_id + "' has no links");
  for (const auto& link : links) check_link(link);

  std::set<std::string> ids;
  for (const auto& link : links) {
    if (!ids.insert(link.id).second) {
      throw Error(ErrorCode::BadParameter, "duplicate link id '" + link.id + "'");
    }
  }

  std::stable_sort(links.begin(), links.end(),
                   [](const Link& a, const Link& b) { return a.priority < b.priority; });
  for (std::size_t i = 1; i < links.size(); ++i) {
    if (links[i].priority == links[i - 1].priority) {
      throw Error(ErrorCode::DuplicatePriority,
                  "links '" + links[i - 1].id + "' and '" + links[i].id + "' share priority " +
                      std::to_string(links[i].priority));
    }
  }

  AggregationGroup group;
  group.id_ = std::move(group_id);
  group.links_ = std::move(links);
  return group;
}

}  // namespace rla
