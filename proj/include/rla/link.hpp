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

// Link control: uplinks, their aggregation parameters, and the validated
// bundle they form.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace rla {

/// One uplink. Rates are Mbit/s, volumes are Mbit.
struct Link {
  std::string id;
  double capacity = 0.0;
  int priority = 1;  ///< 1 = primary, 2 = secondary, ...
  double cost_per_gb = 0.0;
  double threshold = 0.0;   ///< occupancy at/above which the OLB scan moves on
  double buffer_cap = 0.0;  ///< arrivals that would exceed this are dropped
  double buffer = 0.0;

  friend bool operator==(const Link&, const Link&) = default;
};

/// One tick's worth of drainable data.
double default_threshold(const Link& link, double tick);

/// Default hard cap, equal to the threshold: a link never carries backlog
/// past one tick under default parameters.
double default_buffer_cap(double threshold);

/// A named bundle of links, ordered by ascending priority.
class AggregationGroup {
 public:
  const std::string& id() const noexcept { return id_; }
  const std::vector<Link>& links() const noexcept { return links_; }
  std::size_t size() const noexcept { return links_.size(); }
  const Link& operator[](std::size_t i) const { return links_[i]; }

  /// Index of the link with this id, or size() when absent.
  std::size_t find(const std::string& link_id) const;

  // Occupancy is the only mutable part of a validated group.
  void set_buffer(std::size_t i, double mbit) { links_[i].buffer = mbit; }
  void add_to_buffer(std::size_t i, double mbit) { links_[i].buffer += mbit; }
  void clear_buffers();

  friend bool operator==(const AggregationGroup&, const AggregationGroup&) = default;

 private:
  friend AggregationGroup validate_group(std::string group_id, std::vector<Link> links);
  std::string id_;
  std::vector<Link> links_;
};

/// Checks every link parameter and sorts by priority.
/// Throws Error with EmptyGroup, DuplicatePriority or BadParameter.
AggregationGroup validate_group(std::string group_id, std::vector<Link> links);

inline AggregationGroup validate_group(const AggregationGroup& group) {
  return validate_group(group.id(), group.links());
}

}  // namespace rla
