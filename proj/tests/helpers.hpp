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

#include <random>
#include <string>
#include <vector>

#include "rla/engine.hpp"
#include "rla/link.hpp"

namespace rla::test {

inline Link link(std::string id, double capacity, int priority, double cost = 1.0,
                 double tick = 1.0) {
  Link l;
  l.id = std::move(id);
  l.capacity = capacity;
  l.priority = priority;
  l.cost_per_gb = cost;
  l.threshold = default_threshold(l, tick);
  l.buffer_cap = default_buffer_cap(l.threshold);
  return l;
}

inline AggregationGroup scenario1() {
  return validate_group("s1", {link("L64", 64, 1, 1.0), link("L32", 32, 2, 2.0)});
}

inline AggregationGroup scenario2() {
  return validate_group("s2", {link("P4", 4, 1, 1.0), link("S16", 16, 2, 2.0), link("T16", 16, 3, 3.0)});
}

inline DemandTrace constant_trace(double demand, int ticks) {
  DemandTrace t;
  for (int k = 0; k < ticks; ++k) t.samples.push_back({static_cast<double>(k), demand});
  return t;
}

inline EngineConfig config_for(PolicyId policy) {
  EngineConfig c;
  c.policy = policy;
  return c;
}

inline double sum(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

}  // namespace rla::test
