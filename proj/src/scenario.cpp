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

#include "rla/scenario.hpp"

#include "rla/error.hpp"

namespace rla {

namespace {

constexpr double kHour = 3600.0;

Link make_link(std::string id, double capacity, int priority, double cost) {
  Link link;
  link.id = std::move(id);
  link.capacity = capacity;
  link.priority = priority;
  link.cost_per_gb = cost;
  link.threshold = default_threshold(link, 1.0);
  link.buffer_cap = default_buffer_cap(link.threshold);
  return link;
}

}  // namespace

Scenario make_scenario(int number, int samples_per_hour) {
  Scenario s;
  s.number = number;
  switch (number) {
    case 1:
      s.group = validate_group("scenario1", {make_link("L64", 64, 1, 1.0), make_link("L32", 32, 2, 2.0)});
      s.trace = synth_diurnal(10 * kHour, 16 * kHour, 20.0, 120.0, samples_per_hour);
      break;
    case 2:
      // The 4 Mbit/s link is primary because it is the cheapest.
      s.group = validate_group("scenario2", {make_link("P4", 4, 1, 1.0), make_link("S16", 16, 2, 2.0),
                                             make_link("T16", 16, 3, 3.0)});
      s.trace = synth_diurnal(10.5 * kHour, 16 * kHour, 2.0, 30.0, samples_per_hour);
      break;
    default:
      throw Error(ErrorCode::BadParameter, "unknown scenario " + std::to_string(number) + " (expected 1 or 2)");
  }
  return s;
}

}  // namespace rla
