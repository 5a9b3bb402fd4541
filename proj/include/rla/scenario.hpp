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

// The two bundled evaluation setups.
//
//   1: 64 Mbit/s primary + 32 Mbit/s backup; peak 10:00-16:00 reaching 120.
//   2: 4 Mbit/s primary (cheapest) + two 16 Mbit/s links; peak 10:30-16:00
//      reaching 30.
#pragma once

#include "rla/link.hpp"
#include "rla/trace.hpp"

namespace rla {

struct Scenario {
  int number = 0;
  AggregationGroup group;
  DemandTrace trace;
};

/// Throws BadParameter for anything other than 1 or 2.
/// `samples_per_hour` sets the trace resolution (60: one sample a minute).
Scenario make_scenario(int number, int samples_per_hour = 60);

}  // namespace rla
