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

#include "rla/config_io.hpp"

#include <vector>

#include "rla/csv.hpp"
#include "rla/error.hpp"

namespace rla {

namespace {

bool header_matches(const csv::Row& row, std::string_view expected) {
  std::vector<std::string_view> want;
  std::size_t start = 0;
  while (true) {
    const auto comma = expected.find(',', start);
    want.push_back(expected.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return row.cells == want;
}

double require_number(const csv::Row& row, std::size_t col, const char* name) {
  const auto v = csv::to_double(row.cells[col]);
  if (!v) throw ParseError(row.line, std::string("bad ") + name + " '" + std::string(row.cells[col]) + "'");
  return *v;
}

}  // namespace

AggregationGroup parse_links(std::string_view text, double tick, std::string group_id) {
  const auto rows = csv::read(text);
  if (rows.empty()) throw ParseError(1, "missing header '" + std::string(kLinksHeader) + "'");
  if (!header_matches(rows.front(), kLinksHeader)) {
    throw ParseError(rows.front().line, "expected header '" + std::string(kLinksHeader) + "'");
  }

  std::vector<Link> links;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.cells.size() != 4 && row.cells.size() != 6) {
      throw ParseError(row.line, "expected 6 columns");
    }
    Link link;
    link.id = std::string(row.cells[0]);
    if (link.id.empty()) throw ParseError(row.line, "empty link id");
    link.capacity = require_number(row, 1, "capacity_mbps");
    const auto priority = csv::to_integer(row.cells[2]);
    if (!priority || *priority < 1 || *priority > 1'000'000) {
      throw ParseError(row.line, "priority must be a positive integer");
    }
    link.priority = static_cast<int>(*priority);
    link.cost_per_gb = require_number(row, 3, "cost_per_gb");
    if (!(link.capacity > 0.0)) throw ParseError(row.line, "capacity_mbps must be > 0");

    const bool has_threshold = row.cells.size() == 6 && !row.cells[4].empty();
    const bool has_cap = row.cells.size() == 6 && !row.cells[5].empty();
    link.threshold = has_threshold ? require_number(row, 4, "threshold_mbit")
                                   : default_threshold(link, tick);
    link.buffer_cap = has_cap ? require_number(row, 5, "buffer_cap_mbit")
                              : default_buffer_cap(link.threshold);
    links.push_back(std::move(link));
  }
  return validate_group(std::move(group_id), std::move(links));
}

std::string serialize_links(const AggregationGroup& group, bool explicit_buffers) {
  std::string out(kLinksHeader);
  out += '\n';
  for (const auto& link : group.links()) {
    out += link.id + ',' + csv::format(link.capacity) + ',' + std::to_string(link.priority) + ',' +
           csv::format(link.cost_per_gb) + ',';
    if (explicit_buffers) {
      out += csv::format(link.threshold) + ',' + csv::format(link.buffer_cap);
    } else {
      out += ',';
    }
    out += '\n';
  }
  return out;
}

FailureSchedule parse_failures(std::string_view text, const AggregationGroup* group) {
  const auto rows = csv::read(text);
  if (rows.empty()) throw ParseError(1, "missing header '" + std::string(kFailuresHeader) + "'");
  if (!header_matches(rows.front(), kFailuresHeader)) {
    throw ParseError(rows.front().line, "expected header '" + std::string(kFailuresHeader) + "'");
  }

  FailureSchedule schedule;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.cells.size() != 3) throw ParseError(row.line, "expected 3 columns");
    FailureEvent e;
    e.t = require_number(row, 0, "time_s");
    e.link_id = std::string(row.cells[1]);
    if (e.link_id.empty()) throw ParseError(row.line, "empty link id");
    if (group && group->find(e.link_id) == group->size()) {
      throw ParseError(row.line, "unknown link '" + e.link_id + "'");
    }
    if (row.cells[2] == "up") {
      e.event = LinkEvent::Up;
    } else if (row.cells[2] == "down") {
      e.event = LinkEvent::Down;
    } else {
      throw ParseError(row.line, "event must be 'up' or 'down'");
    }
    if (!schedule.empty() && e.t < schedule.back().t) {
      throw ParseError(row.line, "time decreases");
    }
    schedule.push_back(std::move(e));
  }
  return schedule;
}

}  // namespace rla
