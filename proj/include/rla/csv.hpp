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

// Minimal CSV helpers. Comma separated, '.' decimal point, no quoting, no
// locale. Lines starting with '#' and blank lines are skipped by readers.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rla::csv {

struct Row {
  std::size_t line = 0;  ///< 1-based
  std::vector<std::string_view> cells;
};

/// Splits `text` into rows; the first row returned is the header.
std::vector<Row> read(std::string_view text);

std::string_view trim(std::string_view s);

/// Strict decimal parse of the whole cell; nullopt on anything else.
std::optional<double> to_double(std::string_view cell);
std::optional<long long> to_integer(std::string_view cell);

/// Shortest representation that parses back to the same double.
std::string format(double value);

}  // namespace rla::csv
