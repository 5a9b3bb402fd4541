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

#include "rla/error.hpp"

namespace rla {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyGroup: return "EmptyGroup";
    case ErrorCode::DuplicatePriority: return "DuplicatePriority";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::ZeroCost: return "ZeroCost";
    case ErrorCode::AllLinksFailed: return "AllLinksFailed";
    case ErrorCode::EmptyTrace: return "EmptyTrace";
    case ErrorCode::BadWindow: return "BadWindow";
    case ErrorCode::UnknownPolicy: return "UnknownPolicy";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace rla
