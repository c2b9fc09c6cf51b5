// Copyright 2026 The prcr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The .sts text format. Explicit systems are an `alphabet` line plus `rule`
// lines; schemas start with `schema <kind>`, list their parameters one per
// line and nest their sub-systems in `begin <name>` / `end <name>` blocks.
// Schemas are stored by parameters and rebuilt on parsing, never expanded.

#ifndef PRCR_STS_FORMAT_HPP_
#define PRCR_STS_FORMAT_HPP_

#include <iosfwd>
#include <string>
#include <string_view>

#include "prcr/rewrite.hpp"

namespace prcr {

  std::string format_system(RuleSchema const& sys);

  SchemaPtr parse_system(std::string_view text);
  SchemaPtr parse_system(std::istream& in);
  SchemaPtr read_system_file(std::string const& path);
  void      write_system_file(std::string const& path, RuleSchema const& sys);

}  // namespace prcr

#endif  // PRCR_STS_FORMAT_HPP_
