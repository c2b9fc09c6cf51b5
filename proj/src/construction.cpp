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

#include "prcr/construction.hpp"

#include <sstream>

namespace prcr {

  SchemaPtr trivial_system(Alphabet const& a, std::size_t level) {
    std::vector<Rule> rules;
    for (Letter x = 0; x < a.size(); ++x) {
      rules.push_back({Word{x}, Word{}});
    }
    return std::make_shared<RewriteSystem>(a, std::move(rules), level);
  }

  std::string format_summary(ConstructionArtifact const& artifact) {
    std::ostringstream out;
    for (auto const& l : artifact.levels) {
      out << "level " << l.level << ": " << l.kind << " over {";
      for (std::size_t i = 0; i < l.alphabet.size(); ++i) {
        out << (i == 0 ? "" : ", ") << l.alphabet.name(static_cast<Letter>(i));
      }
      out << "}, |M| = " << l.monoid_size;
      if (l.separator) {
        out << ", c = " << *l.separator << ", |K| = " << l.k_prefixes.size()
            << (l.reduced ? " (reduced)" : "");
      }
      if (l.params) {
        out << ", n = " << l.n << ", s = " << l.s << ", t = " << l.params->t
            << ", t0 = " << l.params->t0 << ", marker = " << l.params->marker;
      }
      if (l.ceiling) {
        out << ", |Omega| = " << l.ceiling->omega_count << ", t_Omega = " << l.ceiling->describe();
      }
      if (l.kind == "peel") {
        out << ", |M_c| = " << l.local_divisor_size;
      }
      out << '\n';
    }
    return out.str();
  }

}  // namespace prcr
