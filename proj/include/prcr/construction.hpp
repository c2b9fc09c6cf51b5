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

// Result of the constructions: the system over the input alphabet plus a
// record of every level that went into it.

#ifndef PRCR_CONSTRUCTION_HPP_
#define PRCR_CONSTRUCTION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "prcr/monoid.hpp"
#include "prcr/repetition_marker.hpp"
#include "prcr/rewrite.hpp"

namespace prcr {

  struct ConstructionOptions {
    bool        alphabet_reduction = true;
    bool        relax_upper_bound  = false;
    // Bound on materialized K alphabets.
    std::size_t prefix_cap = 200'000;
  };

  struct LevelInfo {
    std::size_t                     level = 0;
    // trivial, cyclic, abelian, two-letter, monogenic, peel
    std::string                     kind;
    Alphabet                        alphabet;
    std::size_t                     monoid_size = 0;
    std::optional<std::string>      separator;
    std::vector<Word>               k_prefixes;
    bool                            reduced = false;
    // abelian / two-letter
    std::size_t                     n = 0;
    std::size_t                     s = 0;
    std::optional<DeltaOmegaParams> params;
    std::optional<OmegaCeiling>     ceiling;
    // peel: size of the local divisor at the separator's image
    std::size_t                     local_divisor_size = 0;
    SchemaPtr                       system;
  };

  struct RecursionNode {
    std::size_t                monoid_size;
    std::size_t                alphabet_size;
    // group_base, single_letter_base, peel
    std::string                case_name;
    std::vector<RecursionNode> children;
  };

  struct ConstructionArtifact {
    SchemaPtr                    system;
    std::vector<LevelInfo>       levels;
    std::optional<RecursionNode> recursion;
  };

  // {x -> empty : x in A}, the system for the trivial monoid.
  SchemaPtr trivial_system(Alphabet const& a, std::size_t level);

  // Human-readable per-level parameters.
  std::string format_summary(ConstructionArtifact const& artifact);

}  // namespace prcr

#endif  // PRCR_CONSTRUCTION_HPP_
