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

// Word generators for sampled checks on schemas. Uniform words rarely reach
// the repetition and marker rules, so the schema sampler mixes them with
// long repetitions of short words and marker-bounded factors at every level.

#ifndef PRCR_SAMPLING_HPP_
#define PRCR_SAMPLING_HPP_

#include <cstddef>
#include <random>
#include <utility>

#include "prcr/lifted.hpp"
#include "prcr/repetition_marker.hpp"
#include "prcr/rewrite.hpp"

namespace prcr {

  Word random_word(std::mt19937_64& rng, std::size_t alphabet_size, std::size_t len);

  // A factor w u w' of K-length 2m + u_len whose end markers are maximal
  // within it (w' = w).
  Word omega_instance(DeltaOmegaSchema const& s, std::mt19937_64& rng, std::size_t u_len);

  // Words of length <= max_len.
  WordSampler schema_sampler(SchemaPtr s, std::size_t max_len);

  // Outermost lifted level whose inner system is a repetition-marker schema,
  // or a pair of nulls.
  std::pair<LiftedSchema const*, DeltaOmegaSchema const*> delta_omega_level(RuleSchema const& s);

}  // namespace prcr

#endif  // PRCR_SAMPLING_HPP_
