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

// Church-Rosser systems for homomorphisms into finite monoids whose subgroups
// are all abelian. Groups go to the group constructions; otherwise a letter c
// with non-unit image is peeled off, the rest of the alphabet is handled
// recursively, and the system over K = IRR(B*)c is built recursively for
// the induced homomorphism into the local divisor at c's image.

#ifndef PRCR_MONOID_CONSTRUCTION_HPP_
#define PRCR_MONOID_CONSTRUCTION_HPP_

#include <utility>
#include <vector>

#include "prcr/construction.hpp"
#include "prcr/monoid.hpp"

namespace prcr {

  ConstructionArtifact construct_monoid(Alphabet const& a, Homomorphism const& phi,
                                        ConstructionOptions const& options = {});

  // K-letter x c is sent to phi(c x c), as an element of the local divisor
  // at phi(c). `prefixes` are words over phi's alphabet.
  std::pair<LocalDivisor, Homomorphism> psi_homomorphism(Homomorphism const& phi, Letter c,
                                                         std::vector<Word> const& prefixes);

}  // namespace prcr

#endif  // PRCR_MONOID_CONSTRUCTION_HPP_
