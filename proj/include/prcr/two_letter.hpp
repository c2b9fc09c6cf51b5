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

// Church-Rosser systems for homomorphisms from a two-letter alphabet {a, b}
// into an arbitrary finite group. R = {a^n -> 1} with n the exponent of the
// group, K = {a^i b : i < n}, repetitions of K-words of length <= n^2 are
// collapsed and marker-bounded factors are replaced by fixed
// representatives v_g.

#ifndef PRCR_TWO_LETTER_HPP_
#define PRCR_TWO_LETTER_HPP_

#include <cstddef>
#include <vector>

#include "prcr/construction.hpp"
#include "prcr/monoid.hpp"

namespace prcr {

  // t = n^2 (3n + 7)
  std::size_t two_letter_t(std::size_t n);
  // t0 = (t + n^2 + 3)(n^2 + 1)
  std::size_t two_letter_t0(std::size_t n, std::size_t t);

  // Slot options are numbered 0..2n-1: option o < n is b^(o+1), option
  // o >= n is a b^(o-n+1).
  struct NormalFormTable {
    std::size_t                           n;
    // Indexed by elements of the image group (see `group`).
    MonoidPtr                             group;
    std::vector<Element>                  embedding;
    std::vector<std::vector<std::size_t>> slots;
    // v_g over {a, b} (letters 0 and 1) and over K = {a^i b}.
    std::vector<Word>                     a_words;
    std::vector<Word>                     k_words;
    std::vector<std::size_t>              a_counts;
  };

  // Shortest-a, then lexicographically least, slot sequence per element of
  // phi({a,b}*).
  NormalFormTable normal_form_table(Homomorphism const& phi);

  Word slot_word(std::size_t n, std::vector<std::size_t> const& slots);
  // Decomposes a word over {a, b} ending in b (or empty) into K-letters a^i b.
  Word to_k_word(WordView ab_word);

  ConstructionArtifact construct_two_letter(Alphabet const& a, Homomorphism const& phi,
                                            ConstructionOptions const& options = {});

  namespace detail {
    SchemaPtr build_two_letter(Alphabet const& a, Homomorphism const& phi,
                               ConstructionOptions const& options, ConstructionArtifact& artifact);
  }  // namespace detail

}  // namespace prcr

#endif  // PRCR_TWO_LETTER_HPP_
