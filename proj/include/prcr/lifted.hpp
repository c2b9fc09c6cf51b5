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

// Composition of a system R over B = A \ {c} with a system T over the
// separator alphabet K = { x c : x an R-irreducible word over B }. On a word
// over A, R acts inside the c-free blocks and T acts on maximal runs of
// blocks that are valid K-letters, every T rule l -> r being applied as
// c l -> c r.
//
// With alphabet reduction the K-letters are restricted to |x| <= limit and
// each block c x c with x R-irreducible and longer than the limit is
// rewritten to c x' c, where x' drops a factor of x whose image under the
// homomorphism is the identity.

#ifndef PRCR_LIFTED_HPP_
#define PRCR_LIFTED_HPP_

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "prcr/monoid.hpp"
#include "prcr/rewrite.hpp"
#include "prcr/words.hpp"

namespace prcr {

  struct AlphabetReduction {
    std::size_t  limit;
    // Over the full alphabet A.
    Homomorphism hom;
  };

  // Shortening used by alphabet reduction: the least (i, j), i < j, with
  // equal prefix images such that i + (|x| - j) <= limit, else the least
  // (i, j) with equal prefix images; returns x with x[i, j) removed.
  Word shorten_prefix(Homomorphism const& hom, WordView x, std::size_t limit);

  class LiftedSchema final : public RuleSchema {
   public:
    // `prefixes` are the K-letters without their trailing c, as words over A
    // (so they avoid c), in the order of the K alphabet.
    LiftedSchema(Alphabet a, Letter separator, SchemaPtr base, std::vector<Word> prefixes,
                 std::optional<AlphabetReduction> reduction, SchemaPtr inner,
                 std::size_t level = 0);

    Letter separator() const noexcept {
      return _separator;
    }
    SchemaPtr const& base() const noexcept {
      return _base;
    }
    SchemaPtr const& inner() const noexcept {
      return _inner;
    }
    std::vector<Word> const& prefixes() const noexcept {
      return _prefixes;
    }
    std::optional<AlphabetReduction> const& reduction() const noexcept {
      return _reduction;
    }
    std::size_t level() const noexcept {
      return _level;
    }
    // Letters of A other than c, in order; position = letter of B.
    std::vector<Letter> const& b_letters() const noexcept {
      return _b_letters;
    }

    Alphabet const& k_alphabet() const noexcept {
      return _inner->alphabet();
    }

    std::optional<Letter> k_letter(WordView prefix) const;
    // Expansion of a K-word into A.
    Word expand(WordView kword) const;
    Word expand_letter(Letter k) const;
    Word to_base(WordView a_word) const;
    Word from_base(WordView b_word) const;

    void             collect_redexes(WordView w, std::vector<Redex>& out) const override;
    std::string_view kind() const noexcept override {
      return "lifted";
    }
    bool equals(RuleSchema const& other) const override;

   private:
    Letter                                           _separator;
    SchemaPtr                                        _base;
    std::vector<Word>                                _prefixes;
    std::optional<AlphabetReduction>                 _reduction;
    SchemaPtr                                        _inner;
    std::size_t                                      _level;
    std::vector<Letter>                              _b_letters;
    std::vector<Letter>                              _a_to_b;
    std::unordered_map<Word, Letter, WordHash>       _k_index;
  };

  // Alphabet B = A without c, as an Alphabet with the same tokens.
  Alphabet remove_letter(Alphabet const& a, Letter c);

  // R-irreducible words over B (as words over A), shortlex ordered. With
  // `limit` only words of length <= limit; otherwise the full finite set,
  // throwing Error when it has more than `cap` elements or words longer
  // than `max_len`.
  std::vector<Word> materialize_prefixes(RuleSchema const& base,
                                         std::vector<Letter> const& b_letters,
                                         std::optional<std::size_t> limit,
                                         std::size_t cap = 200'000, std::size_t max_len = 64);

}  // namespace prcr

#endif  // PRCR_LIFTED_HPP_
