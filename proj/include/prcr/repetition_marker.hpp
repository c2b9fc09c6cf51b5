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

// The two infinite rule families over a separator alphabet K:
//
//   delta rules   d^(t+n) -> d^t for every non-empty d in K of length <= P,
//   omega rules   w u w' -> w nf(u) w' for markers w, w' that dominate every
//                 marker inside the factor, with t <= |w u w'| <= ceiling.
//
// A marker is a factor of length m that does not start with the separator
// letter and whose smallest period exceeds P. Markers are ranked by the
// length of their trailing separator block (longer block = smaller), then
// lexicographically; markers whose block has length m - 1 are all
// equivalent. nf(u) is either a letter-count normal form (abelian targets)
// or a table of representatives per group element.

#ifndef PRCR_REPETITION_MARKER_HPP_
#define PRCR_REPETITION_MARKER_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "prcr/monoid.hpp"
#include "prcr/rewrite.hpp"
#include "prcr/words.hpp"

namespace prcr {

  // Number of primitive words of length d over k letters.
  BigNat primitive_word_count(std::size_t d, std::size_t k);

  // Words of length m over k letters, not starting with a fixed letter, with
  // smallest period > p. Requires m >= 2p.
  BigNat omega_count_formula(std::size_t k, std::size_t m, std::size_t p);
  BigNat omega_count_enumerated(std::size_t k, std::size_t m, std::size_t p);
  // Enumerates (and cross-checks the formula) when k^m <= 2^24.
  BigNat omega_count(std::size_t k, std::size_t m, std::size_t p);

  // Upper bound on the length of omega rule left sides:
  // 2^count * (t0 + t) - t. Kept exactly while count is small enough to
  // evaluate; beyond that every machine-sized length is below it.
  struct OmegaCeiling {
    BigNat                omega_count;
    std::optional<BigNat> t_omega;
    bool                  relaxed = false;

    static OmegaCeiling make(BigNat omega_count, std::size_t t0, std::size_t t,
                             bool relaxed = false);

    bool        admits(std::size_t length) const;
    std::string describe() const;

    friend bool operator==(OmegaCeiling const&, OmegaCeiling const&) = default;
  };

  struct DeltaOmegaParams {
    // delta exponent step: d^(t+n) -> d^t
    std::size_t n = 0;
    // longest d
    std::size_t period = 0;
    std::size_t t      = 0;
    std::size_t t0     = 0;
    // marker length
    std::size_t marker = 0;
    Letter      separator = 0;

    friend bool operator==(DeltaOmegaParams const&, DeltaOmegaParams const&) = default;
  };

  // Letter-count normal form. Level letters are a_1..a_s followed by the
  // separator's own letter; counts[k] gives their occurrences in the
  // expansion of K-letter k.
  struct AbelianNormalForm {
    std::vector<std::vector<std::size_t>> counts;
    std::vector<std::size_t>              orders;
    // powers[i][e - 1] is the K-letter expanding to a_i^e followed by the
    // separator, for 1 <= e < orders[i].
    std::vector<std::vector<Letter>> powers;

    friend bool operator==(AbelianNormalForm const&, AbelianNormalForm const&) = default;
  };

  // Representative K-words per group element.
  struct GroupNormalForm {
    MonoidPtr            group;
    std::vector<Element> values;
    std::vector<Word>    representatives;

    bool operator==(GroupNormalForm const& other) const;
  };

  using NormalFormSpec = std::variant<AbelianNormalForm, GroupNormalForm>;

  class DeltaOmegaSchema final : public RuleSchema {
   public:
    DeltaOmegaSchema(Alphabet k, DeltaOmegaParams params, OmegaCeiling ceiling,
                     NormalFormSpec normal_form, std::size_t level = 0);

    // Skips the t > 2P check; for mutation experiments.
    static std::shared_ptr<DeltaOmegaSchema> unchecked(Alphabet k, DeltaOmegaParams params,
                                                       OmegaCeiling ceiling,
                                                       NormalFormSpec normal_form,
                                                       std::size_t level = 0);

    DeltaOmegaParams const& params() const noexcept {
      return _params;
    }
    OmegaCeiling const& ceiling() const noexcept {
      return _ceiling;
    }
    NormalFormSpec const& normal_form_spec() const noexcept {
      return _nf;
    }
    std::size_t level() const noexcept {
      return _level;
    }

    void             collect_redexes(WordView w, std::vector<Redex>& out) const override;
    std::string_view kind() const noexcept override {
      return "repetition-marker";
    }
    bool equals(RuleSchema const& other) const override;

    void collect_delta(WordView w, std::vector<Redex>& out) const;
    void collect_omega(WordView w, std::vector<Redex>& out) const;

    bool        is_marker(WordView window) const;
    std::size_t tail(WordView window) const;
    // Three-way preorder comparison of two markers.
    int compare_markers(WordView x, WordView y) const;
    // Start positions of all marker occurrences in w.
    std::vector<std::size_t> marker_positions(WordView w) const;

    // The middle part nf(u) of an omega rule's right side.
    Word normal_form_of(WordView u) const;

   private:
    struct Unchecked {};
    DeltaOmegaSchema(Unchecked, Alphabet k, DeltaOmegaParams params, OmegaCeiling ceiling,
                     NormalFormSpec normal_form, std::size_t level);

    DeltaOmegaParams _params;
    OmegaCeiling     _ceiling;
    NormalFormSpec   _nf;
    std::size_t      _level;
  };

}  // namespace prcr

#endif  // PRCR_REPETITION_MARKER_HPP_
