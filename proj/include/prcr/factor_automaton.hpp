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

// Aho-Corasick automaton over a finite set of forbidden factors. Used both to
// find every rule occurrence in a word and to count the words avoiding all
// of them.

#ifndef PRCR_FACTOR_AUTOMATON_HPP_
#define PRCR_FACTOR_AUTOMATON_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "prcr/words.hpp"

namespace prcr {

  class FactorAutomaton {
   public:
    using State = std::uint32_t;

    FactorAutomaton(std::size_t alphabet_size, std::vector<Word> const& patterns);

    std::size_t alphabet_size() const noexcept {
      return _alphabet_size;
    }

    std::size_t state_count() const noexcept {
      return _outputs.size();
    }

    State initial() const noexcept {
      return 0;
    }

    State next(State s, Letter x) const {
      return _delta[s * _alphabet_size + x];
    }

    // Some pattern is a suffix of the input read so far.
    bool forbidden(State s) const {
      return !_outputs[s].empty();
    }

    // Indices of the patterns that are suffixes of the input read so far.
    std::vector<std::uint32_t> const& outputs(State s) const {
      return _outputs[s];
    }

    struct Match {
      std::size_t   end;  // one past the last letter
      std::uint32_t pattern;
    };

    std::vector<Match> matches(WordView w) const;

   private:
    std::size_t                             _alphabet_size;
    std::vector<State>                      _delta;
    std::vector<std::vector<std::uint32_t>> _outputs;
  };

}  // namespace prcr

#endif  // PRCR_FACTOR_AUTOMATON_HPP_
