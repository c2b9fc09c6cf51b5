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

#include "prcr/factor_automaton.hpp"

#include <deque>

#include "prcr/errors.hpp"

namespace prcr {

  FactorAutomaton::FactorAutomaton(std::size_t alphabet_size, std::vector<Word> const& patterns)
      : _alphabet_size(alphabet_size) {
    constexpr State none = UINT32_MAX;
    // Trie first, with `none` marking missing edges.
    _delta.assign(_alphabet_size, none);
    _outputs.emplace_back();
    for (std::uint32_t i = 0; i < patterns.size(); ++i) {
      State s = 0;
      for (Letter x : patterns[i]) {
        if (x >= _alphabet_size) {
          throw Error("pattern letter outside the alphabet");
        }
        State& t = _delta[s * _alphabet_size + x];
        if (t == none) {
          t = static_cast<State>(_outputs.size());
          _outputs.emplace_back();
          _delta.resize(_delta.size() + _alphabet_size, none);
        }
        s = _delta[s * _alphabet_size + x];
      }
      _outputs[s].push_back(i);
    }
    // Breadth-first completion into a DFA; fail links are folded into the
    // transition table and outputs are merged along them.
    std::vector<State> fail(_outputs.size(), 0);
    std::deque<State>  queue;
    for (std::size_t x = 0; x < _alphabet_size; ++x) {
      State& t = _delta[x];
      if (t == none) {
        t = 0;
      } else {
        queue.push_back(t);
      }
    }
    while (!queue.empty()) {
      State s = queue.front();
      queue.pop_front();
      auto const& inherited = _outputs[fail[s]];
      _outputs[s].insert(_outputs[s].end(), inherited.begin(), inherited.end());
      for (std::size_t x = 0; x < _alphabet_size; ++x) {
        State& t = _delta[s * _alphabet_size + x];
        if (t == none) {
          t = _delta[fail[s] * _alphabet_size + x];
        } else {
          fail[t] = _delta[fail[s] * _alphabet_size + x];
          queue.push_back(t);
        }
      }
    }
  }

  std::vector<FactorAutomaton::Match> FactorAutomaton::matches(WordView w) const {
    std::vector<Match> result;
    State              s = initial();
    for (std::size_t i = 0; i < w.size(); ++i) {
      s = next(s, w[i]);
      for (std::uint32_t p : _outputs[s]) {
        result.push_back({i + 1, p});
      }
    }
    return result;
  }

}  // namespace prcr
