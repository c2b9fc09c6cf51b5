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

// Brute-force oracles written independently of the library algorithms.

#ifndef PRCR_TESTS_SUPPORT_HPP_
#define PRCR_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "prcr/rewrite.hpp"
#include "prcr/sampling.hpp"

namespace prcr::test {

  // Every word over k letters of length exactly len, in lexicographic order.
  inline std::vector<Word> all_words(std::size_t k, std::size_t len) {
    std::vector<Word> out{Word{}};
    for (std::size_t i = 0; i < len; ++i) {
      std::vector<Word> next;
      for (auto const& w : out) {
        for (Letter x = 0; x < k; ++x) {
          Word v = w;
          v.push_back(x);
          next.push_back(std::move(v));
        }
      }
      out = std::move(next);
    }
    return out;
  }

  inline std::size_t naive_smallest_period(Word const& w) {
    for (std::size_t p = 1; p < w.size(); ++p) {
      bool ok = true;
      for (std::size_t i = 0; i + p < w.size(); ++i) {
        ok = ok && w[i] == w[i + p];
      }
      if (ok) {
        return p;
      }
    }
    return w.size();
  }

  inline bool naive_contains(Word const& w, Word const& u) {
    return std::search(w.begin(), w.end(), u.begin(), u.end()) != w.end();
  }

  // One-step successors of w under explicit rules, by direct substring
  // search.
  inline std::vector<Word> naive_successors(std::vector<Rule> const& rules, Word const& w) {
    std::vector<Word> out;
    for (auto const& r : rules) {
      for (std::size_t i = 0; i + r.lhs.size() <= w.size(); ++i) {
        if (std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + i)) {
          Word v(w.begin(), w.begin() + i);
          v.insert(v.end(), r.rhs.begin(), r.rhs.end());
          v.insert(v.end(), w.begin() + i + r.lhs.size(), w.end());
          out.push_back(std::move(v));
        }
      }
    }
    return out;
  }

  inline bool naive_irreducible(std::vector<Rule> const& rules, Word const& w) {
    return std::none_of(rules.begin(), rules.end(),
                        [&](Rule const& r) { return naive_contains(w, r.lhs); });
  }

  // Irreducible words of length <= max_len, by filtering all words.
  inline std::size_t naive_irreducible_count(std::vector<Rule> const& rules, std::size_t k,
                                             std::size_t max_len) {
    std::size_t count = 0;
    for (std::size_t len = 0; len <= max_len; ++len) {
      for (auto const& w : all_words(k, len)) {
        count += naive_irreducible(rules, w) ? 1 : 0;
      }
    }
    return count;
  }

  // Every irreducible descendant of w, exploring all rewrite choices.
  inline std::set<Word> naive_all_normal_forms(std::vector<Rule> const& rules, Word const& w) {
    std::set<Word>    seen{w};
    std::vector<Word> stack{w};
    std::set<Word>    nfs;
    while (!stack.empty()) {
      Word v = std::move(stack.back());
      stack.pop_back();
      auto next = naive_successors(rules, v);
      if (next.empty()) {
        nfs.insert(v);
      }
      for (auto& x : next) {
        if (seen.insert(x).second) {
          stack.push_back(std::move(x));
        }
      }
    }
    return nfs;
  }

  // Church-Rosser on every word up to max_len: each has one normal form.
  inline bool naive_church_rosser(std::vector<Rule> const& rules, std::size_t k,
                                  std::size_t max_len) {
    for (std::size_t len = 0; len <= max_len; ++len) {
      for (auto const& w : all_words(k, len)) {
        if (naive_all_normal_forms(rules, w).size() != 1) {
          return false;
        }
      }
    }
    return true;
  }

  // Rule applications per family during the normalization of w.
  inline std::map<RuleFamily, std::size_t> family_histogram(RuleSchema const& s, WordView w,
                                                            Strategy const& strategy = {}) {
    std::map<RuleFamily, std::size_t> h;
    NormalFormOptions                 o;
    o.observer = [&](StepInfo const& info) { ++h[info.redex.family]; };
    normal_form(s, w, strategy, o);
    return h;
  }

}  // namespace prcr::test

#endif  // PRCR_TESTS_SUPPORT_HPP_
