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

#include <doctest.h>

#include <numeric>
#include <random>

#include "prcr/errors.hpp"
#include "prcr/sampling.hpp"
#include "prcr/words.hpp"
#include "support.hpp"

using namespace prcr;
using prcr::test::all_words;
using prcr::test::naive_smallest_period;

namespace {

  // u is a proper power v^k, k >= 2, by trying every divisor length.
  bool naive_is_power(Word const& u) {
    for (std::size_t d = 1; d < u.size(); ++d) {
      if (u.size() % d == 0 && power(WordView(u.data(), d), u.size() / d) == u) {
        return true;
      }
    }
    return false;
  }

  bool naive_subword(Word const& u, Word const& w) {
    // Longest common subsequence equals |u|.
    std::vector<std::vector<std::size_t>> lcs(u.size() + 1,
                                              std::vector<std::size_t>(w.size() + 1, 0));
    for (std::size_t i = 1; i <= u.size(); ++i) {
      for (std::size_t j = 1; j <= w.size(); ++j) {
        lcs[i][j] = u[i - 1] == w[j - 1] ? lcs[i - 1][j - 1] + 1
                                         : std::max(lcs[i - 1][j], lcs[i][j - 1]);
      }
    }
    return lcs[u.size()][w.size()] == u.size();
  }

  // w is a factor of some d^i with 1 <= |d| <= n: try every d literally.
  bool naive_factor_of_power(Word const& w, std::size_t n, std::size_t k) {
    if (w.empty()) {
      return true;
    }
    for (std::size_t len = 1; len <= n; ++len) {
      for (auto const& d : all_words(k, len)) {
        Word big = power(d, w.size() / len + 2);
        if (test::naive_contains(big, w)) {
          return true;
        }
      }
    }
    return false;
  }

}  // namespace

TEST_CASE("alphabet tokens") {
  Alphabet a({"a", "b", "k10"});
  CHECK(a.size() == 3);
  CHECK(a.letter("k10") == 2);
  CHECK_FALSE(a.find("z").has_value());
  CHECK_THROWS_AS(Alphabet({"a", "a"}), Error);
  CHECK_THROWS_AS(Alphabet({"a-b"}), Error);
  CHECK_THROWS_AS(Alphabet({""}), Error);
  CHECK(a.parse_word("a b k10") == Word{0, 1, 2});
  CHECK(a.parse_word("abba") == Word{0, 1, 1, 0});
  CHECK(a.parse_word("") == Word{});
  CHECK_THROWS_AS(a.parse_word("a q"), Error);
  CHECK(a.format(Word{2, 0}) == "k10 a");
  CHECK(Alphabet::numbered("k", 3).names() == std::vector<std::string>{"k0", "k1", "k2"});
}

TEST_CASE("smallest period agrees with the naive scan") {
  CHECK(smallest_period(Alphabet({"a", "b"}).parse_word("abaab")) == 3);
  CHECK(smallest_period(Alphabet({"a", "b"}).parse_word("aaaa")) == 1);
  CHECK(smallest_period(Alphabet({"a", "b"}).parse_word("ab")) == 2);
  CHECK_THROWS_WITH_AS(smallest_period(Word{}), "empty word has no period", Error);
  for (std::size_t len = 1; len <= 12; ++len) {
    for (auto const& w : all_words(2, len)) {
      REQUIRE(smallest_period(w) == naive_smallest_period(w));
    }
  }
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    Word w = random_word(rng, 3, 1 + rng() % 40);
    REQUIRE(smallest_period(w) == naive_smallest_period(w));
  }
}

TEST_CASE("border array") {
  for (std::size_t len = 1; len <= 9; ++len) {
    for (auto const& w : all_words(2, len)) {
      auto b = border_array(w);
      for (std::size_t i = 0; i < w.size(); ++i) {
        std::size_t best = 0;
        for (std::size_t k = 1; k <= i; ++k) {
          if (std::equal(w.begin(), w.begin() + k, w.begin() + (i + 1 - k))) {
            best = k;
          }
        }
        REQUIRE(b[i] == best);
      }
    }
  }
}

TEST_CASE("primitivity") {
  Alphabet a({"a", "b"});
  CHECK(is_primitive(a.parse_word("aab")));
  CHECK_FALSE(is_primitive(a.parse_word("abab")));
  CHECK(is_primitive(a.parse_word("a")));
  CHECK_THROWS_AS(is_primitive(Word{}), Error);
  for (std::size_t len = 1; len <= 12; ++len) {
    for (auto const& w : all_words(2, len)) {
      REQUIRE(is_primitive(w) == !naive_is_power(w));
    }
  }
}

TEST_CASE("factors, prefixes, suffixes and subwords") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 3000; ++i) {
    Word w = random_word(rng, 2, rng() % 14);
    Word u = random_word(rng, 2, rng() % 5);
    auto it    = std::search(w.begin(), w.end(), u.begin(), u.end());
    bool found = u.empty() || it != w.end();
    auto f     = find_factor(u, w);
    REQUIRE(f.has_value() == found);
    if (f) {
      REQUIRE(*f == static_cast<std::size_t>(it - w.begin()));
    }
    REQUIRE(is_prefix(u, w) == (u.size() <= w.size() && std::equal(u.begin(), u.end(), w.begin())));
    REQUIRE(is_suffix(u, w)
            == (u.size() <= w.size() && std::equal(u.begin(), u.end(), w.end() - u.size())));
    REQUIRE(is_subword(u, w) == naive_subword(u, w));
  }
  Word w{0, 1, 0, 1};
  CHECK(find_factor(Word{0, 1}, w, 1) == 2);
  CHECK(find_factor(Word{}, w, 3) == 3);
}

TEST_CASE("Parikh vectors and weights") {
  Alphabet a({"a", "b", "c"});
  CHECK(parikh(a.parse_word("abcab"), 3) == ParikhVector{2, 2, 1});
  CHECK(parikh_strictly_below({1, 0, 1}, {1, 1, 1}));
  CHECK_FALSE(parikh_strictly_below({1, 1, 1}, {1, 1, 1}));
  CHECK_FALSE(parikh_strictly_below({2, 0, 0}, {1, 1, 1}));
  WeightFunction f({1, 2, 5});
  CHECK(f(a.parse_word("abc")) == 8);
  CHECK(f(Word{}) == 0);
  CHECK_THROWS_AS(WeightFunction({1, 0}), Error);
}

TEST_CASE("factors of short powers") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t len = 0; len <= 9; ++len) {
      for (auto const& w : all_words(2, len)) {
        REQUIRE(factors_of_power_membership(w, n) == naive_factor_of_power(w, n, 2));
      }
    }
  }
  CHECK_THROWS_AS(factors_of_power_membership(Word{0}, 0), Error);
}

TEST_CASE("periodicity lemma holds on every short word") {
  for (std::size_t len = 1; len <= 12; ++len) {
    for (auto const& w : all_words(2, len)) {
      for (std::size_t p = 1; p <= len; ++p) {
        for (std::size_t q = 1; q <= len; ++q) {
          REQUIRE(fine_wilf_check(w, p, q));
        }
      }
    }
  }
  // The bound is tight: aba has periods 2 and 3, length 3 < 2 + 3 - 1.
  Word aba{0, 1, 0};
  CHECK(has_period(aba, 2));
  CHECK(has_period(aba, 3));
  CHECK_FALSE(has_period(aba, 1));
  CHECK(fine_wilf_check(aba, 2, 3));
  CHECK_THROWS_AS(fine_wilf_check(aba, 0, 1), Error);
}
