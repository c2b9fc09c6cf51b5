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

#include <random>
#include <set>

#include "prcr/errors.hpp"
#include "prcr/factor_automaton.hpp"
#include "prcr/oracle.hpp"
#include "prcr/rewrite.hpp"
#include "prcr/sampling.hpp"
#include "support.hpp"

using namespace prcr;
using namespace prcr::test;

namespace {

  std::vector<Strategy> const all_strategies{
      {StrategyKind::leftmost_shortest, 0},
      {StrategyKind::leftmost_longest, 0},
      {StrategyKind::rightmost, 0},
      {StrategyKind::random, 17},
  };

  // A few length-reducing rules over k letters with distinct rules.
  std::vector<Rule> random_rules(std::mt19937_64& rng, std::size_t k) {
    std::vector<Rule> rules;
    std::size_t       count = 1 + rng() % 4;
    while (rules.size() < count) {
      Word lhs = random_word(rng, k, 1 + rng() % 3);
      Word rhs = random_word(rng, k, rng() % lhs.size());
      Rule r{lhs, rhs};
      if (std::find(rules.begin(), rules.end(), r) == rules.end()) {
        rules.push_back(r);
      }
    }
    return rules;
  }

}  // namespace

TEST_CASE("factor automaton finds every occurrence") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    std::vector<Word> pats;
    for (std::size_t j = 0, n = 1 + rng() % 5; j < n; ++j) {
      pats.push_back(random_word(rng, 3, 1 + rng() % 4));
    }
    FactorAutomaton a(3, pats);
    Word            w = random_word(rng, 3, rng() % 30);
    std::set<std::pair<std::size_t, std::uint32_t>> got;
    for (auto m : a.matches(w)) {
      got.emplace(m.end, m.pattern);
    }
    std::set<std::pair<std::size_t, std::uint32_t>> expect;
    for (std::uint32_t p = 0; p < pats.size(); ++p) {
      for (std::size_t e = pats[p].size(); e <= w.size(); ++e) {
        if (std::equal(pats[p].begin(), pats[p].end(), w.begin() + (e - pats[p].size()))) {
          expect.emplace(e, p);
        }
      }
    }
    REQUIRE(got == expect);
  }
}

TEST_CASE("systems reject malformed rules") {
  Alphabet a({"a", "b"});
  CHECK_THROWS_AS(RewriteSystem(a, {{Word{}, Word{0}}}), Error);
  CHECK_THROWS_AS(RewriteSystem(a, {{Word{0}, Word{0}}}), Error);
  CHECK_THROWS_AS(RewriteSystem(a, {{Word{2}, Word{}}}), Error);
  CHECK_THROWS_AS(RewriteSystem(a, {{Word{0, 1}, Word{0}}, {Word{0, 1}, Word{0}}}), Error);
  auto s = make_system(a, {{"ab", "a"}, {"bb", ""}});
  CHECK(s.size() == 2);
  CHECK(s.rules()[1].rhs.empty());
}

TEST_CASE("normal forms and strategies") {
  Alphabet a({"a", "b"});
  auto     s = make_system(a, {{"ab", "b"}, {"bb", "a"}});
  // abb: leftmost-shortest rewrites ab first (rule order tie-break).
  CHECK(rewrite_step(s, a.parse_word("abb")) == a.parse_word("bb"));
  CHECK(rewrite_step(s, a.parse_word("abb"), {StrategyKind::rightmost}) == a.parse_word("aa"));
  CHECK_FALSE(rewrite_step(s, a.parse_word("ba")).has_value());
  CHECK(normal_form(s, a.parse_word("abb")) == a.parse_word("a"));
  CHECK(Strategy::parse("leftmost-longest").kind == StrategyKind::leftmost_longest);
  CHECK(Strategy::parse("random", 3).seed == 3);
  CHECK_THROWS_AS(Strategy::parse("middle"), Error);

  // a -> aa never terminates.
  auto              grow = make_system(a, {{"a", "aa"}});
  NormalFormOptions o;
  o.budget = 10;
  CHECK_THROWS_WITH_AS(normal_form(grow, a.parse_word("a"), {}, o),
                       "budget exhausted after 10 steps", BudgetExhausted);
  auto swap = make_system(a, {{"ab", "ba"}});
  o.verify_parikh = true;
  o.budget        = 100;
  CHECK_THROWS_AS(normal_form(swap, a.parse_word("ab"), {}, o), InternalError);
}

TEST_CASE("every strategy returns a normal form the exhaustive search reaches") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    auto          rules = random_rules(rng, 2);
    RewriteSystem s(Alphabet({"a", "b"}), rules);
    Word          w   = random_word(rng, 2, rng() % 9);
    auto          nfs = naive_all_normal_forms(rules, w);
    for (auto const& st : all_strategies) {
      REQUIRE(nfs.count(normal_form(s, w, st)) == 1);
    }
  }
}

TEST_CASE("critical pairs") {
  Alphabet a({"a", "b"});
  auto     bad = make_system(a, {{"ab", "a"}, {"ab", "b"}});
  auto     rep = is_locally_confluent(bad);
  CHECK_FALSE(rep.confluent);
  REQUIRE(rep.counterexample.has_value());
  std::set<Word> sides{rep.left_normal_form, rep.right_normal_form};
  CHECK(sides == std::set<Word>{a.parse_word("a"), a.parse_word("b")});

  auto aa = make_system(Alphabet({"a"}), {{"aa", "a"}});
  CHECK(is_locally_confluent(aa).confluent);
  // The single overlap of aa with itself is at offset 1: witness aaa.
  auto pairs = critical_pairs(aa);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].witness == Word{0, 0, 0});
  CHECK(pairs[0].source == PairSource::overlap);
}

TEST_CASE("local confluence agrees with exhaustive unique normal forms") {
  std::mt19937_64 rng(10);
  std::size_t     confluent = 0;
  for (int i = 0; i < 300; ++i) {
    auto          rules = random_rules(rng, 2);
    RewriteSystem s(Alphabet({"a", "b"}), rules);
    // Any divergence already shows on a critical pair witness, which is
    // shorter than twice the longest left side.
    bool naive = naive_church_rosser(rules, 2, 2 * s.max_lhs_length());
    REQUIRE(is_locally_confluent(s).confluent == naive);
    confluent += naive ? 1 : 0;
    // Pairs of a confluent system are joinable; of a non-confluent one, the
    // reported pair is not.
    for (auto const& cp : critical_pairs(s)) {
      bool joined = normal_form(s, cp.left) == normal_form(s, cp.right);
      if (naive) {
        REQUIRE(joined);
      }
    }
  }
  CHECK(confluent > 20);
  CHECK(confluent < 280);
}

TEST_CASE("classification") {
  Alphabet a({"a", "b"});
  auto     c = classify(make_system(a, {{"aa", "a"}}));
  CHECK(c.parikh_reducing);
  CHECK(c.subword_reducing);
  CHECK(c.length_reducing);
  CHECK_FALSE(classify(make_system(a, {{"ab", "ba"}})).parikh_reducing);
  auto longer = classify(make_system(a, {{"bbb", "aa"}}));
  CHECK_FALSE(longer.parikh_reducing);
  CHECK(longer.length_reducing);
  CHECK_FALSE(longer.subword_reducing);
  auto nw = niemann_waldmann(2);
  CHECK(classify(nw).parikh_reducing);
  CHECK(classify(nw).subword_reducing);
}

TEST_CASE("Parikh-reducing systems reduce every positive weight") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 50; ++i) {
    auto          rules = random_rules(rng, 3);
    RewriteSystem s(Alphabet({"a", "b", "c"}), rules);
    if (!classify(s).parikh_reducing) {
      continue;
    }
    for (int j = 0; j < 100; ++j) {
      WeightFunction f({1 + rng() % 50, 1 + rng() % 50, 1 + rng() % 50});
      REQUIRE(is_weight_reducing(s, f));
    }
  }
}

TEST_CASE("termination within the Parikh budget") {
  auto            nw = niemann_waldmann(3);
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    Word        w     = random_word(rng, 3, rng() % 40);
    std::size_t steps = 0;
    NormalFormOptions o;
    o.verify_parikh = true;
    o.observer      = [&](StepInfo const&) { ++steps; };
    normal_form(nw, w, {StrategyKind::random, rng()}, o);
    REQUIRE(steps <= w.size());
  }
}

TEST_CASE("confluent systems are strategy independent") {
  for (std::size_t m : {2, 3}) {
    auto nw = niemann_waldmann(m);
    for (std::size_t len = 0; len <= (m == 2 ? 8 : 6); ++len) {
      for (auto const& w : all_words(m, len)) {
        Word first = normal_form(nw, w);
        for (auto const& st : all_strategies) {
          REQUIRE(normal_form(nw, w, st) == first);
        }
      }
    }
  }
}

TEST_CASE("invariance") {
  auto         z2 = named::cyclic(2);
  Alphabet     c({"c"});
  Homomorphism h(z2, {1});
  CHECK(check_invariance(make_system(c, {{"cc", ""}}), h));
  CHECK_FALSE(check_invariance(make_system(c, {{"cc", "c"}}), h));
  auto nw = niemann_waldmann(2);
  CHECK(check_invariance(nw, Homomorphism(z2, {1, 1})));
  CHECK_FALSE(check_invariance(nw, Homomorphism(z2, {1, 0})));
  // Through an expansion: letter x stands for cc.
  CHECK(check_invariance(make_system(Alphabet({"x"}), {{"x", ""}}), h, {Word{0, 0}}));

  auto rep = check_invariance_sampled(make_system(c, {{"cc", ""}}), h, uniform_sampler(1, 0, 20),
                                      50, 1);
  CHECK(rep.invariant);
  CHECK(rep.applications > 0);
  auto bad = check_invariance_sampled(make_system(c, {{"cc", "c"}}), h, uniform_sampler(1, 2, 20),
                                      50, 1);
  CHECK_FALSE(bad.invariant);
}

TEST_CASE("counting irreducible words") {
  Alphabet c({"c"});
  auto     r = enumerate_irreducible(make_system(c, {{"cc", ""}}), 10);
  CHECK(r.complete);
  CHECK(r.count == 2);
  for (std::size_t n = 1; n <= 12; ++n) {
    auto sys = RewriteSystem(c, {{Word(n, 0), Word{}}});
    auto e   = enumerate_irreducible(sys, 24);
    CHECK(e.complete);
    CHECK(e.count == n);
  }
  auto nw2 = enumerate_irreducible(niemann_waldmann(2), 24);
  CHECK(nw2.complete);
  CHECK(nw2.count == 11);
  auto none = enumerate_irreducible(make_system(Alphabet({"a", "b"}), {{"aa", ""}}), 6);
  CHECK_FALSE(none.complete);
  CHECK(none.count == 1 + 2 + 3 + 5 + 8 + 13 + 21);

  std::mt19937_64 rng(14);
  for (int i = 0; i < 150; ++i) {
    auto          rules = random_rules(rng, 2);
    RewriteSystem s(Alphabet({"a", "b"}), rules);
    auto          e = enumerate_irreducible(s, 8);
    REQUIRE(e.count == naive_irreducible_count(rules, 2, 8));
    std::vector<Word> expect;
    for (std::size_t len = 0; len <= 8; ++len) {
      for (auto const& w : all_words(2, len)) {
        if (naive_irreducible(rules, w)) {
          expect.push_back(w);
        }
      }
    }
    REQUIRE(list_irreducible(s, 8) == expect);
    bool any_at_8 = !expect.empty() && expect.back().size() == 8;
    REQUIRE(e.complete == !any_at_8);
  }
  CHECK_THROWS_AS(list_irreducible(make_system(Alphabet({"a", "b"}), {{"aa", ""}}), 30, 100),
                  BudgetExhausted);
}

TEST_CASE("sampled confluence") {
  auto nw = niemann_waldmann(3);
  CHECK(confluence_sampling(nw, uniform_sampler(3, 0, 30), 0, all_strategies, 1).ok);
  CHECK(confluence_sampling(nw, uniform_sampler(3, 0, 30), 200, all_strategies, 1).ok);
  auto bad = make_system(Alphabet({"a", "b"}), {{"ab", "a"}, {"ab", "b"}});
  auto rep = confluence_sampling(bad, uniform_sampler(2, 2, 10), 200, all_strategies, 1);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.counterexample.has_value());
  CHECK(naive_all_normal_forms(bad.rules(), *rep.counterexample).size() > 1);
}
