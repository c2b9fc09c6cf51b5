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

#include "prcr/errors.hpp"
#include "prcr/sampling.hpp"
#include "prcr/two_letter.hpp"
#include "support.hpp"

using namespace prcr;
using namespace prcr::test;

namespace {

  // Least a-count, then least slot sequence, over all (2n)^(n-1) sequences.
  std::vector<std::vector<std::size_t>> naive_slots(Homomorphism const& phi, std::size_t n,
                                                    std::vector<Element> const& targets) {
    std::size_t const                     slots = n - 1;
    std::vector<std::vector<std::size_t>> best(targets.size());
    std::vector<std::size_t>              best_a(targets.size(), SIZE_MAX);
    std::vector<std::size_t>              seq(slots, 0);
    for (;;) {
      Element     v = phi.evaluate(slot_word(n, seq));
      std::size_t a = 0;
      for (std::size_t o : seq) {
        a += o >= n ? 1 : 0;
      }
      for (std::size_t i = 0; i < targets.size(); ++i) {
        // Sequences come in lexicographic order, so the first hit wins ties.
        if (targets[i] == v && a < best_a[i]) {
          best_a[i] = a;
          best[i]   = seq;
        }
      }
      std::size_t j = slots;
      while (j > 0 && seq[j - 1] == 2 * n - 1) {
        seq[--j] = 0;
      }
      if (j == 0) {
        break;
      }
      ++seq[j - 1];
    }
    return best;
  }

  Word b_power(std::size_t k) {
    return Word(k, 1);
  }

}  // namespace

TEST_CASE("two-letter parameters") {
  CHECK(two_letter_t(2) == 52);
  CHECK(two_letter_t(6) == 900);
  CHECK(two_letter_t0(2, 52) == (52 + 4 + 3) * 5);
  CHECK(slot_word(2, {0}) == b_power(25));
  CHECK(to_k_word(Word{0, 1, 1, 0, 0, 1}) == Word{1, 0, 2});
  CHECK_THROWS_AS(to_k_word(Word{1, 0}), Error);
}

TEST_CASE("normal-form table for Z/2 with b trivial") {
  Homomorphism phi(named::cyclic(2), {1, 0});
  auto         table = normal_form_table(phi);
  CHECK(table.n == 2);
  REQUIRE(table.a_words.size() == 2);
  CHECK(table.a_words[0] == b_power(25));
  Word g = concat(concat(b_power(12), Word{0}), b_power(13));
  CHECK(table.a_words[1] == g);
  CHECK(table.a_counts == std::vector<std::size_t>{0, 1});

  auto trivial = normal_form_table(Homomorphism(named::cyclic(1), {0, 0}));
  CHECK(trivial.a_words.size() == 1);
  CHECK(trivial.a_counts[0] == 0);
}

TEST_CASE("normal-form tables against exhaustive slot search") {
  struct Case {
    MonoidPtr            m;
    std::vector<Element> images;
  };
  std::vector<Case> cases{
      {named::cyclic(2), {1, 1}},         {named::cyclic(2), {1, 0}},
      {named::cyclic(3), {1, 2}},         {named::cyclic(4), {1, 2}},
      {named::cyclic(4), {2, 1}},         {named::cyclic_product(2, 2), {1, 2}},
      {named::cyclic(5), {2, 0}},         {named::cyclic(6), {2, 3}},
      {named::symmetric3(), {1, 3}},      {named::symmetric3(), {1, 2}},
      {named::cyclic_product(2, 4), {1, 4}},
  };
  for (auto const& c : cases) {
    Homomorphism phi(c.m, c.images);
    auto         table = normal_form_table(phi);
    std::size_t  n     = table.n;
    CHECK(n == exponent(*table.group));
    auto naive = naive_slots(phi, n, table.embedding);
    std::size_t const t = two_letter_t(n);
    for (std::size_t e = 0; e < table.embedding.size(); ++e) {
      REQUIRE(table.slots[e] == naive[e]);
      REQUIRE(phi.evaluate(table.a_words[e]) == table.embedding[e]);
      REQUIRE(table.a_counts[e] < n);
      std::size_t len = table.k_words[e].size();
      REQUIRE(t - 7 * n * n < len);
      REQUIRE(len < t - 6 * n * n);
      for (std::size_t f = 0; f < table.embedding.size(); ++f) {
        std::size_t other = table.k_words[f].size();
        REQUIRE((len > other ? len - other : other - len) < n * n);
      }
    }
  }
}

TEST_CASE("two-letter constructions") {
  Alphabet ab({"a", "b"});
  auto     z2 = construct_two_letter(ab, Homomorphism(named::cyclic(2), {1, 1}));
  auto const& top = z2.levels.back();
  CHECK(top.kind == "two-letter");
  CHECK(top.params->t == 52);
  CHECK(top.params->period == 4);
  CHECK(top.params->marker == 12);
  CHECK(top.k_prefixes == std::vector<Word>{Word{}, Word{0}});

  auto s3 = construct_two_letter(ab, Homomorphism(named::symmetric3(), {1, 3}));
  auto const& s3top = s3.levels.back();
  CHECK(s3top.n == 6);
  CHECK(s3top.params->t == 900);
  CHECK(s3top.k_prefixes.size() == 6);

  auto triv = construct_two_letter(ab, Homomorphism(named::cyclic(3), {0, 0}));
  CHECK(normal_form(*triv.system, Word{0, 1, 1, 0}).empty());

  CHECK_THROWS_AS(construct_two_letter(Alphabet({"a", "b", "c"}),
                                       Homomorphism(named::cyclic(2), {1, 1, 1})),
                  Error);
  CHECK_THROWS_AS(construct_two_letter(ab, Homomorphism(named::monogenic(1, 1), {1, 1})), Error);
}

TEST_CASE("representatives hold only minimal markers") {
  Alphabet ab({"a", "b"});
  for (auto const& phi : {Homomorphism(named::cyclic(2), {1, 1}),
                          Homomorphism(named::cyclic(3), {1, 1}),
                          Homomorphism(named::symmetric3(), {1, 3})}) {
    auto art   = construct_two_letter(ab, phi);
    auto [l, d] = delta_omega_level(*art.system);
    REQUIRE(d != nullptr);
    auto const& nf = std::get<GroupNormalForm>(d->normal_form_spec());
    std::size_t m  = d->params().marker;
    for (auto const& v : nf.representatives) {
      for (std::size_t q : d->marker_positions(v)) {
        REQUIRE(d->tail(WordView(v.data() + q, m)) == m - 1);
      }
    }
  }
}

TEST_CASE("two-letter systems: invariance and sampled confluence") {
  Alphabet              ab({"a", "b"});
  std::vector<Strategy> strategies{Strategy{StrategyKind::leftmost_shortest},
                                   Strategy{StrategyKind::rightmost},
                                   Strategy{StrategyKind::random, 9}};
  struct Case {
    Homomorphism phi;
    std::size_t  len;
    std::size_t  samples;
  };
  std::vector<Case> cases{{Homomorphism(named::cyclic(2), {1, 1}), 300, 200},
                          {Homomorphism(named::cyclic(2), {1, 0}), 300, 200},
                          {Homomorphism(named::cyclic(3), {1, 2}), 500, 100}};
  std::uint64_t seed = 51;
  for (auto const& c : cases) {
    auto art     = construct_two_letter(ab, c.phi);
    auto sampler = schema_sampler(art.system, c.len);
    auto inv     = check_invariance_sampled(*art.system, c.phi, sampler, c.samples, seed);
    CHECK(inv.invariant);
    auto rep = confluence_sampling(*art.system, sampler, c.samples, strategies, seed);
    CHECK(rep.ok);
    ++seed;
  }
}
