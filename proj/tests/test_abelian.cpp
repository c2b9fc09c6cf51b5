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

#include <map>
#include <random>

#include "prcr/abelian.hpp"
#include "prcr/errors.hpp"
#include "prcr/sampling.hpp"
#include "support.hpp"

using namespace prcr;
using namespace prcr::test;

namespace {

  struct Z2 {
    ConstructionArtifact    art;
    LiftedSchema const*     lifted;
    DeltaOmegaSchema const* schema;
    Homomorphism            phi;
  };

  Z2 z2() {
    Alphabet     a({"a", "c"});
    Homomorphism phi(named::cyclic(2), {1, 1});
    auto         art = construct_abelian(a, phi);
    auto [l, d]      = delta_omega_level(*art.system);
    return {std::move(art), l, d, phi};
  }

  // Largest marker of w under the preorder, if any.
  std::optional<Word> top_marker(DeltaOmegaSchema const& s, WordView w) {
    std::optional<Word> best;
    std::size_t const   m = s.params().marker;
    for (std::size_t q : s.marker_positions(w)) {
      WordView x(w.data() + q, m);
      if (!best || s.compare_markers(x, *best) > 0) {
        best = Word(x.begin(), x.end());
      }
    }
    return best;
  }

  std::vector<Strategy> three_strategies() {
    return {Strategy{StrategyKind::leftmost_shortest}, Strategy{StrategyKind::rightmost},
            Strategy{StrategyKind::random, 5}};
  }

}  // namespace

TEST_CASE("abelian parameters") {
  CHECK(abelian_t(2, 1) == 32);
  CHECK(abelian_t0(2, 32) == 111);
  CHECK(abelian_t(3, 2) == 57);
  CHECK(index_formula(3, 4) == 39);

  auto lvl = z2();
  REQUIRE(lvl.art.levels.size() == 2);
  auto const& top = lvl.art.levels.back();
  CHECK(top.kind == "abelian");
  CHECK(top.n == 2);
  CHECK(top.s == 1);
  CHECK(top.params->t == 32);
  CHECK(top.params->t0 == 111);
  CHECK(top.params->marker == 6);
  CHECK(top.ceiling->omega_count == 30);
  CHECK(*top.ceiling->t_omega == BigNat("153545080800"));
  CHECK(top.k_prefixes == std::vector<Word>{Word{}, Word{0}});
  auto const* r = dynamic_cast<RewriteSystem const*>(lvl.lifted->base().get());
  REQUIRE(r != nullptr);
  CHECK(r->rules() == std::vector<Rule>{{Word{0, 0}, Word{}}});
}

TEST_CASE("one-letter base cases") {
  for (std::size_t n = 1; n <= 12; ++n) {
    auto art = construct_abelian(Alphabet({"c"}), Homomorphism(named::cyclic(n), {n == 1 ? 0u : 1u}));
    auto const* sys = dynamic_cast<RewriteSystem const*>(art.system.get());
    REQUIRE(sys != nullptr);
    if (n == 1) {
      CHECK(sys->rules() == std::vector<Rule>{{Word{0}, Word{}}});
    } else {
      CHECK(sys->rules() == std::vector<Rule>{{Word(n, 0), Word{}}});
    }
    auto e = enumerate_irreducible(*sys, n + 4);
    CHECK(e.complete);
    CHECK(e.count == n);
  }
  // A generator of order 3 in Z/6.
  auto art = construct_abelian(Alphabet({"c"}), Homomorphism(named::cyclic(6), {2}));
  auto e   = enumerate_irreducible(dynamic_cast<RewriteSystem const&>(*art.system), 10);
  CHECK(e.count == 3);
}

TEST_CASE("non-abelian targets are rejected") {
  Homomorphism phi(named::symmetric3(), {1, 3});
  CHECK_THROWS_AS(construct_abelian(Alphabet({"a", "b"}), phi), Error);
  Homomorphism mono(named::monogenic(1, 2), {1, 1});
  CHECK_THROWS_AS(construct_abelian(Alphabet({"a", "b"}), mono), Error);
}

TEST_CASE("long K-words contain a long repetition or a marker") {
  auto            lvl = z2();
  auto const&     s   = *lvl.schema;
  auto            p   = s.params();
  std::mt19937_64 rng(41);
  auto            inner = schema_sampler(lvl.lifted->inner(), p.t0);
  for (int i = 0; i < 2000; ++i) {
    Word w = i % 2 == 0 ? random_word(rng, 2, p.t0) : inner(rng);
    w.resize(p.t0, p.separator);
    std::vector<Redex> delta;
    s.collect_delta(w, delta);
    REQUIRE((!delta.empty() || !s.marker_positions(w).empty()));
  }
  // Separator runs with one other letter at the end.
  Word w(p.t0 - 1, p.separator);
  w.push_back(1);
  std::vector<Redex> delta;
  s.collect_delta(w, delta);
  CHECK(!delta.empty());
}

TEST_CASE("rewriting never raises the top marker") {
  auto            lvl = z2();
  auto const&     s   = *lvl.schema;
  auto            sample = schema_sampler(lvl.lifted->inner(), 300);
  std::mt19937_64 rng(42);
  std::size_t     steps = 0;
  while (steps < 1000) {
    Word              w = sample(rng);
    NormalFormOptions opt;
    opt.observer = [&](StepInfo const& st) {
      Word after(st.before.begin(), st.before.begin() + st.redex.pos);
      after.insert(after.end(), st.rhs.word.begin(), st.rhs.word.end());
      after.insert(after.end(), st.before.begin() + st.redex.pos + st.redex.len,
                   st.before.end());
      auto x = top_marker(s, st.before);
      auto y = top_marker(s, after);
      if (y) {
        REQUIRE(x.has_value());
        REQUIRE(s.compare_markers(*y, *x) <= 0);
      }
      ++steps;
    };
    normal_form(s, w, Strategy{StrategyKind::random, steps}, opt);
  }
}

TEST_CASE("marker-bounded factors converge to the fixed normal form") {
  auto            lvl = z2();
  auto const&     s   = *lvl.schema;
  std::size_t const m = s.params().marker;
  std::mt19937_64 rng(43);
  for (int i = 0; i < 200; ++i) {
    Word w = omega_instance(s, rng, s.params().t + rng() % 200);
    REQUIRE(w.size() >= s.params().t);
    Word eta(w.begin(), w.begin() + m);
    Word u(w.begin() + m, w.end() - m);
    Word expected = concat(concat(eta, s.normal_form_of(u)), eta);
    for (auto const& st : three_strategies()) {
      REQUIRE(normal_form(s, w, st) == expected);
    }
  }
}

TEST_CASE("abelian systems: invariance and sampled confluence") {
  struct Case {
    Alphabet     a;
    Homomorphism phi;
  };
  std::vector<Case> cases{
      {Alphabet({"a", "c"}), Homomorphism(named::cyclic(2), {1, 1})},
      {Alphabet({"a", "c"}), Homomorphism(named::cyclic(3), {1, 2})},
      {Alphabet({"a", "b"}), Homomorphism(named::cyclic_product(2, 2), {1, 2})},
      {Alphabet({"a", "b", "c"}), Homomorphism(named::cyclic(2), {1, 1, 1})},
  };
  std::uint64_t seed = 44;
  for (auto const& c : cases) {
    auto art     = construct_abelian(c.a, c.phi);
    auto sampler = schema_sampler(art.system, 200);
    auto inv     = check_invariance_sampled(*art.system, c.phi, sampler, 150, seed);
    CHECK(inv.invariant);
    CHECK(inv.applications > 0);
    auto rep = confluence_sampling(*art.system, sampler, 150, three_strategies(), seed);
    CHECK(rep.ok);
    ++seed;
  }
}

TEST_CASE("every sampled step is Parikh-reducing") {
  auto              lvl     = z2();
  auto              sampler = schema_sampler(lvl.art.system, 300);
  std::mt19937_64   rng(45);
  NormalFormOptions opt;
  opt.verify_parikh = true;
  std::map<std::string, std::size_t> seen;
  opt.observer = [&](StepInfo const& st) { ++seen[std::string(family_name(st.redex.family))]; };
  for (int i = 0; i < 300; ++i) {
    CHECK_NOTHROW(normal_form(*lvl.art.system, sampler(rng), {}, opt));
  }
  CHECK(seen["R"] > 0);
  CHECK(seen["T_delta"] > 0);
  CHECK(seen["T_omega"] > 0);
}
