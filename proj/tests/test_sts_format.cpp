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

#include <cstdio>
#include <random>

#include "prcr/abelian.hpp"
#include "prcr/errors.hpp"
#include "prcr/monoid_construction.hpp"
#include "prcr/oracle.hpp"
#include "prcr/sampling.hpp"
#include "prcr/sts_format.hpp"
#include "prcr/two_letter.hpp"

using namespace prcr;

namespace {

  void round_trip(SchemaPtr const& s) {
    std::string text = format_system(*s);
    SchemaPtr   back = parse_system(text);
    REQUIRE(back->equals(*s));
    CHECK(format_system(*back) == text);
    // Same behaviour on sampled words.
    auto            sampler = schema_sampler(s, 120);
    std::mt19937_64 rng(71);
    for (int i = 0; i < 50; ++i) {
      Word w = sampler(rng);
      REQUIRE(normal_form(*back, w) == normal_form(*s, w));
    }
  }

  int parse_error_line(std::string const& text) {
    try {
      parse_system(text);
    } catch (ParseError const& e) {
      return static_cast<int>(e.line());
    }
    return -1;
  }

}  // namespace

TEST_CASE("explicit systems round-trip") {
  round_trip(std::make_shared<RewriteSystem>(niemann_waldmann(3)));
  round_trip(std::make_shared<RewriteSystem>(
      make_system(Alphabet({"a", "b"}), {{"ab", ""}, {"bb", "b"}})));
  auto s = parse_system("# parity\nalphabet a c\n\nrule a a -> \nrule c c ->  # drop\n");
  auto const* e = dynamic_cast<RewriteSystem const*>(s.get());
  REQUIRE(e != nullptr);
  CHECK(e->rules() == std::vector<Rule>{{Word{0, 0}, Word{}}, {Word{1, 1}, Word{}}});
}

TEST_CASE("constructed schemas round-trip") {
  Alphabet ac({"a", "c"});
  round_trip(construct_abelian(ac, Homomorphism(named::cyclic(2), {1, 1})).system);
  round_trip(construct_abelian(Alphabet({"a", "b", "c"}),
                               Homomorphism(named::cyclic_product(2, 2), {1, 2, 3}))
                 .system);
  ConstructionOptions plain;
  plain.alphabet_reduction = false;
  round_trip(construct_abelian(ac, Homomorphism(named::cyclic(3), {1, 1}), plain).system);
  ConstructionOptions relaxed;
  relaxed.relax_upper_bound = true;
  round_trip(construct_abelian(ac, Homomorphism(named::cyclic(2), {1, 1}), relaxed).system);
  round_trip(construct_two_letter(Alphabet({"a", "b"}), Homomorphism(named::symmetric3(), {1, 3}))
                 .system);
  round_trip(construct_monoid(Alphabet({"a", "b"}),
                              Homomorphism(named::idempotent_with_zero(), {1, 2}))
                 .system);
}

TEST_CASE("files") {
  std::string path = "prcr_test_round_trip.sts";
  auto        nw   = niemann_waldmann(2);
  write_system_file(path, nw);
  CHECK(read_system_file(path)->equals(nw));
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_system_file("no/such/file.sts"), Error);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(parse_error_line("alphabet a\nrule a -> b\n") == 2);
  CHECK(parse_error_line("alphabet a\nrule a a\n") == 2);
  CHECK(parse_error_line("# nothing\n\nrule a -> \n") == 3);
  CHECK(parse_error_line("alphabet a\nbogus\n") == 2);
  CHECK(parse_error_line("alphabet a\nrule a -> a\n") == 2);
  CHECK(parse_error_line("schema nonsense\n") == 1);
  CHECK(parse_error_line("alphabet a b\nlevel x\n") == 2);
  CHECK(parse_error_line("") > 0);

  // Truncated schema: drop the last line.
  auto        s    = construct_abelian(Alphabet({"a", "c"}), Homomorphism(named::cyclic(2), {1, 1}));
  std::string text = format_system(*s.system);
  text.erase(text.rfind('\n', text.size() - 2) + 1);
  CHECK(parse_error_line(text) > 0);
}
