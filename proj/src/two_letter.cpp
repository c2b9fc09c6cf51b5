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

#include "prcr/two_letter.hpp"

#include <limits>

#include "prcr/abelian.hpp"
#include "prcr/errors.hpp"
#include "prcr/lifted.hpp"
#include "prcr/repetition_marker.hpp"

namespace prcr {

  std::size_t two_letter_t(std::size_t n) {
    return n * n * (3 * n + 7);
  }

  std::size_t two_letter_t0(std::size_t n, std::size_t t) {
    return (t + n * n + 3) * (n * n + 1);
  }

  Word slot_word(std::size_t n, std::vector<std::size_t> const& slots) {
    std::size_t const block = 3 * n * n;
    Word              w(block, 1);
    for (std::size_t o : slots) {
      if (o >= n) {
        w.push_back(0);
      }
      w.insert(w.end(), o % n + 1, 1);
      w.insert(w.end(), block, 1);
    }
    return w;
  }

  Word to_k_word(WordView ab_word) {
    Word   k;
    Letter run = 0;
    for (Letter x : ab_word) {
      if (x == 0) {
        ++run;
      } else {
        k.push_back(run);
        run = 0;
      }
    }
    if (run != 0) {
      throw Error("word does not end with b");
    }
    return k;
  }

  NormalFormTable normal_form_table(Homomorphism const& phi0) {
    if (phi0.alphabet_size() != 2) {
      throw Error("two-letter construction needs exactly two letters");
    }
    auto [phi, sub]       = phi0.corestrict();
    FiniteMonoid const& g = phi.monoid();
    if (!is_group(g)) {
      throw Error("image of the homomorphism is not a group");
    }
    NormalFormTable table;
    table.n         = exponent(g);
    table.group     = phi.codomain();
    table.embedding = sub.embedding;
    std::size_t const n     = table.n;
    std::size_t const slots = n - 1;
    std::size_t const size  = g.size();

    std::vector<Element>     value(2 * n);
    std::vector<std::size_t> a_cost(2 * n);
    for (std::size_t o = 0; o < 2 * n; ++o) {
      Element x = g.power(phi.image(1), o % n + 1);
      if (o >= n) {
        x = g.product(phi.image(0), x);
      }
      value[o]  = x;
      a_cost[o] = o >= n ? 1 : 0;
    }
    // cost[i][h]: fewest a's in slots i.. with product h.
    constexpr std::size_t                 inf = std::numeric_limits<std::size_t>::max();
    std::vector<std::vector<std::size_t>> cost(slots + 1, std::vector<std::size_t>(size, inf));
    cost[slots][g.identity()] = 0;
    for (std::size_t i = slots; i-- > 0;) {
      for (Element h = 0; h < size; ++h) {
        for (std::size_t o = 0; o < 2 * n; ++o) {
          Element rest = g.product(*g.inverse(value[o]), h);
          if (cost[i + 1][rest] != inf) {
            cost[i][h] = std::min(cost[i][h], a_cost[o] + cost[i + 1][rest]);
          }
        }
      }
    }
    for (Element target = 0; target < size; ++target) {
      if (cost[0][target] == inf) {
        throw Error("element " + std::to_string(sub.embedding[target])
                    + " has no representative with " + std::to_string(slots) + " slots");
      }
      std::vector<std::size_t> chosen;
      Element                  h = target;
      for (std::size_t i = 0; i < slots; ++i) {
        for (std::size_t o = 0; o < 2 * n; ++o) {
          Element rest = g.product(*g.inverse(value[o]), h);
          if (cost[i + 1][rest] != inf && a_cost[o] + cost[i + 1][rest] == cost[i][h]) {
            chosen.push_back(o);
            h = rest;
            break;
          }
        }
      }
      Word w = slot_word(n, chosen);
      table.slots.push_back(chosen);
      table.a_counts.push_back(cost[0][target]);
      table.k_words.push_back(to_k_word(w));
      table.a_words.push_back(std::move(w));
    }
    return table;
  }

  namespace detail {
    SchemaPtr build_two_letter(Alphabet const& a, Homomorphism const& phi0,
                               ConstructionOptions const& options,
                               ConstructionArtifact& artifact) {
      if (a.size() != 2 || phi0.alphabet_size() != 2) {
        throw Error("two-letter construction needs exactly two letters");
      }
      auto [phi, sub]       = phi0.corestrict();
      FiniteMonoid const& g = phi.monoid();
      if (!is_group(g)) {
        throw Error("image of the homomorphism is not a group");
      }
      LevelInfo info;
      info.alphabet    = a;
      info.monoid_size = g.size();
      if (g.size() == 1) {
        info.kind   = "trivial";
        info.level  = next_level(artifact);
        info.system = trivial_system(a, info.level);
        artifact.levels.push_back(info);
        return info.system;
      }
      NormalFormTable   table = normal_form_table(phi);
      std::size_t const n     = table.n;

      LevelInfo base;
      base.kind        = "cyclic";
      base.alphabet    = remove_letter(a, 1);
      base.monoid_size = generated_submonoid(g, {phi.image(0)}).embedding.size();
      base.n           = n;
      base.level       = next_level(artifact);
      base.system      = std::make_shared<RewriteSystem>(
          base.alphabet, std::vector<Rule>{{Word(n, 0), Word{}}}, base.level);
      artifact.levels.push_back(base);

      std::optional<std::size_t> limit;
      if (options.alphabet_reduction) {
        limit = g.size();
      }
      auto prefixes = materialize_prefixes(*base.system, {0}, limit, options.prefix_cap);

      GroupNormalForm nf;
      nf.group = phi.codomain();
      for (auto const& p : prefixes) {
        Word x = p;
        x.push_back(1);
        nf.values.push_back(phi.evaluate(x));
      }
      nf.representatives = table.k_words;

      std::size_t const t  = two_letter_t(n);
      std::size_t const t0 = two_letter_t0(n, t);
      std::size_t const m  = 3 * n * n;
      DeltaOmegaParams  params{n, n * n, t, t0, m, 0};
      OmegaCeiling      ceiling = OmegaCeiling::make(omega_count(prefixes.size(), m, n * n), t0,
                                                     t, options.relax_upper_bound);
      info.level = next_level(artifact);
      auto inner = std::make_shared<DeltaOmegaSchema>(Alphabet::numbered("k", prefixes.size()),
                                                      params, ceiling, nf, info.level);
      std::optional<AlphabetReduction> reduction;
      if (limit) {
        reduction = AlphabetReduction{*limit, phi};
      }
      info.kind       = "two-letter";
      info.separator  = a.name(1);
      info.k_prefixes = prefixes;
      info.reduced    = limit.has_value();
      info.n          = n;
      info.s          = 1;
      info.params     = params;
      info.ceiling    = ceiling;
      info.system     = compose_systems(a, 1, base.system, inner, prefixes, reduction, info.level);
      artifact.levels.push_back(info);
      return info.system;
    }
  }  // namespace detail

  ConstructionArtifact construct_two_letter(Alphabet const& a, Homomorphism const& phi,
                                            ConstructionOptions const& options) {
    ConstructionArtifact artifact;
    artifact.system = detail::build_two_letter(a, phi, options, artifact);
    return artifact;
  }

}  // namespace prcr
