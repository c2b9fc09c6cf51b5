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

#include "prcr/abelian.hpp"

#include <numeric>
#include <unordered_map>

#include "prcr/errors.hpp"

namespace prcr {

  std::size_t abelian_t(std::size_t n, std::size_t s) {
    return 3 * n * (s + 4) + n;
  }

  std::size_t abelian_t0(std::size_t n, std::size_t t) {
    return (t + n + 3) * (n + 1);
  }

  FamilyFilter::FamilyFilter(std::shared_ptr<DeltaOmegaSchema const> schema, RuleFamily family)
      : RuleSchema(schema->alphabet()), _schema(std::move(schema)), _family(family) {
    if (_family != RuleFamily::delta && _family != RuleFamily::omega) {
      throw Error("family filter selects delta or omega rules");
    }
  }

  void FamilyFilter::collect_redexes(WordView w, std::vector<Redex>& out) const {
    if (_family == RuleFamily::delta) {
      _schema->collect_delta(w, out);
    } else {
      _schema->collect_omega(w, out);
    }
  }

  bool FamilyFilter::equals(RuleSchema const& other) const {
    auto const* o = dynamic_cast<FamilyFilter const*>(&other);
    return o != nullptr && _family == o->_family && _schema->equals(*o->_schema);
  }

  SchemaPtr delta_schema(Alphabet const& k, std::size_t n, std::size_t t) {
    if (t <= 2 * n) {
      throw Error("delta rules need t > 2n (t = " + std::to_string(t)
                  + ", n = " + std::to_string(n) + ")");
    }
    AbelianNormalForm nf;
    nf.counts.assign(k.size(), std::vector<std::size_t>{1});
    nf.orders = {1};
    DeltaOmegaParams p{n, n, t, 0, 3 * n, 0};
    auto schema = std::make_shared<DeltaOmegaSchema>(k, p, OmegaCeiling::make(0, 0, t), nf);
    return std::make_shared<FamilyFilter>(schema, RuleFamily::delta);
  }

  std::shared_ptr<LiftedSchema> compose_systems(Alphabet const& a, Letter c, SchemaPtr r,
                                                SchemaPtr t, std::vector<Word> prefixes,
                                                std::optional<AlphabetReduction> reduction,
                                                std::size_t level) {
    return std::make_shared<LiftedSchema>(a, c, std::move(r), std::move(prefixes),
                                          std::move(reduction), std::move(t), level);
  }

  BigNat index_formula(BigNat const& r_index, BigNat const& t_index) {
    if (t_index < 1) {
      throw Error("an index is at least 1");
    }
    return r_index + r_index * r_index * t_index;
  }

  namespace detail {
    std::size_t next_level(ConstructionArtifact const& artifact) {
      return artifact.levels.size() + 1;
    }

    SchemaPtr build_abelian(Alphabet const& a, Homomorphism const& phi0,
                            ConstructionOptions const& options, ConstructionArtifact& artifact) {
      if (a.empty()) {
        throw Error("alphabet must be non-empty");
      }
      if (a.size() != phi0.alphabet_size()) {
        throw Error("homomorphism and alphabet sizes differ");
      }
      auto [phi, sub]       = phi0.corestrict();
      FiniteMonoid const& g = phi.monoid();
      if (!is_group(g) || !is_abelian(g)) {
        throw Error("image of the homomorphism is not an abelian group");
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
      Letter const c = static_cast<Letter>(a.size() - 1);
      if (a.size() == 1) {
        info.kind   = "cyclic";
        info.n      = element_order(g, phi.image(c));
        info.level  = next_level(artifact);
        info.system = std::make_shared<RewriteSystem>(
            a, std::vector<Rule>{{Word(info.n, c), Word{}}}, info.level);
        artifact.levels.push_back(info);
        return info.system;
      }
      std::vector<Letter> b_letters(a.size() - 1);
      std::iota(b_letters.begin(), b_letters.end(), 0);
      SchemaPtr r = build_abelian(remove_letter(a, c), phi.restrict_to(b_letters), options,
                                  artifact);

      std::size_t n = 1;
      for (Letter x = 0; x < a.size(); ++x) {
        n = std::lcm(n, element_order(g, phi.image(x)));
      }
      std::size_t const s  = a.size() - 1;
      std::size_t const t  = abelian_t(n, s);
      std::size_t const t0 = abelian_t0(n, t);
      std::size_t const m  = 3 * n;

      std::optional<std::size_t> limit;
      if (options.alphabet_reduction) {
        limit = g.size();
      }
      auto prefixes = materialize_prefixes(*r, b_letters, limit, options.prefix_cap);
      std::unordered_map<Word, Letter, WordHash> index;
      for (std::size_t k = 0; k < prefixes.size(); ++k) {
        index.emplace(prefixes[k], static_cast<Letter>(k));
      }

      AbelianNormalForm nf;
      for (auto const& p : prefixes) {
        std::vector<std::size_t> row(s + 1, 0);
        for (Letter x : p) {
          ++row[x];
        }
        row[s] = 1;
        nf.counts.push_back(std::move(row));
      }
      for (Letter x = 0; x < a.size(); ++x) {
        nf.orders.push_back(element_order(g, phi.image(x)));
      }
      for (Letter x = 0; x < s; ++x) {
        std::vector<Letter> row;
        for (std::size_t e = 1; e < nf.orders[x]; ++e) {
          auto it = index.find(Word(e, x));
          if (it == index.end()) {
            throw InternalError("power " + a.name(x) + "^" + std::to_string(e)
                                + " is not a K-letter");
          }
          row.push_back(it->second);
        }
        nf.powers.push_back(std::move(row));
      }

      Alphabet         k = Alphabet::numbered("k", prefixes.size());
      DeltaOmegaParams params{n, n, t, t0, m, 0};
      OmegaCeiling     ceiling = OmegaCeiling::make(omega_count(prefixes.size(), m, n), t0, t,
                                                    options.relax_upper_bound);
      info.level  = next_level(artifact);
      auto inner  = std::make_shared<DeltaOmegaSchema>(k, params, ceiling, nf, info.level);
      std::optional<AlphabetReduction> reduction;
      if (limit) {
        reduction = AlphabetReduction{*limit, phi};
      }
      info.kind       = "abelian";
      info.separator  = a.name(c);
      info.k_prefixes = prefixes;
      info.reduced    = limit.has_value();
      info.n          = n;
      info.s          = s;
      info.params     = params;
      info.ceiling    = ceiling;
      info.system     = compose_systems(a, c, r, inner, prefixes, reduction, info.level);
      artifact.levels.push_back(info);
      return info.system;
    }
  }  // namespace detail

  ConstructionArtifact construct_abelian(Alphabet const& a, Homomorphism const& phi,
                                         ConstructionOptions const& options) {
    ConstructionArtifact artifact;
    artifact.system = detail::build_abelian(a, phi, options, artifact);
    return artifact;
  }

}  // namespace prcr
