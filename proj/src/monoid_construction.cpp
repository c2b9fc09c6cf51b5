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

#include "prcr/monoid_construction.hpp"

#include "prcr/abelian.hpp"
#include "prcr/errors.hpp"
#include "prcr/lifted.hpp"
#include "prcr/two_letter.hpp"

namespace prcr {

  std::pair<LocalDivisor, Homomorphism> psi_homomorphism(Homomorphism const& phi, Letter c,
                                                         std::vector<Word> const& prefixes) {
    Element const e = phi.image(c);
    if (phi.monoid().is_unit(e)) {
      throw Error("separator image must not be a unit");
    }
    LocalDivisor         d = local_divisor(phi.codomain(), e);
    std::vector<Element> images;
    for (auto const& p : prefixes) {
      Word w{c};
      w.insert(w.end(), p.begin(), p.end());
      w.push_back(c);
      auto local = d.local(phi.evaluate(w));
      if (!local) {
        throw InternalError("image of c x c is outside the local divisor");
      }
      images.push_back(*local);
    }
    Homomorphism psi(d.monoid, std::move(images));
    return {std::move(d), std::move(psi)};
  }

  namespace {
    bool smaller(RecursionNode const& child, RecursionNode const& parent) {
      return std::pair(child.monoid_size, child.alphabet_size)
             < std::pair(parent.monoid_size, parent.alphabet_size);
    }

    SchemaPtr build_monoid(Alphabet const& a, Homomorphism const& phi0,
                           ConstructionOptions const& options, ConstructionArtifact& artifact,
                           RecursionNode& node) {
      if (a.empty()) {
        throw Error("alphabet must be non-empty");
      }
      if (a.size() != phi0.alphabet_size()) {
        throw Error("homomorphism and alphabet sizes differ");
      }
      auto [phi, sub]       = phi0.corestrict();
      FiniteMonoid const& m = phi.monoid();
      node.monoid_size      = m.size();
      node.alphabet_size    = a.size();
      if (is_group(m)) {
        node.case_name = "group_base";
        if (is_abelian(m)) {
          return detail::build_abelian(a, phi, options, artifact);
        }
        if (a.size() == 2) {
          return detail::build_two_letter(a, phi, options, artifact);
        }
        throw UnsupportedError("unsupported: open problem (non-abelian group of order "
                               + std::to_string(m.size()) + " over "
                               + std::to_string(a.size()) + " letters)");
      }
      if (auto witness = non_abelian_subgroup(m)) {
        throw Error("monoid is not in Ab-bar: the maximal subgroup at idempotent "
                    + std::to_string(sub.embedding[witness->idempotent]) + " has order "
                    + std::to_string(witness->elements.size()) + " and is not abelian");
      }
      LevelInfo info;
      info.alphabet    = a;
      info.monoid_size = m.size();
      if (a.size() == 1) {
        node.case_name = "single_letter_base";
        auto [i, p]    = index_and_period(m, phi.image(0));
        info.kind      = "monogenic";
        info.level     = detail::next_level(artifact);
        info.system    = std::make_shared<RewriteSystem>(
            a, std::vector<Rule>{{Word(i + p, 0), Word(i, 0)}}, info.level);
        artifact.levels.push_back(info);
        return info.system;
      }
      node.case_name = "peel";
      Letter c       = static_cast<Letter>(a.size());
      for (Letter x = static_cast<Letter>(a.size()); x-- > 0;) {
        if (!m.is_unit(phi.image(x))) {
          c = x;
          break;
        }
      }
      if (c == a.size()) {
        throw InternalError("non-group image generated by units");
      }
      std::vector<Letter> b_letters;
      for (Letter x = 0; x < a.size(); ++x) {
        if (x != c) {
          b_letters.push_back(x);
        }
      }
      node.children.emplace_back();
      SchemaPtr r = build_monoid(remove_letter(a, c), phi.restrict_to(b_letters), options,
                                 artifact, node.children.back());

      std::optional<std::size_t> limit;
      if (options.alphabet_reduction) {
        limit = m.size();
      }
      auto prefixes   = materialize_prefixes(*r, b_letters, limit, options.prefix_cap);
      auto [d, psi]   = psi_homomorphism(phi, c, prefixes);
      Alphabet k      = Alphabet::numbered("k", prefixes.size());
      node.children.emplace_back();
      SchemaPtr t = build_monoid(k, psi, options, artifact, node.children.back());
      for (auto const& child : node.children) {
        if (!smaller(child, node)) {
          throw InternalError("recursion measure did not decrease");
        }
      }
      std::optional<AlphabetReduction> reduction;
      if (limit) {
        reduction = AlphabetReduction{*limit, phi};
      }
      info.kind               = "peel";
      info.level              = detail::next_level(artifact);
      info.separator          = a.name(c);
      info.k_prefixes         = prefixes;
      info.reduced            = limit.has_value();
      info.local_divisor_size = d.carrier.size();
      info.system             = compose_systems(a, c, r, t, prefixes, reduction, info.level);
      artifact.levels.push_back(info);
      return info.system;
    }
  }  // namespace

  ConstructionArtifact construct_monoid(Alphabet const& a, Homomorphism const& phi,
                                        ConstructionOptions const& options) {
    ConstructionArtifact artifact;
    RecursionNode        root;
    artifact.system    = build_monoid(a, phi, options, artifact, root);
    artifact.recursion = std::move(root);
    return artifact;
  }

}  // namespace prcr
