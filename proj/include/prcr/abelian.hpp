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

// Church-Rosser systems for homomorphisms into finite abelian groups, built
// letter by letter: the last letter c is peeled off, the remaining alphabet
// is handled recursively, and the words between separators c become the
// letters of a new alphabet K carrying delta and omega rules.

#ifndef PRCR_ABELIAN_HPP_
#define PRCR_ABELIAN_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "prcr/construction.hpp"
#include "prcr/lifted.hpp"
#include "prcr/monoid.hpp"
#include "prcr/repetition_marker.hpp"

namespace prcr {

  // t = 3n(s + 4) + n
  std::size_t abelian_t(std::size_t n, std::size_t s);
  // t0 = (t + n + 3)(n + 1)
  std::size_t abelian_t0(std::size_t n, std::size_t t);

  ConstructionArtifact construct_abelian(Alphabet const& a, Homomorphism const& phi,
                                         ConstructionOptions const& options = {});

  // Only the delta rules d^(t+n) -> d^t, |d| <= n, over k letters.
  SchemaPtr delta_schema(Alphabet const& k, std::size_t n, std::size_t t);

  // The rules of one family of a repetition-marker schema.
  class FamilyFilter final : public RuleSchema {
   public:
    FamilyFilter(std::shared_ptr<DeltaOmegaSchema const> schema, RuleFamily family);

    void             collect_redexes(WordView w, std::vector<Redex>& out) const override;
    std::string_view kind() const noexcept override {
      return "family";
    }
    bool equals(RuleSchema const& other) const override;

   private:
    std::shared_ptr<DeltaOmegaSchema const> _schema;
    RuleFamily                              _family;
  };

  std::shared_ptr<LiftedSchema> compose_systems(Alphabet const& a, Letter c, SchemaPtr r,
                                                SchemaPtr t, std::vector<Word> prefixes,
                                                std::optional<AlphabetReduction> reduction = {},
                                                std::size_t level = 0);

  // |B*/R| + |B*/R|^2 |K*/T|
  BigNat index_formula(BigNat const& r_index, BigNat const& t_index);

  namespace detail {
    SchemaPtr build_abelian(Alphabet const& a, Homomorphism const& phi,
                            ConstructionOptions const& options, ConstructionArtifact& artifact);
    std::size_t next_level(ConstructionArtifact const& artifact);
  }  // namespace detail

}  // namespace prcr

#endif  // PRCR_ABELIAN_HPP_
