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

// Independent verifiers on explicit systems: the xyz -> max(x, z) family,
// the composition index formula, the short-word lower bound and finite
// quotient audits.

#ifndef PRCR_ORACLE_HPP_
#define PRCR_ORACLE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "prcr/lifted.hpp"
#include "prcr/monoid.hpp"
#include "prcr/rewrite.hpp"

namespace prcr {

  // Rules xyz -> max(x, z) for y = min(x, y, z) over m letters named
  // "1".."m" (or `names`, listed in increasing order).
  RewriteSystem niemann_waldmann(std::size_t m, std::vector<std::string> names = {});

  // (2^(2m+1) + 1) / 3
  BigNat niemann_waldmann_index(std::size_t m);

  enum class Verdict : std::uint8_t { pass, fail, inconclusive };

  std::string_view verdict_name(Verdict v) noexcept;

  struct LowerBoundReport {
    Verdict     verdict = Verdict::pass;
    // Explicit systems: shortest lhs; schemas: shortest reducible word
    // found, or 0 if none.
    std::size_t shortest = 0;
    std::string detail;
  };

  // Every word of length < n is irreducible. For explicit systems this is
  // "every lhs has length >= n", plus the count bound
  // |A*/S| >= (|A|^n - 1)/(|A| - 1) when the index is enumerable within
  // max_len.
  LowerBoundReport check_lower_bound(RuleSchema const& sys, std::size_t n,
                                     std::size_t max_len = 24);

  // R over B and T over K = { x c : x in `prefixes` } lifted into the explicit
  // system R + { c l' -> c r' } over A = B + {c} (c appended last).
  RewriteSystem lift_explicit(RewriteSystem const& r, RewriteSystem const& t,
                              std::vector<Word> const& prefixes, std::string const& c);

  struct IndexFormulaReport {
    Verdict     verdict = Verdict::inconclusive;
    BigNat      r_index;
    BigNat      t_index;
    BigNat      expected;
    BigNat      actual;
    std::string reason;
  };

  // Checks the hypotheses (Parikh-reducing, locally confluent, K = IRR_R(B*)c
  // listed completely) and then compares the enumerated index of the
  // composition with |B*/R| + |B*/R|^2 |K*/T|. If T's alphabet is smaller
  // than the prefix list, or the prefixes are not IRR_R(B*), the result is
  // fail.
  IndexFormulaReport check_index_formula(RewriteSystem const& r, RewriteSystem const& t,
                                         std::vector<Word> const& prefixes,
                                         std::string const& c = "c", std::size_t max_len = 24);
  // Same, for a given composed system S over B + {c} in place of the lifted
  // rules.
  IndexFormulaReport check_index_formula(RewriteSystem const& r, RewriteSystem const& t,
                                         std::vector<Word> const& prefixes,
                                         RewriteSystem const& s, std::size_t max_len = 24);

  struct QuotientMonoid {
    MonoidPtr         monoid;
    // Element i is the class of elements[i]; element 0 is the empty word.
    std::vector<Word> elements;
  };

  // A*/S for a confluent system of finite index, multiplying normal forms.
  QuotientMonoid quotient_monoid(RuleSchema const& sys, std::size_t max_len = 24);

  struct SubgroupAuditEntry {
    Word        idempotent;
    std::size_t order;
    bool        abelian;
  };

  std::vector<SubgroupAuditEntry> subgroup_audit(RuleSchema const& sys, std::size_t max_len = 24);

}  // namespace prcr

#endif  // PRCR_ORACLE_HPP_
