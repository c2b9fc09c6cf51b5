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

#include "prcr/oracle.hpp"

#include <algorithm>
#include <map>

#include "prcr/abelian.hpp"
#include "prcr/errors.hpp"

namespace prcr {

  RewriteSystem niemann_waldmann(std::size_t m, std::vector<std::string> names) {
    if (m == 0) {
      throw Error("the system needs at least one letter");
    }
    if (names.empty()) {
      for (std::size_t i = 1; i <= m; ++i) {
        names.push_back(std::to_string(i));
      }
    }
    if (names.size() != m) {
      throw Error("expected " + std::to_string(m) + " letter names");
    }
    std::vector<Rule> rules;
    for (Letter x = 0; x < m; ++x) {
      for (Letter y = 0; y < m; ++y) {
        for (Letter z = 0; z < m; ++z) {
          if (y <= x && y <= z) {
            rules.push_back({Word{x, y, z}, Word{std::max(x, z)}});
          }
        }
      }
    }
    return RewriteSystem(Alphabet(std::move(names)), std::move(rules));
  }

  BigNat niemann_waldmann_index(std::size_t m) {
    return ((BigNat(1) << (2 * m + 1)) + 1) / 3;
  }

  std::string_view verdict_name(Verdict v) noexcept {
    switch (v) {
      case Verdict::pass:
        return "pass";
      case Verdict::fail:
        return "fail";
      case Verdict::inconclusive:
        return "inconclusive";
    }
    return "?";
  }

  LowerBoundReport check_lower_bound(RuleSchema const& sys, std::size_t n, std::size_t max_len) {
    LowerBoundReport  report;
    std::size_t const k = sys.alphabet().size();
    if (auto const* e = dynamic_cast<RewriteSystem const*>(&sys)) {
      std::size_t shortest = SIZE_MAX;
      for (auto const& r : e->rules()) {
        shortest = std::min(shortest, r.lhs.size());
      }
      report.shortest = shortest == SIZE_MAX ? 0 : shortest;
      if (shortest != SIZE_MAX && shortest < n) {
        report.verdict = Verdict::fail;
        report.detail  = "a left side has length " + std::to_string(shortest);
        return report;
      }
      auto count = enumerate_irreducible(*e, max_len);
      if (count.complete) {
        BigNat bound = 0;
        BigNat p     = 1;
        for (std::size_t i = 0; i < n; ++i) {
          bound += p;
          p *= k;
        }
        if (count.count < bound) {
          report.verdict = Verdict::fail;
          report.detail  = "index " + count.count.str() + " below " + bound.str();
        }
      }
      return report;
    }
    // Schemas: test A^{<n} directly, shortest words first.
    std::vector<Word> layer{Word{}};
    for (std::size_t len = 1; len < n; ++len) {
      std::vector<Word> next;
      for (auto const& w : layer) {
        for (Letter x = 0; x < k; ++x) {
          Word v = w;
          v.push_back(x);
          if (sys.is_reducible(v)) {
            report.verdict  = Verdict::fail;
            report.shortest = len;
            report.detail   = "reducible word " + sys.alphabet().format(v);
            return report;
          }
          next.push_back(std::move(v));
        }
      }
      layer = std::move(next);
    }
    return report;
  }

  RewriteSystem lift_explicit(RewriteSystem const& r, RewriteSystem const& t,
                              std::vector<Word> const& prefixes, std::string const& c) {
    std::vector<std::string> names = r.alphabet().names();
    names.push_back(c);
    Letter const sep = static_cast<Letter>(names.size() - 1);
    if (t.alphabet().size() != prefixes.size()) {
      throw Error("T's alphabet must have one letter per prefix");
    }
    auto expand = [&](Word const& kw) {
      Word w{sep};
      for (Letter x : kw) {
        w.insert(w.end(), prefixes[x].begin(), prefixes[x].end());
        w.push_back(sep);
      }
      return w;
    };
    std::vector<Rule> rules = r.rules();
    for (auto const& rule : t.rules()) {
      rules.push_back({expand(rule.lhs), expand(rule.rhs)});
    }
    return RewriteSystem(Alphabet(std::move(names)), std::move(rules));
  }

  IndexFormulaReport check_index_formula(RewriteSystem const& r, RewriteSystem const& t,
                                         std::vector<Word> const& prefixes, std::string const& c,
                                         std::size_t max_len) {
    if (prefixes.size() != t.alphabet().size()) {
      IndexFormulaReport report;
      report.verdict = Verdict::fail;
      report.reason  = "T's alphabet does not match the K-letters";
      return report;
    }
    return check_index_formula(r, t, prefixes, lift_explicit(r, t, prefixes, c), max_len);
  }

  IndexFormulaReport check_index_formula(RewriteSystem const& r, RewriteSystem const& t,
                                         std::vector<Word> const& prefixes,
                                         RewriteSystem const& s, std::size_t max_len) {
    IndexFormulaReport report;
    auto               fail = [&](std::string reason) {
      report.verdict = Verdict::fail;
      report.reason  = std::move(reason);
      return report;
    };
    if (prefixes.size() != t.alphabet().size()) {
      return fail("T's alphabet does not match the K-letters");
    }
    if (!classify(r).parikh_reducing) {
      return fail("R is not Parikh-reducing");
    }
    // T is measured over A: every K-letter contributes its prefix and one c.
    for (auto const& rule : t.rules()) {
      std::size_t const        nb = r.alphabet().size();
      std::vector<std::size_t> lhs(nb + 1, 0);
      std::vector<std::size_t> rhs(nb + 1, 0);
      for (Letter x : rule.lhs) {
        for (Letter b : prefixes.at(x)) {
          ++lhs[b];
        }
        ++lhs[nb];
      }
      for (Letter x : rule.rhs) {
        for (Letter b : prefixes.at(x)) {
          ++rhs[b];
        }
        ++rhs[nb];
      }
      if (!parikh_strictly_below(rhs, lhs)) {
        return fail("T is not Parikh-reducing over A");
      }
    }
    if (!is_locally_confluent(r).confluent) {
      return fail("R is not locally confluent");
    }
    if (!is_locally_confluent(t).confluent) {
      return fail("T is not locally confluent");
    }
    auto r_count = enumerate_irreducible(r, max_len);
    auto t_count = enumerate_irreducible(t, max_len);
    if (!r_count.complete || !t_count.complete) {
      report.reason = "index of R or T not enumerable within length " + std::to_string(max_len);
      return report;
    }
    auto irr = list_irreducible(r, max_len);
    if (irr != prefixes) {
      return fail("prefixes are not the R-irreducible words in shortlex order");
    }
    if (s.alphabet().size() != r.alphabet().size() + 1) {
      return fail("composed system is not over B plus one letter");
    }
    if (!classify(s).parikh_reducing) {
      return fail("composed system is not Parikh-reducing");
    }
    if (!is_locally_confluent(s).confluent) {
      return fail("composed system is not locally confluent");
    }
    // S must present the same congruence as the lifted rules.
    RewriteSystem lifted = lift_explicit(r, t, prefixes, s.alphabet().names().back());
    if (!is_locally_confluent(lifted).confluent) {
      return fail("lifted system is not locally confluent");
    }
    auto presents = [](RewriteSystem const& x, RewriteSystem const& y) {
      return std::all_of(y.rules().begin(), y.rules().end(), [&](Rule const& rule) {
        return normal_form(x, rule.lhs) == normal_form(x, rule.rhs);
      });
    };
    if (!presents(s, lifted) || !presents(lifted, s)) {
      return fail("composed system does not generate the lifted congruence");
    }
    report.r_index  = r_count.count;
    report.t_index  = t_count.count;
    report.expected = index_formula(r_count.count, t_count.count);
    // Longest irreducible word: u0 c (K-word) u1.
    std::size_t longest_r = irr.empty() ? 0 : irr.back().size();
    std::size_t longest_k = 0;
    for (auto const& p : prefixes) {
      longest_k = std::max(longest_k, p.size() + 1);
    }
    std::size_t longest_t = list_irreducible(t, max_len).back().size();
    std::size_t bound     = 2 * longest_r + 1 + longest_t * longest_k;
    auto        s_count   = enumerate_irreducible(s, bound + 1);
    if (!s_count.complete) {
      return fail("composed system has irreducible words longer than " + std::to_string(bound));
    }
    report.actual  = s_count.count;
    report.verdict = report.actual == report.expected ? Verdict::pass : Verdict::fail;
    if (report.verdict == Verdict::fail) {
      report.reason = "index " + report.actual.str() + " differs from " + report.expected.str();
    }
    return report;
  }


  QuotientMonoid quotient_monoid(RuleSchema const& sys, std::size_t max_len) {
    auto words = list_irreducible(sys, max_len + 1);
    if (!words.empty() && words.back().size() > max_len) {
      throw Error("index not enumerable within length " + std::to_string(max_len));
    }
    std::map<Word, Element> index;
    for (std::size_t i = 0; i < words.size(); ++i) {
      index.emplace(words[i], static_cast<Element>(i));
    }
    std::size_t const    size = words.size();
    std::vector<Element> table(size * size);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        Word nf = normal_form(sys, concat(words[i], words[j]));
        auto it = index.find(nf);
        if (it == index.end()) {
          throw InternalError("normal form outside the enumerated irreducibles");
        }
        table[i * size + j] = it->second;
      }
    }
    QuotientMonoid q;
    q.monoid   = std::make_shared<FiniteMonoid>(size, 0, std::move(table));
    q.elements = std::move(words);
    return q;
  }

  std::vector<SubgroupAuditEntry> subgroup_audit(RuleSchema const& sys, std::size_t max_len) {
    QuotientMonoid                  q = quotient_monoid(sys, max_len);
    std::vector<SubgroupAuditEntry> out;
    for (auto const& g : maximal_subgroups(*q.monoid)) {
      out.push_back({q.elements[g.idempotent], g.elements.size(), g.abelian});
    }
    return out;
  }

}  // namespace prcr
