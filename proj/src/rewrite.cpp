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

#include "prcr/rewrite.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "prcr/errors.hpp"

namespace prcr {

  std::string_view family_name(RuleFamily f) noexcept {
    switch (f) {
      case RuleFamily::explicit_rule:
        return "R";
      case RuleFamily::reduction:
        return "reduce";
      case RuleFamily::delta:
        return "T_delta";
      case RuleFamily::omega:
        return "T_omega";
    }
    return "?";
  }

  Strategy Strategy::parse(std::string_view name, std::uint64_t seed) {
    if (name == "leftmost_shortest" || name == "leftmost-shortest") {
      return {StrategyKind::leftmost_shortest, seed};
    }
    if (name == "leftmost_longest" || name == "leftmost-longest") {
      return {StrategyKind::leftmost_longest, seed};
    }
    if (name == "rightmost") {
      return {StrategyKind::rightmost, seed};
    }
    if (name == "random") {
      return {StrategyKind::random, seed};
    }
    throw Error("unknown strategy \"" + std::string(name) + "\"");
  }

  std::string Strategy::name() const {
    switch (kind) {
      case StrategyKind::leftmost_shortest:
        return "leftmost_shortest";
      case StrategyKind::leftmost_longest:
        return "leftmost_longest";
      case StrategyKind::rightmost:
        return "rightmost";
      case StrategyKind::random:
        return "random";
    }
    return "?";
  }

  bool RuleSchema::is_reducible(WordView w) const {
    std::vector<Redex> out;
    collect_redexes(w, out);
    return !out.empty();
  }

  RewriteSystem::RewriteSystem(Alphabet alphabet, std::vector<Rule> rules, std::size_t level)
      : RuleSchema(std::move(alphabet)), _rules(std::move(rules)), _level(level) {
    std::set<std::pair<Word, Word>> seen;
    std::vector<Word>               lhs;
    for (auto const& r : _rules) {
      if (r.lhs.empty()) {
        throw Error("rule with empty left side");
      }
      if (r.lhs == r.rhs) {
        throw Error("rule with equal sides");
      }
      if (!this->alphabet().contains(r.lhs) || !this->alphabet().contains(r.rhs)) {
        throw Error("rule letter outside the alphabet");
      }
      if (!seen.emplace(r.lhs, r.rhs).second) {
        throw Error("duplicate rule " + this->alphabet().format(r.lhs) + " -> "
                    + this->alphabet().format(r.rhs));
      }
      lhs.push_back(r.lhs);
    }
    _automaton = std::make_shared<FactorAutomaton>(this->alphabet().size(), lhs);
  }

  std::size_t RewriteSystem::max_lhs_length() const noexcept {
    std::size_t m = 0;
    for (auto const& r : _rules) {
      m = std::max(m, r.lhs.size());
    }
    return m;
  }

  void RewriteSystem::collect_redexes(WordView w, std::vector<Redex>& out) const {
    auto s = _automaton->initial();
    for (std::size_t i = 0; i < w.size(); ++i) {
      s = _automaton->next(s, w[i]);
      for (std::uint32_t p : _automaton->outputs(s)) {
        Rule const& rule = _rules[p];
        Redex       r;
        r.pos       = i + 1 - rule.lhs.size();
        r.len       = rule.lhs.size();
        r.family    = RuleFamily::explicit_rule;
        r.level     = _level;
        r.order     = p;
        r.lhs_local = rule.lhs.size();
        r.rhs       = [&rule] { return Rhs{rule.rhs, rule.rhs.size()}; };
        out.push_back(std::move(r));
      }
    }
  }

  bool RewriteSystem::is_reducible(WordView w) const {
    auto s = _automaton->initial();
    for (Letter x : w) {
      s = _automaton->next(s, x);
      if (_automaton->forbidden(s)) {
        return true;
      }
    }
    return false;
  }

  bool RewriteSystem::equals(RuleSchema const& other) const {
    auto const* o = dynamic_cast<RewriteSystem const*>(&other);
    return o != nullptr && alphabet() == o->alphabet() && _rules == o->_rules
           && _level == o->_level;
  }

  RewriteSystem make_system(Alphabet const&                                       alphabet,
                            std::vector<std::pair<std::string, std::string>> const& rules) {
    std::vector<Rule> parsed;
    for (auto const& [l, r] : rules) {
      parsed.push_back({alphabet.parse_word(l), alphabet.parse_word(r)});
    }
    return RewriteSystem(alphabet, std::move(parsed));
  }

  std::size_t choose_redex(std::vector<Redex> const& redexes, Strategy const& strategy,
                           std::mt19937_64& rng) {
    if (redexes.empty()) {
      throw Error("no redex to choose from");
    }
    auto key = [&](Redex const& r) {
      switch (strategy.kind) {
        case StrategyKind::leftmost_longest:
          return std::make_tuple(r.pos, SIZE_MAX - r.len, r.order);
        case StrategyKind::rightmost:
          return std::make_tuple(SIZE_MAX - r.pos, r.len, r.order);
        default:
          return std::make_tuple(r.pos, r.len, r.order);
      }
    };
    if (strategy.kind == StrategyKind::random) {
      return std::uniform_int_distribution<std::size_t>(0, redexes.size() - 1)(rng);
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < redexes.size(); ++i) {
      if (key(redexes[i]) < key(redexes[best])) {
        best = i;
      }
    }
    return best;
  }

  namespace {
    Word splice(WordView w, std::size_t pos, std::size_t len, WordView rhs) {
      Word out;
      out.reserve(w.size() - len + rhs.size());
      out.insert(out.end(), w.begin(), w.begin() + pos);
      out.insert(out.end(), rhs.begin(), rhs.end());
      out.insert(out.end(), w.begin() + pos + len, w.end());
      return out;
    }
  }  // namespace

  std::optional<Word> rewrite_step(RuleSchema const& sys, WordView w, Strategy const& strategy) {
    std::vector<Redex> redexes;
    sys.collect_redexes(w, redexes);
    if (redexes.empty()) {
      return std::nullopt;
    }
    std::mt19937_64 rng(strategy.seed);
    Redex const&    r = redexes[choose_redex(redexes, strategy, rng)];
    return splice(w, r.pos, r.len, r.rhs().word);
  }

  Word normal_form(RuleSchema const& sys, WordView w, Strategy const& strategy,
                   NormalFormOptions const& options) {
    std::mt19937_64    rng(strategy.seed);
    Word               current(w.begin(), w.end());
    std::vector<Redex> redexes;
    std::size_t const  n = sys.alphabet().size();
    for (std::uint64_t step = 0;; ++step) {
      redexes.clear();
      sys.collect_redexes(current, redexes);
      if (redexes.empty()) {
        return current;
      }
      if (step >= options.budget) {
        throw BudgetExhausted("budget exhausted after " + std::to_string(step) + " steps");
      }
      Redex const& r   = redexes[choose_redex(redexes, strategy, rng)];
      Rhs          rhs = r.rhs();
      WordView     lhs(current.data() + r.pos, r.len);
      if (options.verify_parikh
          && !parikh_strictly_below(parikh(rhs.word, n), parikh(lhs, n))) {
        throw InternalError("rule application is not Parikh-reducing: "
                            + sys.alphabet().format(lhs) + " -> "
                            + sys.alphabet().format(rhs.word));
      }
      if (options.observer) {
        options.observer(StepInfo{step, current, r, rhs});
      }
      current = splice(current, r.pos, r.len, rhs.word);
    }
  }

  std::vector<CriticalPair> critical_pairs(RewriteSystem const& sys) {
    std::vector<CriticalPair> pairs;
    auto const&               rules = sys.rules();
    for (std::size_t i = 0; i < rules.size(); ++i) {
      Word const& l1 = rules[i].lhs;
      for (std::size_t j = 0; j < rules.size(); ++j) {
        Word const& l2 = rules[j].lhs;
        // Proper overlaps: a suffix of l1 equals a prefix of l2.
        for (std::size_t k = 1; k < std::min(l1.size(), l2.size()); ++k) {
          if (!std::equal(l1.end() - k, l1.end(), l2.begin())) {
            continue;
          }
          CriticalPair cp;
          cp.source      = PairSource::overlap;
          cp.first_rule  = i;
          cp.second_rule = j;
          cp.offset      = l1.size() - k;
          cp.witness     = concat(l1, WordView(l2).subspan(k));
          cp.left        = concat(rules[i].rhs, WordView(l2).subspan(k));
          cp.right       = concat(WordView(l1).first(l1.size() - k), rules[j].rhs);
          pairs.push_back(std::move(cp));
        }
        // l2 occurs inside l1.
        if (i == j || l2.size() > l1.size()) {
          continue;
        }
        for (std::size_t p = 0; p + l2.size() <= l1.size(); ++p) {
          if (!std::equal(l2.begin(), l2.end(), l1.begin() + p)) {
            continue;
          }
          CriticalPair cp;
          cp.source      = PairSource::factor;
          cp.first_rule  = i;
          cp.second_rule = j;
          cp.offset      = p;
          cp.witness     = l1;
          cp.left        = rules[i].rhs;
          cp.right       = Word(l1.begin(), l1.begin() + p);
          cp.right.insert(cp.right.end(), rules[j].rhs.begin(), rules[j].rhs.end());
          cp.right.insert(cp.right.end(), l1.begin() + p + l2.size(), l1.end());
          pairs.push_back(std::move(cp));
        }
      }
    }
    return pairs;
  }

  ConfluenceReport is_locally_confluent(RewriteSystem const& sys, Strategy const& strategy,
                                        std::uint64_t budget) {
    ConfluenceReport  report;
    NormalFormOptions options;
    options.budget = budget;
    for (auto& cp : critical_pairs(sys)) {
      ++report.pairs;
      Word l = normal_form(sys, cp.left, strategy, options);
      Word r = normal_form(sys, cp.right, strategy, options);
      if (l != r) {
        report.confluent         = false;
        report.left_normal_form  = std::move(l);
        report.right_normal_form = std::move(r);
        report.counterexample    = std::move(cp);
        return report;
      }
    }
    return report;
  }

  bool is_parikh_reducing(Rule const& rule, std::size_t alphabet_size) {
    return parikh_strictly_below(parikh(rule.rhs, alphabet_size),
                                 parikh(rule.lhs, alphabet_size));
  }

  Classification classify(RewriteSystem const& sys) {
    Classification c;
    for (auto const& r : sys.rules()) {
      c.parikh_reducing  = c.parikh_reducing && is_parikh_reducing(r, sys.alphabet().size());
      c.subword_reducing = c.subword_reducing && r.rhs != r.lhs && is_subword(r.rhs, r.lhs);
      c.length_reducing  = c.length_reducing && r.rhs.size() < r.lhs.size();
    }
    return c;
  }

  bool is_weight_reducing(RewriteSystem const& sys, WeightFunction const& f) {
    return std::all_of(sys.rules().begin(), sys.rules().end(),
                       [&](Rule const& r) { return f(r.rhs) < f(r.lhs); });
  }

  bool check_invariance(RewriteSystem const& sys, Homomorphism const& h,
                        std::vector<Word> const& expansion) {
    auto value = [&](Word const& w) {
      if (expansion.empty()) {
        return h.evaluate(w);
      }
      Element x = h.monoid().identity();
      for (Letter k : w) {
        x = h.monoid().product(x, h.evaluate(expansion.at(k)));
      }
      return x;
    };
    return std::all_of(sys.rules().begin(), sys.rules().end(),
                       [&](Rule const& r) { return value(r.lhs) == value(r.rhs); });
  }

  WordSampler uniform_sampler(std::size_t alphabet_size, std::size_t min_len,
                              std::size_t max_len) {
    if (alphabet_size == 0 && max_len > 0) {
      throw Error("cannot sample non-empty words over an empty alphabet");
    }
    return [=](std::mt19937_64& rng) {
      std::size_t len = std::uniform_int_distribution<std::size_t>(min_len, max_len)(rng);
      std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(alphabet_size - 1));
      Word w(len);
      for (auto& x : w) {
        x = letter(rng);
      }
      return w;
    };
  }

  InvarianceReport check_invariance_sampled(RuleSchema const& sys, Homomorphism const& h,
                                            WordSampler const& sampler, std::size_t samples,
                                            std::uint64_t seed, std::uint64_t budget) {
    InvarianceReport  report;
    std::mt19937_64   rng(seed);
    NormalFormOptions options;
    options.budget        = budget;
    options.verify_parikh = true;
    options.observer      = [&](StepInfo const& s) {
      ++report.applications;
      WordView lhs = s.before.subspan(s.redex.pos, s.redex.len);
      if (report.invariant && h.evaluate(lhs) != h.evaluate(s.rhs.word)) {
        report.invariant = false;
        report.lhs       = Word(lhs.begin(), lhs.end());
        report.rhs       = s.rhs.word;
      }
    };
    for (std::size_t i = 0; i < samples && report.invariant; ++i) {
      Word w = sampler(rng);
      normal_form(sys, w, Strategy{StrategyKind::random, rng()}, options);
    }
    return report;
  }

  EnumerationResult enumerate_irreducible(RewriteSystem const& sys, std::size_t max_len) {
    FactorAutomaton const& fa = sys.automaton();
    std::size_t const      k  = sys.alphabet().size();
    std::vector<BigNat>    counts(fa.state_count(), 0);
    counts[fa.initial()] = 1;
    BigNat total         = 1;
    BigNat at_length     = 1;
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<BigNat> next(fa.state_count(), 0);
      for (std::size_t s = 0; s < counts.size(); ++s) {
        if (counts[s] == 0) {
          continue;
        }
        for (Letter x = 0; x < k; ++x) {
          auto t = fa.next(static_cast<FactorAutomaton::State>(s), x);
          if (!fa.forbidden(t)) {
            next[t] += counts[s];
          }
        }
      }
      counts    = std::move(next);
      at_length = 0;
      for (auto const& c : counts) {
        at_length += c;
      }
      if (at_length == 0) {
        break;
      }
      total += at_length;
    }
    return {total, at_length == 0};
  }

  std::vector<Word> list_irreducible(RuleSchema const& sys, std::size_t max_len,
                                     std::size_t limit) {
    std::vector<Word> result{Word{}};
    std::size_t       layer_begin = 0;
    std::size_t const k           = sys.alphabet().size();
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::size_t const layer_end = result.size();
      for (std::size_t i = layer_begin; i < layer_end; ++i) {
        for (Letter x = 0; x < k; ++x) {
          Word w = result[i];
          w.push_back(x);
          if (!sys.is_reducible(w)) {
            if (result.size() >= limit) {
              throw BudgetExhausted("more than " + std::to_string(limit)
                                    + " irreducible words");
            }
            result.push_back(std::move(w));
          }
        }
      }
      if (result.size() == layer_end) {
        break;
      }
      layer_begin = layer_end;
    }
    return result;
  }

  SamplingReport confluence_sampling(RuleSchema const& sys, WordSampler const& sampler,
                                     std::size_t trials, std::vector<Strategy> const& strategies,
                                     std::uint64_t seed, NormalFormOptions const& options) {
    SamplingReport  report;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < trials; ++i) {
      Word              w = sampler(rng);
      std::vector<Word> forms;
      for (auto s : strategies) {
        if (s.kind == StrategyKind::random) {
          s.seed = rng();
        }
        forms.push_back(normal_form(sys, w, s, options));
      }
      ++report.trials;
      for (std::size_t j = 1; j < forms.size(); ++j) {
        if (forms[j] != forms[0]) {
          report.ok             = false;
          report.counterexample = std::move(w);
          report.normal_forms   = std::move(forms);
          for (auto const& s : strategies) {
            report.strategies.push_back(s.name());
          }
          return report;
        }
      }
    }
    return report;
  }

}  // namespace prcr
