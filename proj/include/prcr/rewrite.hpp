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

// String-rewriting systems. A RuleSchema is anything that can list the
// redexes of a word; RewriteSystem is the explicit finite case. Rewriting,
// normal forms and sampling work on any schema, while critical pairs,
// classification and irreducible counting need an explicit system.

#ifndef PRCR_REWRITE_HPP_
#define PRCR_REWRITE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "prcr/factor_automaton.hpp"
#include "prcr/monoid.hpp"
#include "prcr/words.hpp"

namespace prcr {

  using BigNat = boost::multiprecision::cpp_int;

  struct Rule {
    Word lhs;
    Word rhs;

    friend bool operator==(Rule const&, Rule const&) = default;
  };

  enum class RuleFamily : std::uint8_t { explicit_rule, reduction, delta, omega };

  std::string_view family_name(RuleFamily f) noexcept;

  struct Rhs {
    Word        word;
    // Length counted in the letters of the level that produced the rule.
    std::size_t local_length;
  };

  // One applicable rule instance: w[pos, pos + len) may be replaced by rhs().
  struct Redex {
    std::size_t           pos       = 0;
    std::size_t           len       = 0;
    RuleFamily            family    = RuleFamily::explicit_rule;
    std::size_t           level     = 0;
    // Tie-break among redexes at the same place; rule index for explicit
    // rules.
    std::size_t           order     = 0;
    std::size_t           lhs_local = 0;
    std::function<Rhs()>  rhs;
  };

  enum class StrategyKind : std::uint8_t {
    leftmost_shortest,
    leftmost_longest,
    rightmost,
    random
  };

  struct Strategy {
    StrategyKind  kind = StrategyKind::leftmost_shortest;
    std::uint64_t seed = 0;

    static Strategy parse(std::string_view name, std::uint64_t seed = 0);
    std::string     name() const;
  };

  class RuleSchema {
   public:
    explicit RuleSchema(Alphabet alphabet) : _alphabet(std::move(alphabet)) {}
    virtual ~RuleSchema() = default;

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }

    // Appends every redex of w.
    virtual void collect_redexes(WordView w, std::vector<Redex>& out) const = 0;

    virtual bool is_reducible(WordView w) const;

    virtual std::string_view kind() const noexcept = 0;

    virtual bool equals(RuleSchema const& other) const = 0;

    std::vector<Redex> redexes(WordView w) const {
      std::vector<Redex> out;
      collect_redexes(w, out);
      return out;
    }

   protected:
    RuleSchema(RuleSchema const&)            = default;
    RuleSchema& operator=(RuleSchema const&) = default;

   private:
    Alphabet _alphabet;
  };

  using SchemaPtr = std::shared_ptr<RuleSchema const>;

  class RewriteSystem final : public RuleSchema {
   public:
    RewriteSystem(Alphabet alphabet, std::vector<Rule> rules, std::size_t level = 0);

    std::vector<Rule> const& rules() const noexcept {
      return _rules;
    }

    std::size_t size() const noexcept {
      return _rules.size();
    }

    std::size_t level() const noexcept {
      return _level;
    }

    FactorAutomaton const& automaton() const noexcept {
      return *_automaton;
    }

    std::size_t max_lhs_length() const noexcept;

    void             collect_redexes(WordView w, std::vector<Redex>& out) const override;
    bool             is_reducible(WordView w) const override;
    std::string_view kind() const noexcept override {
      return "explicit";
    }
    bool equals(RuleSchema const& other) const override;

   private:
    std::vector<Rule>                _rules;
    std::size_t                      _level;
    std::shared_ptr<FactorAutomaton> _automaton;
  };

  using SystemPtr = std::shared_ptr<RewriteSystem const>;

  // Parses "lhs -> rhs" pairs given as word strings.
  RewriteSystem make_system(Alphabet const& alphabet,
                            std::vector<std::pair<std::string, std::string>> const& rules);

  std::size_t choose_redex(std::vector<Redex> const& redexes, Strategy const& strategy,
                           std::mt19937_64& rng);

  std::optional<Word> rewrite_step(RuleSchema const& sys, WordView w,
                                   Strategy const& strategy = {});

  struct StepInfo {
    std::size_t  step;
    WordView     before;
    Redex const& redex;
    Rhs const&   rhs;
  };

  struct NormalFormOptions {
    std::uint64_t                          budget = 10'000'000;
    // Throw InternalError on any step that is not Parikh-reducing.
    bool                                   verify_parikh = false;
    std::function<void(StepInfo const&)>   observer;
  };

  Word normal_form(RuleSchema const& sys, WordView w, Strategy const& strategy = {},
                   NormalFormOptions const& options = {});

  enum class PairSource : std::uint8_t { overlap, factor };

  struct CriticalPair {
    Word        left;
    Word        right;
    PairSource  source;
    Word        witness;
    std::size_t first_rule;
    std::size_t second_rule;
    // Position of the second rule's lhs inside the witness.
    std::size_t offset;
  };

  std::vector<CriticalPair> critical_pairs(RewriteSystem const& sys);

  struct ConfluenceReport {
    bool                        confluent = true;
    std::size_t                 pairs     = 0;
    std::optional<CriticalPair> counterexample;
    Word                        left_normal_form;
    Word                        right_normal_form;
  };

  ConfluenceReport is_locally_confluent(RewriteSystem const& sys, Strategy const& strategy = {},
                                        std::uint64_t budget = 10'000'000);

  struct Classification {
    bool parikh_reducing  = true;
    bool subword_reducing = true;
    bool length_reducing  = true;
  };

  bool           is_parikh_reducing(Rule const& rule, std::size_t alphabet_size);
  Classification classify(RewriteSystem const& sys);
  bool           is_weight_reducing(RewriteSystem const& sys, WeightFunction const& f);

  // Exact check that every rule's sides have equal image. `expansion` maps
  // the system's letters to words over the homomorphism's alphabet; empty
  // means the identity.
  bool check_invariance(RewriteSystem const& sys, Homomorphism const& h,
                        std::vector<Word> const& expansion = {});

  using WordSampler = std::function<Word(std::mt19937_64&)>;

  // Uniform random words with length uniform in [min_len, max_len].
  WordSampler uniform_sampler(std::size_t alphabet_size, std::size_t min_len, std::size_t max_len);

  struct InvarianceReport {
    bool                       invariant = true;
    std::size_t                applications = 0;
    std::optional<Word>        lhs;
    std::optional<Word>        rhs;
  };

  // Sampled check over the rule applications met while normalizing sampled
  // words; also verifies that every application is Parikh-reducing.
  InvarianceReport check_invariance_sampled(RuleSchema const& sys, Homomorphism const& h,
                                            WordSampler const& sampler, std::size_t samples,
                                            std::uint64_t seed, std::uint64_t budget = 10'000'000);

  struct EnumerationResult {
    BigNat count;
    bool   complete;
  };

  // Irreducible words of length <= max_len, counted through the automaton.
  EnumerationResult enumerate_irreducible(RewriteSystem const& sys, std::size_t max_len);

  // Irreducible words of length <= max_len in shortlex order; throws
  // BudgetExhausted beyond `limit` words.
  std::vector<Word> list_irreducible(RuleSchema const& sys, std::size_t max_len,
                                     std::size_t limit = 1'000'000);

  struct SamplingReport {
    bool                ok = true;
    std::size_t         trials = 0;
    std::optional<Word> counterexample;
    std::vector<Word>   normal_forms;
    std::vector<std::string> strategies;
  };

  SamplingReport confluence_sampling(RuleSchema const& sys, WordSampler const& sampler,
                                     std::size_t trials, std::vector<Strategy> const& strategies,
                                     std::uint64_t seed, NormalFormOptions const& options = {});

}  // namespace prcr

#endif  // PRCR_REWRITE_HPP_
