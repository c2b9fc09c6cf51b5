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

#include "prcr/sampling.hpp"

#include "prcr/errors.hpp"

namespace prcr {

  Word random_word(std::mt19937_64& rng, std::size_t alphabet_size, std::size_t len) {
    if (alphabet_size == 0) {
      throw Error("cannot sample over an empty alphabet");
    }
    std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(alphabet_size - 1));
    Word                                  w(len);
    for (auto& x : w) {
      x = letter(rng);
    }
    return w;
  }

  // Start from a random marker and replace it by the largest marker of the
  // candidate until nothing larger appears; ranks only grow, so this stops.
  Word omega_instance(DeltaOmegaSchema const& s, std::mt19937_64& rng, std::size_t u_len) {
    std::size_t const k = s.alphabet().size();
    std::size_t const m = s.params().marker;
    Word              eta;
    for (std::size_t tries = 0;; ++tries) {
      eta = random_word(rng, k, m);
      if (s.is_marker(eta)) {
        break;
      }
      if (tries > 100'000) {
        throw Error("no markers found");
      }
    }
    Word u = random_word(rng, k, u_len);
    for (;;) {
      Word w    = concat(concat(eta, u), eta);
      Word best = eta;
      for (std::size_t q : s.marker_positions(w)) {
        WordView x(w.data() + q, m);
        if (s.compare_markers(x, best) > 0) {
          best.assign(x.begin(), x.end());
        }
      }
      if (best == eta) {
        return w;
      }
      eta = std::move(best);
    }
  }

  namespace {

    Word sample_level(RuleSchema const& s, std::mt19937_64& rng, std::size_t target);

    Word sample_delta_omega(DeltaOmegaSchema const& s, std::mt19937_64& rng,
                            std::size_t target) {
      auto const&       p = s.params();
      std::size_t const k = s.alphabet().size();
      Word              w;
      while (w.size() < target) {
        Word piece;
        switch (rng() % 3) {
          case 0:
            piece = random_word(rng, k, 1 + rng() % 8);
            break;
          case 1: {
            Word        d = random_word(rng, k, 1 + rng() % p.period);
            std::size_t r = p.t - 2 + rng() % (2 * p.n + 6);
            piece         = power(d, r);
            break;
          }
          default:
            // Total K-length t - 2 .. 2t + 6 around the window boundary.
            piece = omega_instance(s, rng, p.t - 2 * p.marker - 2 + rng() % (p.t + 8));
            break;
        }
        w.insert(w.end(), piece.begin(), piece.end());
      }
      return w;
    }

    Word sample_lifted(LiftedSchema const& s, std::mt19937_64& rng, std::size_t target) {
      std::size_t const k = s.alphabet().size();
      if (rng() % 5 == 0) {
        return random_word(rng, k, rng() % (target + 1));
      }
      double mean = 1.0;
      for (auto const& x : s.prefixes()) {
        mean += static_cast<double>(x.size()) / static_cast<double>(s.prefixes().size());
      }
      auto kw = sample_level(*s.inner(), rng, static_cast<std::size_t>(target / mean) + 1);
      Word w  = random_word(rng, k, rng() % 3);
      w.push_back(s.separator());
      auto e = s.expand(kw);
      w.insert(w.end(), e.begin(), e.end());
      std::size_t noise = rng() % 4;
      for (std::size_t i = 0; i < noise; ++i) {
        w.insert(w.begin() + static_cast<std::ptrdiff_t>(rng() % (w.size() + 1)),
                 static_cast<Letter>(rng() % k));
      }
      return w;
    }

    Word sample_level(RuleSchema const& s, std::mt19937_64& rng, std::size_t target) {
      if (auto const* l = dynamic_cast<LiftedSchema const*>(&s)) {
        return sample_lifted(*l, rng, target);
      }
      if (auto const* d = dynamic_cast<DeltaOmegaSchema const*>(&s)) {
        return sample_delta_omega(*d, rng, target);
      }
      return random_word(rng, s.alphabet().size(), rng() % (target + 1));
    }

  }  // namespace

  WordSampler schema_sampler(SchemaPtr s, std::size_t max_len) {
    return [s = std::move(s), max_len](std::mt19937_64& rng) {
      Word w = sample_level(*s, rng, max_len);
      if (w.size() > max_len) {
        std::size_t start = rng() % (w.size() - max_len + 1);
        w                 = Word(w.begin() + static_cast<std::ptrdiff_t>(start),
                                 w.begin() + static_cast<std::ptrdiff_t>(start + max_len));
      }
      return w;
    };
  }

  std::pair<LiftedSchema const*, DeltaOmegaSchema const*> delta_omega_level(RuleSchema const& s) {
    auto const* l = dynamic_cast<LiftedSchema const*>(&s);
    if (l == nullptr) {
      return {nullptr, nullptr};
    }
    if (auto const* d = dynamic_cast<DeltaOmegaSchema const*>(l->inner().get())) {
      return {l, d};
    }
    return delta_omega_level(*l->inner());
  }

}  // namespace prcr
