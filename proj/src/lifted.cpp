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

#include "prcr/lifted.hpp"

#include <algorithm>

#include "prcr/errors.hpp"

namespace prcr {

  Word shorten_prefix(Homomorphism const& hom, WordView x, std::size_t limit) {
    std::size_t const    k = x.size();
    std::vector<Element> value(k + 1);
    value[0] = hom.monoid().identity();
    for (std::size_t i = 0; i < k; ++i) {
      value[i + 1] = hom.monoid().product(value[i], hom.image(x[i]));
    }
    std::optional<std::pair<std::size_t, std::size_t>> fallback;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j <= k; ++j) {
        if (value[i] != value[j]) {
          continue;
        }
        if (i + (k - j) <= limit) {
          Word out(x.begin(), x.begin() + i);
          out.insert(out.end(), x.begin() + j, x.end());
          return out;
        }
        if (!fallback) {
          fallback = {i, j};
        }
      }
    }
    if (!fallback) {
      throw InternalError("no repeated prefix image to shorten");
    }
    Word out(x.begin(), x.begin() + fallback->first);
    out.insert(out.end(), x.begin() + fallback->second, x.end());
    return out;
  }

  Alphabet remove_letter(Alphabet const& a, Letter c) {
    std::vector<std::string> names;
    for (Letter x = 0; x < a.size(); ++x) {
      if (x != c) {
        names.push_back(a.name(x));
      }
    }
    return Alphabet(std::move(names));
  }

  LiftedSchema::LiftedSchema(Alphabet a, Letter separator, SchemaPtr base,
                             std::vector<Word> prefixes, std::optional<AlphabetReduction> reduction,
                             SchemaPtr inner, std::size_t level)
      : RuleSchema(std::move(a)),
        _separator(separator),
        _base(std::move(base)),
        _prefixes(std::move(prefixes)),
        _reduction(std::move(reduction)),
        _inner(std::move(inner)),
        _level(level) {
    if (_separator >= alphabet().size()) {
      throw Error("separator outside the alphabet");
    }
    if (!_base || !_inner) {
      throw Error("lifted schema needs both a base and an inner system");
    }
    if (!(_base->alphabet() == remove_letter(alphabet(), _separator))) {
      throw Error("base alphabet must be the alphabet without the separator");
    }
    if (_inner->alphabet().size() != _prefixes.size()) {
      throw Error("inner alphabet size must equal the number of K-letters");
    }
    _a_to_b.assign(alphabet().size(), UINT32_MAX);
    for (Letter x = 0; x < alphabet().size(); ++x) {
      if (x != _separator) {
        _a_to_b[x] = static_cast<Letter>(_b_letters.size());
        _b_letters.push_back(x);
      }
    }
    for (std::size_t k = 0; k < _prefixes.size(); ++k) {
      auto const& p = _prefixes[k];
      if (!alphabet().contains(p)
          || std::find(p.begin(), p.end(), _separator) != p.end()) {
        throw Error("K-letter prefixes must be words over the base alphabet");
      }
      if (!_k_index.emplace(p, static_cast<Letter>(k)).second) {
        throw Error("duplicate K-letter");
      }
    }
    if (_reduction) {
      if (_reduction->hom.alphabet_size() != alphabet().size()) {
        throw Error("reduction homomorphism must be defined on the full alphabet");
      }
    }
  }

  std::optional<Letter> LiftedSchema::k_letter(WordView prefix) const {
    auto it = _k_index.find(Word(prefix.begin(), prefix.end()));
    if (it == _k_index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Word LiftedSchema::expand_letter(Letter k) const {
    Word w = _prefixes.at(k);
    w.push_back(_separator);
    return w;
  }

  Word LiftedSchema::expand(WordView kword) const {
    Word w;
    for (Letter k : kword) {
      auto const& p = _prefixes.at(k);
      w.insert(w.end(), p.begin(), p.end());
      w.push_back(_separator);
    }
    return w;
  }

  Word LiftedSchema::to_base(WordView a_word) const {
    Word w(a_word.size());
    for (std::size_t i = 0; i < a_word.size(); ++i) {
      w[i] = _a_to_b.at(a_word[i]);
    }
    return w;
  }

  Word LiftedSchema::from_base(WordView b_word) const {
    Word w(b_word.size());
    for (std::size_t i = 0; i < b_word.size(); ++i) {
      w[i] = _b_letters.at(b_word[i]);
    }
    return w;
  }

  void LiftedSchema::collect_redexes(WordView w, std::vector<Redex>& out) const {
    std::vector<std::size_t> seps;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == _separator) {
        seps.push_back(i);
      }
    }
    // Block j spans [start(j), end(j)); block 0 precedes the first c.
    auto start = [&](std::size_t j) { return j == 0 ? 0 : seps[j - 1] + 1; };
    auto end   = [&](std::size_t j) { return j < seps.size() ? seps[j] : w.size(); };

    std::vector<Redex>  inner;
    // k_of[j] = K-letter of block j (1 <= j < #seps), or UINT32_MAX.
    std::vector<Letter> k_of(seps.size() + 1, UINT32_MAX);
    for (std::size_t j = 0; j <= seps.size(); ++j) {
      std::size_t const s = start(j);
      std::size_t const e = end(j);
      Word              b = to_base(w.subspan(s, e - s));
      inner.clear();
      _base->collect_redexes(b, inner);
      for (auto& r : inner) {
        r.pos += s;
        r.rhs = [this, f = std::move(r.rhs)] {
          Rhs rhs  = f();
          rhs.word = from_base(rhs.word);
          return rhs;
        };
        out.push_back(std::move(r));
      }
      if (j == 0 || j == seps.size() || !inner.empty()) {
        continue;
      }
      WordView x = w.subspan(s, e - s);
      if (_reduction && x.size() > _reduction->limit) {
        Redex r;
        r.pos       = s - 1;
        r.len       = x.size() + 2;
        r.family    = RuleFamily::reduction;
        r.level     = _level;
        r.lhs_local = r.len;
        r.rhs       = [this, x = Word(x.begin(), x.end())] {
          Word rhs{_separator};
          Word y = shorten_prefix(_reduction->hom, x, _reduction->limit);
          rhs.insert(rhs.end(), y.begin(), y.end());
          rhs.push_back(_separator);
          return Rhs{rhs, rhs.size()};
        };
        out.push_back(std::move(r));
        continue;
      }
      auto k = k_letter(x);
      if (!k) {
        throw InternalError("irreducible block " + alphabet().format(x) + " is not a K-letter");
      }
      k_of[j] = *k;
    }
    // Maximal runs of K-letters.
    for (std::size_t j = 1; j < seps.size();) {
      if (k_of[j] == UINT32_MAX) {
        ++j;
        continue;
      }
      std::size_t const first = j;
      Word              kw;
      while (j < seps.size() && k_of[j] != UINT32_MAX) {
        kw.push_back(k_of[j]);
        ++j;
      }
      inner.clear();
      _inner->collect_redexes(kw, inner);
      for (auto& r : inner) {
        // K-letter first + r.pos is block first + r.pos, whose anchor c is
        // seps[first + r.pos - 1].
        std::size_t const a_begin = seps[first + r.pos - 1];
        std::size_t const a_end   = seps[first + r.pos + r.len - 1] + 1;
        r.pos                     = a_begin;
        r.len                     = a_end - a_begin;
        r.rhs                     = [this, f = std::move(r.rhs)] {
          Rhs  rhs = f();
          Word a{_separator};
          Word e = expand(rhs.word);
          a.insert(a.end(), e.begin(), e.end());
          return Rhs{std::move(a), rhs.local_length};
        };
        out.push_back(std::move(r));
      }
    }
  }

  bool LiftedSchema::equals(RuleSchema const& other) const {
    auto const* o = dynamic_cast<LiftedSchema const*>(&other);
    if (o == nullptr || !(alphabet() == o->alphabet()) || _separator != o->_separator
        || _prefixes != o->_prefixes || _level != o->_level
        || _reduction.has_value() != o->_reduction.has_value()) {
      return false;
    }
    if (_reduction
        && (_reduction->limit != o->_reduction->limit
            || _reduction->hom.images() != o->_reduction->hom.images()
            || !(_reduction->hom.monoid() == o->_reduction->hom.monoid()))) {
      return false;
    }
    return _base->equals(*o->_base) && _inner->equals(*o->_inner);
  }

  std::vector<Word> materialize_prefixes(RuleSchema const& base, std::vector<Letter> const& b_letters,
                                         std::optional<std::size_t> limit, std::size_t cap,
                                         std::size_t max_len) {
    std::vector<Word> words;
    if (limit) {
      words = list_irreducible(base, *limit, cap);
    } else {
      words = list_irreducible(base, max_len + 1, cap);
      if (!words.empty() && words.back().size() > max_len) {
        throw Error("irreducible language of the base system is not materializable (words "
                    "longer than "
                    + std::to_string(max_len) + ")");
      }
    }
    for (auto& w : words) {
      for (auto& x : w) {
        x = b_letters.at(x);
      }
    }
    return words;
  }

}  // namespace prcr
