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

#include "prcr/words.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "prcr/errors.hpp"

namespace prcr {

  Alphabet::Alphabet(std::vector<std::string> names) : _names(std::move(names)) {
    for (std::size_t i = 0; i < _names.size(); ++i) {
      if (!valid_token(_names[i])) {
        throw Error("invalid letter token \"" + _names[i] + "\"");
      }
      auto [it, fresh] = _index.emplace(_names[i], static_cast<Letter>(i));
      if (!fresh) {
        throw Error("duplicate letter \"" + _names[i] + "\"");
      }
    }
  }

  Alphabet Alphabet::numbered(std::string_view prefix, std::size_t size) {
    std::vector<std::string> names;
    names.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
      names.push_back(std::string(prefix) + std::to_string(i));
    }
    return Alphabet(std::move(names));
  }

  bool Alphabet::valid_token(std::string_view token) noexcept {
    return !token.empty()
           && std::all_of(token.begin(), token.end(), [](char ch) {
                return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
              });
  }

  std::optional<Letter> Alphabet::find(std::string_view token) const {
    auto it = _index.find(std::string(token));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Letter Alphabet::letter(std::string_view token) const {
    if (auto x = find(token)) {
      return *x;
    }
    throw Error("letter \"" + std::string(token) + "\" is not in the alphabet");
  }

  Word Alphabet::parse_word(std::string_view text) const {
    std::vector<std::string> tokens;
    std::istringstream       in{std::string(text)};
    for (std::string tok; in >> tok;) {
      tokens.push_back(tok);
    }
    Word w;
    if (tokens.size() == 1 && !find(tokens[0])) {
      for (char ch : tokens[0]) {
        w.push_back(letter(std::string_view(&ch, 1)));
      }
      return w;
    }
    for (auto const& tok : tokens) {
      w.push_back(letter(tok));
    }
    return w;
  }

  std::string Alphabet::format(WordView w) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += name(w[i]);
    }
    return out;
  }

  bool Alphabet::contains(WordView w) const noexcept {
    return std::all_of(
        w.begin(), w.end(), [this](Letter x) { return x < _names.size(); });
  }

  Word concat(WordView u, WordView v) {
    Word w;
    w.reserve(u.size() + v.size());
    w.insert(w.end(), u.begin(), u.end());
    w.insert(w.end(), v.begin(), v.end());
    return w;
  }

  Word power(WordView u, std::size_t k) {
    Word w;
    w.reserve(u.size() * k);
    for (std::size_t i = 0; i < k; ++i) {
      w.insert(w.end(), u.begin(), u.end());
    }
    return w;
  }

  ParikhVector parikh(WordView w, std::size_t alphabet_size) {
    ParikhVector counts(alphabet_size, 0);
    for (Letter x : w) {
      ++counts.at(x);
    }
    return counts;
  }

  bool parikh_strictly_below(ParikhVector const& x, ParikhVector const& y) {
    bool strict = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] > y[i]) {
        return false;
      }
      strict = strict || x[i] < y[i];
    }
    return strict;
  }

  WeightFunction::WeightFunction(std::vector<std::uint64_t> weights)
      : _weights(std::move(weights)) {
    if (std::any_of(_weights.begin(), _weights.end(), [](auto x) { return x == 0; })) {
      throw Error("weights must be strictly positive");
    }
  }

  std::uint64_t WeightFunction::operator()(WordView w) const {
    std::uint64_t total = 0;
    for (Letter x : w) {
      total += _weights.at(x);
    }
    return total;
  }

  std::vector<std::size_t> border_array(WordView w) {
    std::vector<std::size_t> border(w.size(), 0);
    std::size_t              k = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
      while (k > 0 && w[i] != w[k]) {
        k = border[k - 1];
      }
      if (w[i] == w[k]) {
        ++k;
      }
      border[i] = k;
    }
    return border;
  }

  std::size_t smallest_period(WordView w) {
    if (w.empty()) {
      throw Error("empty word has no period");
    }
    return w.size() - border_array(w).back();
  }

  bool has_period(WordView w, std::size_t p) noexcept {
    for (std::size_t i = 0; i + p < w.size(); ++i) {
      if (w[i] != w[i + p]) {
        return false;
      }
    }
    return true;
  }

  std::optional<std::size_t> find_factor(WordView u, WordView w, std::size_t from) {
    if (u.empty()) {
      return from <= w.size() ? std::optional<std::size_t>(from) : std::nullopt;
    }
    auto const  border = border_array(u);
    std::size_t k      = 0;
    for (std::size_t i = from; i < w.size(); ++i) {
      while (k > 0 && w[i] != u[k]) {
        k = border[k - 1];
      }
      if (w[i] == u[k]) {
        ++k;
      }
      if (k == u.size()) {
        return i + 1 - u.size();
      }
    }
    return std::nullopt;
  }

  bool is_primitive(WordView u) {
    if (u.empty()) {
      throw Error("empty word has no primitive root");
    }
    Word uu = concat(u, u);
    // Search u in uu with the first and last letter removed: any hit is an
    // occurrence strictly between 0 and |u|.
    WordView inner(uu.data() + 1, uu.size() - 2);
    return !find_factor(u, inner).has_value();
  }

  bool is_factor(WordView u, WordView w) {
    return find_factor(u, w).has_value();
  }

  bool is_prefix(WordView u, WordView w) noexcept {
    return u.size() <= w.size() && std::equal(u.begin(), u.end(), w.begin());
  }

  bool is_suffix(WordView u, WordView w) noexcept {
    return u.size() <= w.size() && std::equal(u.rbegin(), u.rend(), w.rbegin());
  }

  bool is_subword(WordView u, WordView w) noexcept {
    std::size_t i = 0;
    for (std::size_t j = 0; j < w.size() && i < u.size(); ++j) {
      if (u[i] == w[j]) {
        ++i;
      }
    }
    return i == u.size();
  }

  bool factors_of_power_membership(WordView w, std::size_t n) {
    if (n == 0) {
      throw Error("factor-of-power membership needs n >= 1");
    }
    return w.empty() || smallest_period(w) <= n;
  }

  bool fine_wilf_check(WordView w, std::size_t p, std::size_t q) {
    if (p == 0 || q == 0) {
      throw Error("periods must be positive");
    }
    std::size_t g       = std::gcd(p, q);
    bool        premise = has_period(w, p) && has_period(w, q) && w.size() + g >= p + q;
    return !premise || has_period(w, g);
  }

  std::size_t WordHash::operator()(Word const& w) const noexcept {
    std::size_t h = w.size();
    for (Letter x : w) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

}  // namespace prcr
