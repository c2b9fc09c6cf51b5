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

// Words over finite alphabets and the combinatorics-on-words primitives the
// rewriting machinery is built on: periods, borders, primitivity, factors,
// subwords, Parikh vectors and weights.
//
// Letters are atoms: a letter is an index into an ordered Alphabet, and the
// alphabet stores a printable token per letter. Letters of derived alphabets
// are themselves words over some base alphabet, which is why a word is never
// a std::string.

#ifndef PRCR_WORDS_HPP_
#define PRCR_WORDS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace prcr {

  using Letter   = std::uint32_t;
  using Word     = std::vector<Letter>;
  using WordView = std::span<Letter const>;

  // Letter counts indexed by letter.
  using ParikhVector = std::vector<std::size_t>;

  class Alphabet {
   public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    // Tokens "l0", "l1", ... with the given prefix.
    static Alphabet numbered(std::string_view prefix, std::size_t size);

    std::size_t size() const noexcept {
      return _names.size();
    }

    bool empty() const noexcept {
      return _names.empty();
    }

    std::string const& name(Letter x) const {
      return _names.at(x);
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::optional<Letter> find(std::string_view token) const;
    Letter                letter(std::string_view token) const;

    // Whitespace separated atoms. As a convenience a single token that is
    // not itself a letter is split into characters when every character is.
    Word parse_word(std::string_view text) const;

    // Space separated atoms; the empty word prints as "".
    std::string format(WordView w) const;

    bool contains(WordView w) const noexcept;

    friend bool operator==(Alphabet const& x, Alphabet const& y) {
      return x._names == y._names;
    }

    static bool valid_token(std::string_view token) noexcept;

   private:
    std::vector<std::string>                     _names;
    std::unordered_map<std::string, Letter>      _index;
  };

  Word concat(WordView u, WordView v);
  Word power(WordView u, std::size_t k);

  ParikhVector parikh(WordView w, std::size_t alphabet_size);

  // x <= y componentwise and x != y.
  bool parikh_strictly_below(ParikhVector const& x, ParikhVector const& y);

  class WeightFunction {
   public:
    explicit WeightFunction(std::vector<std::uint64_t> weights);

    std::uint64_t operator()(WordView w) const;

    std::size_t size() const noexcept {
      return _weights.size();
    }

   private:
    std::vector<std::uint64_t> _weights;
  };

  // Failure function: entry i is the length of the longest proper border of
  // w[0..i].
  std::vector<std::size_t> border_array(WordView w);

  // Least p >= 1 with w[i] == w[i + p] for all valid i. Throws on the empty
  // word.
  std::size_t smallest_period(WordView w);

  bool has_period(WordView w, std::size_t p) noexcept;

  // u is primitive iff it occurs in uu only at positions 0 and |u|. Throws on
  // the empty word.
  bool is_primitive(WordView u);

  // First occurrence of u in w at or after `from`, or nullopt.
  std::optional<std::size_t> find_factor(WordView u, WordView w,
                                         std::size_t from = 0);

  bool is_factor(WordView u, WordView w);
  bool is_prefix(WordView u, WordView w) noexcept;
  bool is_suffix(WordView u, WordView w) noexcept;
  // u is a scattered subword of w.
  bool is_subword(WordView u, WordView w) noexcept;

  // Membership in F = union of Factors(d^i) over all non-empty words d of
  // length <= n. Since that set of d is factor closed this is equivalent to
  // smallest_period(w) <= n. The empty word is a member.
  bool factors_of_power_membership(WordView w, std::size_t n);

  // Instance of the Fine-Wilf theorem; true on every input.
  bool fine_wilf_check(WordView w, std::size_t p, std::size_t q);

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept;
  };

}  // namespace prcr

#endif  // PRCR_WORDS_HPP_
