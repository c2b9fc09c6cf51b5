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

// Finite monoids given by multiplication tables, homomorphisms from free
// monoids into them, local divisors and maximal subgroups.

#ifndef PRCR_MONOID_HPP_
#define PRCR_MONOID_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prcr/words.hpp"

namespace prcr {

  using Element = std::uint32_t;

  class FiniteMonoid {
   public:
    // Row x of `table` holds the products x*y. The table is checked for
    // range, identity and associativity (cubic in the size).
    FiniteMonoid(std::size_t size, Element identity, std::vector<Element> table);

    std::size_t size() const noexcept {
      return _size;
    }

    Element identity() const noexcept {
      return _identity;
    }

    Element product(Element x, Element y) const {
      return _table[x * _size + y];
    }

    std::vector<Element> const& table() const noexcept {
      return _table;
    }

    Element power(Element x, std::size_t k) const;

    bool is_idempotent(Element x) const {
      return product(x, x) == x;
    }

    std::optional<Element> inverse(Element x) const;

    bool is_unit(Element x) const {
      return inverse(x).has_value();
    }

    friend bool operator==(FiniteMonoid const& x, FiniteMonoid const& y) {
      return x._size == y._size && x._identity == y._identity && x._table == y._table;
    }

   private:
    std::size_t          _size;
    Element              _identity;
    std::vector<Element> _table;
  };

  using MonoidPtr = std::shared_ptr<FiniteMonoid const>;

  // Least k >= 1 such that g^k equals the idempotent power of g. For group
  // elements this is the usual order.
  std::size_t element_order(FiniteMonoid const& m, Element g);

  // Index i and period p of the monogenic submonoid generated by g:
  // g^(i+p) = g^i with i, p least.
  struct IndexPeriod {
    std::size_t index;
    std::size_t period;
  };
  IndexPeriod index_and_period(FiniteMonoid const& m, Element g);

  std::vector<Element> idempotents(FiniteMonoid const& m);

  struct MaximalSubgroup {
    Element              idempotent;
    std::vector<Element> elements;
    bool                 abelian;
  };

  // One entry per idempotent e: the group of units of eMe.
  std::vector<MaximalSubgroup> maximal_subgroups(FiniteMonoid const& m);

  bool is_group(FiniteMonoid const& m);
  bool is_abelian(FiniteMonoid const& m);
  bool is_in_Ab_bar(FiniteMonoid const& m);
  std::optional<MaximalSubgroup> non_abelian_subgroup(FiniteMonoid const& m);

  // Least common multiple of the element orders.
  std::size_t exponent(FiniteMonoid const& m);

  // Submonoid generated by `generators`: the monoid on the generated elements
  // (in increasing order of the original index) and the embedding into `m`.
  struct Submonoid {
    MonoidPtr            monoid;
    std::vector<Element> embedding;

    std::optional<Element> local(Element x) const;
  };
  Submonoid generated_submonoid(FiniteMonoid const& m, std::vector<Element> const& generators);

  namespace named {
    MonoidPtr cyclic(std::size_t n);
    MonoidPtr cyclic_product(std::size_t n, std::size_t m);
    // Permutations of {0,1,2}; element 0 is the identity, 1 = (0 1) and
    // 3 = (0 1 2).
    MonoidPtr symmetric3();
    // {1, x, ..., x^(i+p-1)} with x^(i+p) = x^i; element k is x^k.
    MonoidPtr monogenic(std::size_t index, std::size_t period);
    // `group` with an adjoined zero; the zero is the last element.
    MonoidPtr with_zero(FiniteMonoid const& group);
    // {1, e, 0}: e idempotent, 0 absorbing.
    MonoidPtr idempotent_with_zero();
    // Left-zero semigroup on k elements with an adjoined identity (element 0).
    MonoidPtr left_zero_with_identity(std::size_t k);
  }  // namespace named

  class Homomorphism {
   public:
    Homomorphism(MonoidPtr codomain, std::vector<Element> images);

    std::size_t alphabet_size() const noexcept {
      return _images.size();
    }

    MonoidPtr const& codomain() const noexcept {
      return _codomain;
    }

    FiniteMonoid const& monoid() const noexcept {
      return *_codomain;
    }

    Element image(Letter x) const;

    std::vector<Element> const& images() const noexcept {
      return _images;
    }

    Element evaluate(WordView w) const;

    // The homomorphism onto phi(A*) together with the embedding.
    std::pair<Homomorphism, Submonoid> corestrict() const;

    // Restriction to the letters listed (in that order).
    Homomorphism restrict_to(std::vector<Letter> const& letters) const;

   private:
    MonoidPtr            _codomain;
    std::vector<Element> _images;
  };

  // The local divisor M_c = cM ∩ Mc with uc ∘ cv = ucv and unit c. Elements
  // of `monoid` index into `carrier`.
  struct LocalDivisor {
    MonoidPtr            base;
    Element              c;
    std::vector<Element> carrier;
    MonoidPtr            monoid;

    std::optional<Element> local(Element x) const;
    Element                to_base(Element local_element) const {
      return carrier.at(local_element);
    }
  };

  LocalDivisor local_divisor(MonoidPtr const& m, Element c);

  // Contents of a .mon file.
  struct MonoidFile {
    MonoidPtr            monoid;
    std::vector<std::string> hom_letters;
    std::vector<Element>     hom_images;

    bool has_hom() const noexcept {
      return !hom_letters.empty();
    }
    Alphabet     alphabet() const;
    Homomorphism homomorphism() const;
  };

  MonoidFile  parse_monoid(std::istream& in);
  MonoidFile  parse_monoid(std::string_view text);
  MonoidFile  read_monoid_file(std::string const& path);
  std::string format_monoid(MonoidFile const& file);

}  // namespace prcr

#endif  // PRCR_MONOID_HPP_
