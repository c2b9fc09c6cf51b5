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

#include "prcr/monoid.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

#include "prcr/errors.hpp"

namespace prcr {

  FiniteMonoid::FiniteMonoid(std::size_t size, Element identity, std::vector<Element> table)
      : _size(size), _identity(identity), _table(std::move(table)) {
    if (_size == 0) {
      throw Error("a monoid has at least one element");
    }
    if (_table.size() != _size * _size) {
      throw Error("multiplication table must have size*size entries");
    }
    if (_identity >= _size) {
      throw Error("identity out of range");
    }
    for (Element x : _table) {
      if (x >= _size) {
        throw Error("table entry " + std::to_string(x) + " out of range");
      }
    }
    for (Element x = 0; x < _size; ++x) {
      if (product(_identity, x) != x || product(x, _identity) != x) {
        throw Error("element " + std::to_string(_identity) + " is not an identity");
      }
    }
    for (Element x = 0; x < _size; ++x) {
      for (Element y = 0; y < _size; ++y) {
        Element xy = product(x, y);
        for (Element z = 0; z < _size; ++z) {
          if (product(xy, z) != product(x, product(y, z))) {
            throw Error("table is not associative at (" + std::to_string(x) + ", "
                        + std::to_string(y) + ", " + std::to_string(z) + ")");
          }
        }
      }
    }
  }

  Element FiniteMonoid::power(Element x, std::size_t k) const {
    Element result = _identity;
    Element base   = x;
    while (k > 0) {
      if (k & 1) {
        result = product(result, base);
      }
      base = product(base, base);
      k >>= 1;
    }
    return result;
  }

  std::optional<Element> FiniteMonoid::inverse(Element x) const {
    for (Element y = 0; y < _size; ++y) {
      if (product(x, y) == _identity && product(y, x) == _identity) {
        return y;
      }
    }
    return std::nullopt;
  }

  IndexPeriod index_and_period(FiniteMonoid const& m, Element g) {
    // first[x] = least k with g^k = x.
    std::vector<std::size_t> first(m.size(), SIZE_MAX);
    Element                  x = m.identity();
    for (std::size_t k = 0;; ++k) {
      if (first[x] != SIZE_MAX) {
        return {first[x], k - first[x]};
      }
      first[x] = k;
      x        = m.product(x, g);
    }
  }

  std::size_t element_order(FiniteMonoid const& m, Element g) {
    return index_and_period(m, g).period;
  }

  std::vector<Element> idempotents(FiniteMonoid const& m) {
    std::vector<Element> result;
    for (Element x = 0; x < m.size(); ++x) {
      if (m.is_idempotent(x)) {
        result.push_back(x);
      }
    }
    return result;
  }

  std::vector<MaximalSubgroup> maximal_subgroups(FiniteMonoid const& m) {
    std::vector<MaximalSubgroup> result;
    for (Element e : idempotents(m)) {
      std::vector<Element> local;
      for (Element x = 0; x < m.size(); ++x) {
        if (m.product(e, m.product(x, e)) == x) {
          local.push_back(x);
        }
      }
      MaximalSubgroup g{e, {}, true};
      for (Element x : local) {
        bool invertible = std::any_of(local.begin(), local.end(), [&](Element y) {
          return m.product(x, y) == e && m.product(y, x) == e;
        });
        if (invertible) {
          g.elements.push_back(x);
        }
      }
      for (Element x : g.elements) {
        for (Element y : g.elements) {
          if (m.product(x, y) != m.product(y, x)) {
            g.abelian = false;
          }
        }
      }
      result.push_back(std::move(g));
    }
    return result;
  }

  bool is_group(FiniteMonoid const& m) {
    for (Element x = 0; x < m.size(); ++x) {
      if (!m.is_unit(x)) {
        return false;
      }
    }
    return true;
  }

  bool is_abelian(FiniteMonoid const& m) {
    for (Element x = 0; x < m.size(); ++x) {
      for (Element y = x + 1; y < m.size(); ++y) {
        if (m.product(x, y) != m.product(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<MaximalSubgroup> non_abelian_subgroup(FiniteMonoid const& m) {
    for (auto& g : maximal_subgroups(m)) {
      if (!g.abelian) {
        return g;
      }
    }
    return std::nullopt;
  }

  bool is_in_Ab_bar(FiniteMonoid const& m) {
    return !non_abelian_subgroup(m).has_value();
  }

  std::size_t exponent(FiniteMonoid const& m) {
    std::size_t result = 1;
    for (Element x = 0; x < m.size(); ++x) {
      result = std::lcm(result, element_order(m, x));
    }
    return result;
  }

  std::optional<Element> Submonoid::local(Element x) const {
    auto it = std::lower_bound(embedding.begin(), embedding.end(), x);
    if (it == embedding.end() || *it != x) {
      return std::nullopt;
    }
    return static_cast<Element>(it - embedding.begin());
  }

  Submonoid generated_submonoid(FiniteMonoid const& m, std::vector<Element> const& generators) {
    std::vector<bool>    seen(m.size(), false);
    std::vector<Element> stack{m.identity()};
    seen[m.identity()] = true;
    while (!stack.empty()) {
      Element x = stack.back();
      stack.pop_back();
      for (Element g : generators) {
        Element y = m.product(x, g);
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    Submonoid sub;
    for (Element x = 0; x < m.size(); ++x) {
      if (seen[x]) {
        sub.embedding.push_back(x);
      }
    }
    std::size_t const    k = sub.embedding.size();
    std::vector<Element> table(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        table[i * k + j] = *sub.local(m.product(sub.embedding[i], sub.embedding[j]));
      }
    }
    sub.monoid = std::make_shared<FiniteMonoid>(k, *sub.local(m.identity()), std::move(table));
    return sub;
  }

  namespace named {
    MonoidPtr cyclic_product(std::size_t n, std::size_t m) {
      if (n == 0 || m == 0) {
        throw Error("cyclic groups need a positive order");
      }
      std::size_t const    size = n * m;
      std::vector<Element> table(size * size);
      for (std::size_t x = 0; x < size; ++x) {
        for (std::size_t y = 0; y < size; ++y) {
          std::size_t first  = (x / m + y / m) % n;
          std::size_t second = (x % m + y % m) % m;
          table[x * size + y] = static_cast<Element>(first * m + second);
        }
      }
      return std::make_shared<FiniteMonoid>(size, 0, std::move(table));
    }

    MonoidPtr cyclic(std::size_t n) {
      return cyclic_product(n, 1);
    }

    MonoidPtr symmetric3() {
      using Perm = std::array<int, 3>;
      std::array<Perm, 6> const perms{
          {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
      std::vector<Element> table(36);
      for (std::size_t x = 0; x < 6; ++x) {
        for (std::size_t y = 0; y < 6; ++y) {
          Perm p;
          for (int i = 0; i < 3; ++i) {
            p[i] = perms[x][perms[y][i]];
          }
          auto it = std::find(perms.begin(), perms.end(), p);
          table[x * 6 + y] = static_cast<Element>(it - perms.begin());
        }
      }
      return std::make_shared<FiniteMonoid>(6, 0, std::move(table));
    }

    MonoidPtr monogenic(std::size_t index, std::size_t period) {
      if (period == 0) {
        throw Error("monogenic monoid needs a positive period");
      }
      std::size_t const    size = index + period;
      std::vector<Element> table(size * size);
      for (std::size_t x = 0; x < size; ++x) {
        for (std::size_t y = 0; y < size; ++y) {
          std::size_t k = x + y;
          if (k >= size) {
            k = index + (k - index) % period;
          }
          table[x * size + y] = static_cast<Element>(k);
        }
      }
      return std::make_shared<FiniteMonoid>(size, 0, std::move(table));
    }

    MonoidPtr with_zero(FiniteMonoid const& group) {
      std::size_t const    size = group.size() + 1;
      Element const        zero = static_cast<Element>(group.size());
      std::vector<Element> table(size * size, zero);
      for (Element x = 0; x < group.size(); ++x) {
        for (Element y = 0; y < group.size(); ++y) {
          table[x * size + y] = group.product(x, y);
        }
      }
      return std::make_shared<FiniteMonoid>(size, group.identity(), std::move(table));
    }

    MonoidPtr idempotent_with_zero() {
      // 0 = 1, 1 = e, 2 = zero.
      return std::make_shared<FiniteMonoid>(
          3, 0, std::vector<Element>{0, 1, 2, 1, 1, 2, 2, 2, 2});
    }

    MonoidPtr left_zero_with_identity(std::size_t k) {
      std::size_t const    size = k + 1;
      std::vector<Element> table(size * size);
      for (std::size_t x = 0; x < size; ++x) {
        for (std::size_t y = 0; y < size; ++y) {
          table[x * size + y] = static_cast<Element>(x == 0 ? y : x);
        }
      }
      return std::make_shared<FiniteMonoid>(size, 0, std::move(table));
    }
  }  // namespace named

  Homomorphism::Homomorphism(MonoidPtr codomain, std::vector<Element> images)
      : _codomain(std::move(codomain)), _images(std::move(images)) {
    for (Element x : _images) {
      if (x >= _codomain->size()) {
        throw Error("letter image " + std::to_string(x) + " out of range");
      }
    }
  }

  Element Homomorphism::image(Letter x) const {
    if (x >= _images.size()) {
      throw Error("letter " + std::to_string(x) + " outside the homomorphism's alphabet");
    }
    return _images[x];
  }

  Element Homomorphism::evaluate(WordView w) const {
    Element result = _codomain->identity();
    for (Letter x : w) {
      result = _codomain->product(result, image(x));
    }
    return result;
  }

  std::pair<Homomorphism, Submonoid> Homomorphism::corestrict() const {
    Submonoid            sub = generated_submonoid(*_codomain, _images);
    std::vector<Element> local;
    for (Element x : _images) {
      local.push_back(*sub.local(x));
    }
    return {Homomorphism(sub.monoid, std::move(local)), std::move(sub)};
  }

  Homomorphism Homomorphism::restrict_to(std::vector<Letter> const& letters) const {
    std::vector<Element> images;
    for (Letter x : letters) {
      images.push_back(image(x));
    }
    return Homomorphism(_codomain, std::move(images));
  }

  std::optional<Element> LocalDivisor::local(Element x) const {
    auto it = std::lower_bound(carrier.begin(), carrier.end(), x);
    if (it == carrier.end() || *it != x) {
      return std::nullopt;
    }
    return static_cast<Element>(it - carrier.begin());
  }

  LocalDivisor local_divisor(MonoidPtr const& m, Element c) {
    FiniteMonoid const& base = *m;
    std::size_t const   size = base.size();
    // left[x] lists the u with u*c = x.
    std::vector<std::vector<Element>> left(size);
    std::vector<bool>                 in_cM(size, false);
    for (Element u = 0; u < size; ++u) {
      left[base.product(u, c)].push_back(u);
      in_cM[base.product(c, u)] = true;
    }
    LocalDivisor d{m, c, {}, nullptr};
    for (Element x = 0; x < size; ++x) {
      if (in_cM[x] && !left[x].empty()) {
        d.carrier.push_back(x);
      }
    }
    std::size_t const    k = d.carrier.size();
    std::vector<Element> table(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      auto const& us = left[d.carrier[i]];
      for (std::size_t j = 0; j < k; ++j) {
        Element y = d.carrier[j];
        Element z = base.product(us.front(), y);
        for (Element u : us) {
          if (base.product(u, y) != z) {
            throw InternalError("local divisor product is not well defined");
          }
        }
        auto local = d.local(z);
        if (!local) {
          throw InternalError("local divisor product leaves the carrier");
        }
        table[i * k + j] = *local;
      }
    }
    auto unit = d.local(c);
    if (!unit) {
      throw InternalError("c is not in its local divisor");
    }
    try {
      d.monoid = std::make_shared<FiniteMonoid>(k, *unit, std::move(table));
    } catch (Error const& e) {
      throw InternalError(std::string("local divisor table: ") + e.what());
    }
    if (!base.is_unit(c) && k >= size) {
      throw InternalError("local divisor at a non-unit is not smaller");
    }
    return d;
  }

  Alphabet MonoidFile::alphabet() const {
    return Alphabet(hom_letters);
  }

  Homomorphism MonoidFile::homomorphism() const {
    if (!has_hom()) {
      throw Error("monoid file has no hom lines");
    }
    return Homomorphism(monoid, hom_images);
  }

  namespace {
    std::size_t parse_natural(std::string const& tok, std::size_t line) {
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char ch) {
            return ch >= '0' && ch <= '9';
          })) {
        throw ParseError("expected a natural number, got \"" + tok + "\"", line);
      }
      try {
        return std::stoull(tok);
      } catch (std::exception const&) {
        throw ParseError("number out of range: " + tok, line);
      }
    }

    MonoidPtr parse_named(std::vector<std::string> const& toks, std::size_t line) {
      // named Z n | named Z n x Z m | named S3 | named monogenic i p
      if (toks.size() == 2 && toks[1] == "S3") {
        return named::symmetric3();
      }
      if (toks.size() == 3 && toks[1] == "Z") {
        return named::cyclic(parse_natural(toks[2], line));
      }
      if (toks.size() == 6 && toks[1] == "Z" && toks[3] == "x" && toks[4] == "Z") {
        return named::cyclic_product(parse_natural(toks[2], line),
                                     parse_natural(toks[5], line));
      }
      if (toks.size() == 4 && toks[1] == "monogenic") {
        return named::monogenic(parse_natural(toks[2], line), parse_natural(toks[3], line));
      }
      throw ParseError("unknown named monoid", line);
    }
  }  // namespace

  MonoidFile parse_monoid(std::istream& in) {
    MonoidFile                file;
    std::optional<std::size_t> size;
    std::optional<Element>     identity;
    std::vector<Element>       table;
    std::size_t                rows = 0;
    std::size_t                line_no = 0;
    for (std::string line; std::getline(in, line);) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream       ls(line);
      std::vector<std::string> toks;
      for (std::string tok; ls >> tok;) {
        toks.push_back(tok);
      }
      if (toks.empty()) {
        continue;
      }
      try {
        if (toks[0] == "size") {
          if (toks.size() != 2 || size || file.monoid) {
            throw ParseError("malformed or repeated size line", line_no);
          }
          size = parse_natural(toks[1], line_no);
          if (*size == 0) {
            throw ParseError("size must be positive", line_no);
          }
        } else if (toks[0] == "identity") {
          if (toks.size() != 2 || identity) {
            throw ParseError("malformed or repeated identity line", line_no);
          }
          identity = static_cast<Element>(parse_natural(toks[1], line_no));
        } else if (toks[0] == "named") {
          if (size || file.monoid) {
            throw ParseError("named monoid conflicts with an explicit table", line_no);
          }
          file.monoid = parse_named(toks, line_no);
        } else if (toks[0] == "hom") {
          if (toks.size() != 3) {
            throw ParseError("expected: hom <letter> <index>", line_no);
          }
          if (!Alphabet::valid_token(toks[1])) {
            throw ParseError("invalid letter token \"" + toks[1] + "\"", line_no);
          }
          if (std::find(file.hom_letters.begin(), file.hom_letters.end(), toks[1])
              != file.hom_letters.end()) {
            throw ParseError("letter \"" + toks[1] + "\" mapped twice", line_no);
          }
          file.hom_letters.push_back(toks[1]);
          file.hom_images.push_back(static_cast<Element>(parse_natural(toks[2], line_no)));
        } else {
          if (!size) {
            throw ParseError("table row before size line", line_no);
          }
          if (toks.size() != *size) {
            throw ParseError("row has " + std::to_string(toks.size()) + " entries, expected "
                                 + std::to_string(*size),
                             line_no);
          }
          if (rows == *size) {
            throw ParseError("too many table rows", line_no);
          }
          for (auto const& tok : toks) {
            table.push_back(static_cast<Element>(parse_natural(tok, line_no)));
          }
          ++rows;
        }
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        throw ParseError(e.what(), line_no);
      }
    }
    if (!file.monoid) {
      if (!size) {
        throw ParseError("missing size line", std::max<std::size_t>(line_no, 1));
      }
      if (!identity) {
        throw ParseError("missing identity line", std::max<std::size_t>(line_no, 1));
      }
      if (rows != *size) {
        throw ParseError("expected " + std::to_string(*size) + " table rows, got "
                             + std::to_string(rows),
                         std::max<std::size_t>(line_no, 1));
      }
      try {
        file.monoid = std::make_shared<FiniteMonoid>(*size, *identity, std::move(table));
      } catch (Error const& e) {
        throw ParseError(e.what(), 0);
      }
    } else if (identity && *identity != file.monoid->identity()) {
      throw ParseError("identity line disagrees with the named monoid", 0);
    }
    for (Element x : file.hom_images) {
      if (x >= file.monoid->size()) {
        throw ParseError("hom image " + std::to_string(x) + " out of range", 0);
      }
    }
    return file;
  }

  MonoidFile parse_monoid(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_monoid(in);
  }

  MonoidFile read_monoid_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open " + path);
    }
    return parse_monoid(in);
  }

  std::string format_monoid(MonoidFile const& file) {
    FiniteMonoid const& m = *file.monoid;
    std::ostringstream  out;
    out << "size " << m.size() << "\nidentity " << m.identity() << '\n';
    for (Element x = 0; x < m.size(); ++x) {
      for (Element y = 0; y < m.size(); ++y) {
        out << (y == 0 ? "" : " ") << m.product(x, y);
      }
      out << '\n';
    }
    for (std::size_t i = 0; i < file.hom_letters.size(); ++i) {
      out << "hom " << file.hom_letters[i] << ' ' << file.hom_images[i] << '\n';
    }
    return out.str();
  }

}  // namespace prcr
