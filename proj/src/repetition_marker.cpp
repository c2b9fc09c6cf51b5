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

#include "prcr/repetition_marker.hpp"

#include <algorithm>
#include <numeric>

#include "prcr/errors.hpp"

namespace prcr {

  namespace {
    int moebius(std::size_t n) {
      int result = 1;
      for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
          n /= p;
          if (n % p == 0) {
            return 0;
          }
          result = -result;
        }
      }
      return n > 1 ? -result : result;
    }

    BigNat pow_big(std::size_t base, std::size_t exp) {
      BigNat result = 1;
      for (std::size_t i = 0; i < exp; ++i) {
        result *= base;
      }
      return result;
    }
  }  // namespace

  BigNat primitive_word_count(std::size_t d, std::size_t k) {
    boost::multiprecision::cpp_int total = 0;
    for (std::size_t e = 1; e <= d; ++e) {
      if (d % e == 0) {
        total += moebius(e) * pow_big(k, d / e);
      }
    }
    return total;
  }

  BigNat omega_count_formula(std::size_t k, std::size_t m, std::size_t p) {
    if (m < 2 * p) {
      throw Error("marker length must be at least twice the period bound");
    }
    if (k == 0 || m == 0) {
      return 0;
    }
    // With m >= 2p every word of period <= p has a unique primitive root of
    // length <= p; letters are symmetric, so a fraction (k-1)/k of those
    // roots avoid the separator as first letter.
    BigNat periodic = 0;
    for (std::size_t d = 1; d <= p; ++d) {
      periodic += primitive_word_count(d, k) / k * (k - 1);
    }
    return pow_big(k, m - 1) * (k - 1) - periodic;
  }

  BigNat omega_count_enumerated(std::size_t k, std::size_t m, std::size_t p) {
    if (pow_big(k, m) > (BigNat(1) << 24)) {
      throw Error("too many windows to enumerate");
    }
    if (k == 0 || m == 0) {
      return 0;
    }
    std::size_t count = 0;
    Word        w(m, 0);
    w[0] = 1;
    if (k == 1) {
      return 0;
    }
    while (true) {
      if (smallest_period(w) > p) {
        ++count;
      }
      std::size_t i = m;
      while (i > 0) {
        --i;
        if (++w[i] < k) {
          break;
        }
        w[i] = 0;
        if (i == 0) {
          return count;
        }
      }
      if (w[0] == 0) {
        return count;
      }
    }
  }

  BigNat omega_count(std::size_t k, std::size_t m, std::size_t p) {
    BigNat formula = omega_count_formula(k, m, p);
    if (pow_big(k, m) <= (BigNat(1) << 24)) {
      BigNat counted = omega_count_enumerated(k, m, p);
      if (counted != formula) {
        throw InternalError("marker count formula disagrees with enumeration");
      }
    }
    return formula;
  }

  OmegaCeiling OmegaCeiling::make(BigNat omega_count, std::size_t t0, std::size_t t,
                                  bool relaxed) {
    OmegaCeiling c;
    c.omega_count = omega_count;
    c.relaxed     = relaxed;
    if (omega_count <= 4096) {
      c.t_omega = (BigNat(1) << static_cast<unsigned>(omega_count)) * (t0 + t) - t;
    }
    return c;
  }

  bool OmegaCeiling::admits(std::size_t length) const {
    return relaxed || !t_omega || BigNat(length) <= *t_omega;
  }

  std::string OmegaCeiling::describe() const {
    if (relaxed) {
      return "unbounded (relaxed)";
    }
    if (t_omega) {
      return t_omega->str();
    }
    return "2^" + omega_count.str() + "*(t0+t)-t";
  }

  bool GroupNormalForm::operator==(GroupNormalForm const& other) const {
    return *group == *other.group && values == other.values
           && representatives == other.representatives;
  }

  DeltaOmegaSchema::DeltaOmegaSchema(Unchecked, Alphabet k, DeltaOmegaParams params,
                                     OmegaCeiling ceiling, NormalFormSpec normal_form,
                                     std::size_t level)
      : RuleSchema(std::move(k)),
        _params(params),
        _ceiling(std::move(ceiling)),
        _nf(std::move(normal_form)),
        _level(level) {
    if (_params.separator >= alphabet().size()) {
      throw Error("separator letter outside the alphabet");
    }
    if (_params.n == 0 || _params.period == 0 || _params.marker == 0) {
      throw Error("repetition-marker parameters must be positive");
    }
    if (auto const* a = std::get_if<AbelianNormalForm>(&_nf)) {
      if (a->counts.size() != alphabet().size()) {
        throw Error("letter counts must cover every K-letter");
      }
      if (a->orders.empty() || a->powers.size() + 1 != a->orders.size()) {
        throw Error("normal form orders and powers disagree");
      }
      for (auto const& row : a->counts) {
        if (row.size() != a->orders.size()) {
          throw Error("letter count row has the wrong size");
        }
      }
      for (std::size_t i = 0; i < a->powers.size(); ++i) {
        if (a->orders[i] == 0 || a->powers[i].size() + 1 != a->orders[i]) {
          throw Error("power table does not match the letter order");
        }
        for (Letter x : a->powers[i]) {
          if (x >= alphabet().size()) {
            throw Error("power letter outside the alphabet");
          }
        }
      }
      if (a->orders.back() == 0) {
        throw Error("orders must be positive");
      }
    } else {
      auto const& g = std::get<GroupNormalForm>(_nf);
      if (!g.group || g.values.size() != alphabet().size()
          || g.representatives.size() != g.group->size()) {
        throw Error("group normal form has the wrong shape");
      }
      for (auto const& v : g.representatives) {
        if (!alphabet().contains(v)) {
          throw Error("representative outside the alphabet");
        }
      }
    }
  }

  DeltaOmegaSchema::DeltaOmegaSchema(Alphabet k, DeltaOmegaParams params, OmegaCeiling ceiling,
                                     NormalFormSpec normal_form, std::size_t level)
      : DeltaOmegaSchema(Unchecked{}, std::move(k), params, std::move(ceiling),
                         std::move(normal_form), level) {
    if (_params.t <= 2 * _params.period) {
      throw Error("delta rules need t > 2P (t = " + std::to_string(_params.t)
                  + ", P = " + std::to_string(_params.period) + ")");
    }
    if (_params.marker < 2 * _params.period) {
      throw Error("marker length must be at least 2P");
    }
  }

  std::shared_ptr<DeltaOmegaSchema> DeltaOmegaSchema::unchecked(Alphabet k, DeltaOmegaParams params,
                                                                OmegaCeiling   ceiling,
                                                                NormalFormSpec normal_form,
                                                                std::size_t    level) {
    return std::shared_ptr<DeltaOmegaSchema>(new DeltaOmegaSchema(
        Unchecked{}, std::move(k), params, std::move(ceiling), std::move(normal_form), level));
  }

  bool DeltaOmegaSchema::equals(RuleSchema const& other) const {
    auto const* o = dynamic_cast<DeltaOmegaSchema const*>(&other);
    return o != nullptr && alphabet() == o->alphabet() && _params == o->_params
           && _ceiling == o->_ceiling && _nf == o->_nf && _level == o->_level;
  }

  bool DeltaOmegaSchema::is_marker(WordView window) const {
    return window.size() == _params.marker && window[0] != _params.separator
           && smallest_period(window) > _params.period;
  }

  std::size_t DeltaOmegaSchema::tail(WordView window) const {
    std::size_t k = 0;
    while (k < window.size() && window[window.size() - 1 - k] == _params.separator) {
      ++k;
    }
    return k;
  }

  int DeltaOmegaSchema::compare_markers(WordView x, WordView y) const {
    if (x.size() != _params.marker || y.size() != _params.marker) {
      throw Error("markers have length " + std::to_string(_params.marker));
    }
    std::size_t tx = tail(x);
    std::size_t ty = tail(y);
    if (tx != ty) {
      return tx > ty ? -1 : 1;
    }
    if (tx + 1 == _params.marker) {
      return 0;
    }
    auto c = std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }

  std::vector<std::size_t> DeltaOmegaSchema::marker_positions(WordView w) const {
    std::vector<std::size_t> result;
    std::size_t const        m = _params.marker;
    for (std::size_t q = 0; q + m <= w.size(); ++q) {
      if (is_marker(w.subspan(q, m))) {
        result.push_back(q);
      }
    }
    return result;
  }

  Word DeltaOmegaSchema::normal_form_of(WordView u) const {
    Letter const sep = _params.separator;
    if (auto const* a = std::get_if<AbelianNormalForm>(&_nf)) {
      std::size_t const        m = _params.marker;
      std::vector<std::size_t> total(a->orders.size(), 0);
      for (Letter k : u) {
        auto const& row = a->counts[k];
        for (std::size_t i = 0; i < total.size(); ++i) {
          total[i] += row[i];
        }
      }
      Word out(m, sep);
      for (std::size_t i = 0; i < a->powers.size(); ++i) {
        std::size_t e = total[i] % a->orders[i];
        if (e == 0) {
          out.insert(out.end(), m, sep);
        } else {
          out.push_back(a->powers[i][e - 1]);
          out.insert(out.end(), m - 1, sep);
        }
      }
      out.insert(out.end(), total.back() % a->orders.back() + m, sep);
      return out;
    }
    auto const& g = std::get<GroupNormalForm>(_nf);
    Element     x = g.group->identity();
    for (Letter k : u) {
      x = g.group->product(x, g.values[k]);
    }
    return g.representatives[x];
  }

  void DeltaOmegaSchema::collect_delta(WordView w, std::vector<Redex>& out) const {
    std::size_t const        L = w.size();
    std::vector<std::size_t> run(L + 1, 0);
    for (std::size_t p = 1; p <= _params.period; ++p) {
      std::size_t const need = (_params.t + _params.n) * p;
      if (need > L) {
        break;
      }
      // run[i] = number of consecutive j >= i with w[j] == w[j + p].
      run[L - p] = 0;
      for (std::size_t i = L - p; i-- > 0;) {
        run[i] = w[i] == w[i + p] ? run[i + 1] + 1 : 0;
      }
      for (std::size_t i = 0; i + need <= L; ++i) {
        if (run[i] + p < need) {
          continue;
        }
        Redex r;
        r.pos       = i;
        r.len       = need;
        r.family    = RuleFamily::delta;
        r.level     = _level;
        r.order     = 0;
        r.lhs_local = need;
        Word delta(w.begin() + i, w.begin() + i + p);
        r.rhs = [delta = std::move(delta), t = _params.t] {
          Word rhs = power(delta, t);
          return Rhs{rhs, rhs.size()};
        };
        out.push_back(std::move(r));
      }
    }
  }

  void DeltaOmegaSchema::collect_omega(WordView w, std::vector<Redex>& out) const {
    std::size_t const m       = _params.marker;
    auto const        markers = marker_positions(w);
    if (markers.size() < 2) {
      return;
    }
    // Dense ranks: equal rank iff the markers are equivalent.
    std::vector<std::size_t> by_key(markers.size());
    std::iota(by_key.begin(), by_key.end(), 0);
    auto window = [&](std::size_t idx) { return w.subspan(markers[idx], m); };
    std::stable_sort(by_key.begin(), by_key.end(), [&](std::size_t x, std::size_t y) {
      return compare_markers(window(x), window(y)) < 0;
    });
    std::vector<std::size_t> rank(markers.size(), 0);
    for (std::size_t j = 1; j < by_key.size(); ++j) {
      rank[by_key[j]] = rank[by_key[j - 1]]
                        + (compare_markers(window(by_key[j - 1]), window(by_key[j])) < 0 ? 1 : 0);
    }
    std::shared_ptr<Word const> context;
    for (std::size_t a = 0; a < markers.size(); ++a) {
      std::size_t const i = markers[a];
      for (std::size_t b = a + 1; b < markers.size(); ++b) {
        if (rank[b] > rank[a]) {
          break;
        }
        std::size_t const q   = markers[b];
        std::size_t const len = q + m - i;
        if (!_ceiling.admits(len)) {
          break;
        }
        if (rank[b] != rank[a] || q < i + m || len < _params.t) {
          continue;
        }
        if (!context) {
          context = std::make_shared<Word const>(w.begin(), w.end());
        }
        Redex r;
        r.pos       = i;
        r.len       = len;
        r.family    = RuleFamily::omega;
        r.level     = _level;
        r.order     = 1;
        r.lhs_local = len;
        r.rhs       = [this, context, i, q, m] {
          WordView kw(*context);
          Word     rhs(kw.begin() + i, kw.begin() + i + m);
          Word     mid = normal_form_of(kw.subspan(i + m, q - i - m));
          rhs.insert(rhs.end(), mid.begin(), mid.end());
          rhs.insert(rhs.end(), kw.begin() + q, kw.begin() + q + m);
          return Rhs{rhs, rhs.size()};
        };
        out.push_back(std::move(r));
      }
    }
  }

  void DeltaOmegaSchema::collect_redexes(WordView w, std::vector<Redex>& out) const {
    collect_delta(w, out);
    collect_omega(w, out);
  }

}  // namespace prcr
