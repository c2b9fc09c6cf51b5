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

#include "prcr/sts_format.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "prcr/errors.hpp"
#include "prcr/lifted.hpp"
#include "prcr/repetition_marker.hpp"

namespace prcr {

  namespace {

    std::string join(std::vector<std::string> const& parts) {
      std::string out;
      for (auto const& p : parts) {
        out += ' ';
        out += p;
      }
      return out;
    }

    template <typename T>
    std::string numbers(std::vector<T> const& xs) {
      std::string out;
      for (auto const& x : xs) {
        out += ' ';
        out += std::to_string(x);
      }
      return out;
    }

    std::string word_tokens(Alphabet const& a, WordView w) {
      std::string out;
      for (Letter x : w) {
        out += ' ';
        out += a.name(x);
      }
      return out;
    }

    void format_table(std::ostream& out, std::string const& key, FiniteMonoid const& m) {
      out << key << " monoid " << m.size() << ' ' << m.identity() << '\n';
      for (std::size_t x = 0; x < m.size(); ++x) {
        std::vector<Element> row(m.table().begin() + x * m.size(),
                                 m.table().begin() + (x + 1) * m.size());
        out << key << " row" << numbers(row) << '\n';
      }
    }

    void format_into(std::ostream& out, RuleSchema const& sys);

    void format_block(std::ostream& out, std::string const& name, RuleSchema const& sys) {
      out << "begin " << name << '\n';
      format_into(out, sys);
      out << "end " << name << '\n';
    }

    void format_into(std::ostream& out, RuleSchema const& sys) {
      Alphabet const& a = sys.alphabet();
      if (auto const* e = dynamic_cast<RewriteSystem const*>(&sys)) {
        out << "alphabet" << join(a.names()) << '\n';
        if (e->level() != 0) {
          out << "level " << e->level() << '\n';
        }
        for (auto const& r : e->rules()) {
          out << "rule" << word_tokens(a, r.lhs) << " ->" << word_tokens(a, r.rhs) << '\n';
        }
        return;
      }
      if (auto const* l = dynamic_cast<LiftedSchema const*>(&sys)) {
        out << "schema lifted\n";
        out << "alphabet" << join(a.names()) << '\n';
        out << "separator " << a.name(l->separator()) << '\n';
        out << "level " << l->level() << '\n';
        for (auto const& p : l->prefixes()) {
          out << "prefix" << word_tokens(a, p) << '\n';
        }
        if (auto const& red = l->reduction()) {
          out << "reduce limit " << red->limit << '\n';
          format_table(out, "reduce", red->hom.monoid());
          out << "reduce images" << numbers(red->hom.images()) << '\n';
        }
        format_block(out, "base", *l->base());
        format_block(out, "inner", *l->inner());
        return;
      }
      if (auto const* d = dynamic_cast<DeltaOmegaSchema const*>(&sys)) {
        auto const& p = d->params();
        auto const& c = d->ceiling();
        out << "schema repetition-marker\n";
        out << "alphabet" << join(a.names()) << '\n';
        out << "level " << d->level() << '\n';
        out << "step " << p.n << '\n';
        out << "period " << p.period << '\n';
        out << "t " << p.t << '\n';
        out << "t0 " << p.t0 << '\n';
        out << "marker " << p.marker << '\n';
        out << "separator " << a.name(p.separator) << '\n';
        out << "omega-count " << c.omega_count.str() << '\n';
        out << "omega-ceiling " << (c.t_omega ? c.t_omega->str() : std::string("symbolic"))
            << '\n';
        out << "relaxed " << (c.relaxed ? 1 : 0) << '\n';
        if (auto const* nf = std::get_if<AbelianNormalForm>(&d->normal_form_spec())) {
          out << "nf abelian\n";
          out << "nf orders" << numbers(nf->orders) << '\n';
          for (auto const& row : nf->counts) {
            out << "nf counts" << numbers(row) << '\n';
          }
          for (auto const& row : nf->powers) {
            out << "nf powers" << word_tokens(a, row) << '\n';
          }
        } else {
          auto const& g = std::get<GroupNormalForm>(d->normal_form_spec());
          out << "nf group\n";
          format_table(out, "nf", *g.group);
          out << "nf values" << numbers(g.values) << '\n';
          for (auto const& w : g.representatives) {
            out << "nf representative" << word_tokens(a, w) << '\n';
          }
        }
        return;
      }
      throw Error("cannot serialize a schema of kind \"" + std::string(sys.kind()) + "\"");
    }

    struct Line {
      std::size_t              number;
      std::vector<std::string> tokens;
    };

    using Lines = std::vector<Line>;

    std::size_t to_size(Line const& line, std::size_t i) {
      if (i >= line.tokens.size()) {
        throw ParseError("missing number", line.number);
      }
      std::string const& s = line.tokens[i];
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("expected a natural number, got \"" + s + "\"", line.number);
      }
      try {
        return std::stoull(s);
      } catch (std::out_of_range const&) {
        throw ParseError("number out of range: " + s, line.number);
      }
    }

    BigNat to_big(Line const& line, std::size_t i) {
      if (i >= line.tokens.size()) {
        throw ParseError("missing number", line.number);
      }
      std::string const& s = line.tokens[i];
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("expected a natural number, got \"" + s + "\"", line.number);
      }
      return BigNat(s);
    }

    std::vector<std::size_t> sizes_from(Line const& line, std::size_t first) {
      std::vector<std::size_t> out;
      for (std::size_t i = first; i < line.tokens.size(); ++i) {
        out.push_back(to_size(line, i));
      }
      return out;
    }

    std::vector<Element> elements_from(Line const& line, std::size_t first) {
      std::vector<Element> out;
      for (auto x : sizes_from(line, first)) {
        out.push_back(static_cast<Element>(x));
      }
      return out;
    }

    Word word_from(Alphabet const& a, Line const& line, std::size_t first,
                   std::size_t last = SIZE_MAX) {
      Word w;
      last = std::min(last, line.tokens.size());
      for (std::size_t i = first; i < last; ++i) {
        auto x = a.find(line.tokens[i]);
        if (!x) {
          throw ParseError("letter \"" + line.tokens[i] + "\" is not in the alphabet",
                           line.number);
        }
        w.push_back(*x);
      }
      return w;
    }

    // Table lines "<key> monoid size identity" and "<key> row ...".
    struct TableReader {
      std::optional<Line>  header;
      std::vector<Element> rows;

      MonoidPtr build(std::size_t at) const {
        if (!header) {
          throw ParseError("missing monoid table", at);
        }
        std::size_t size = to_size(*header, 2);
        std::size_t id   = to_size(*header, 3);
        if (rows.size() != size * size) {
          throw ParseError("monoid table has the wrong number of entries", header->number);
        }
        try {
          return std::make_shared<FiniteMonoid>(size, static_cast<Element>(id), rows);
        } catch (ParseError const&) {
          throw;
        } catch (Error const& e) {
          throw ParseError(e.what(), header->number);
        }
      }
    };

    SchemaPtr parse_lines(Lines const& lines, std::size_t from, std::size_t to);

    struct Block {
      std::string             kind;
      std::optional<Alphabet> alphabet;
      std::size_t             alphabet_line = 0;
      std::vector<Line>       params;
      std::map<std::string, SchemaPtr> children;
    };

    Block split(Lines const& lines, std::size_t from, std::size_t to) {
      Block b;
      b.kind = "explicit";
      for (std::size_t i = from; i < to; ++i) {
        Line const& line = lines[i];
        auto const& key  = line.tokens[0];
        if (key == "schema") {
          if (i != from || line.tokens.size() != 2) {
            throw ParseError("`schema <kind>` must be the first line of a block", line.number);
          }
          b.kind = line.tokens[1];
        } else if (key == "alphabet") {
          if (b.alphabet) {
            throw ParseError("duplicate alphabet line", line.number);
          }
          try {
            b.alphabet.emplace(
                std::vector<std::string>(line.tokens.begin() + 1, line.tokens.end()));
          } catch (Error const& e) {
            throw ParseError(e.what(), line.number);
          }
          b.alphabet_line = line.number;
        } else if (key == "begin") {
          if (line.tokens.size() != 2) {
            throw ParseError("expected `begin <name>`", line.number);
          }
          std::string const& name  = line.tokens[1];
          std::size_t        depth = 1;
          std::size_t        j     = i + 1;
          for (; j < to; ++j) {
            auto const& t = lines[j].tokens;
            if (t[0] == "begin") {
              ++depth;
            } else if (t[0] == "end" && --depth == 0) {
              break;
            }
          }
          if (j == to || lines[j].tokens.size() != 2 || lines[j].tokens[1] != name) {
            throw ParseError("unterminated block \"" + name + "\"", line.number);
          }
          if (b.children.count(name) != 0) {
            throw ParseError("duplicate block \"" + name + "\"", line.number);
          }
          if (j == i + 1) {
            throw ParseError("empty block \"" + name + "\"", line.number);
          }
          b.children[name] = parse_lines(lines, i + 1, j);
          i                = j;
        } else if (key == "end") {
          throw ParseError("unmatched `end`", line.number);
        } else {
          b.params.push_back(line);
        }
      }
      if (!b.alphabet) {
        throw ParseError("missing alphabet line", from < lines.size() ? lines[from].number : 1);
      }
      return b;
    }

    SchemaPtr child(Block const& b, std::string const& name, std::size_t at) {
      auto it = b.children.find(name);
      if (it == b.children.end()) {
        throw ParseError("missing block \"" + name + "\"", at);
      }
      return it->second;
    }

    SchemaPtr parse_explicit(Block const& b) {
      std::vector<Rule>        rules;
      std::vector<std::size_t> rule_lines;
      std::size_t              level = 0;
      for (auto const& line : b.params) {
        if (line.tokens[0] == "level") {
          level = to_size(line, 1);
        } else if (line.tokens[0] == "rule") {
          std::size_t arrow = 1;
          while (arrow < line.tokens.size() && line.tokens[arrow] != "->") {
            ++arrow;
          }
          if (arrow == line.tokens.size()) {
            throw ParseError("rule without `->`", line.number);
          }
          rules.push_back({word_from(*b.alphabet, line, 1, arrow),
                           word_from(*b.alphabet, line, arrow + 1)});
          rule_lines.push_back(line.number);
        } else {
          throw ParseError("unknown line \"" + line.tokens[0] + "\"", line.number);
        }
      }
      try {
        return std::make_shared<RewriteSystem>(*b.alphabet, rules, level);
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        // Blame the first rule whose addition breaks the system.
        for (std::size_t i = 1; i <= rules.size(); ++i) {
          try {
            RewriteSystem(*b.alphabet, std::vector<Rule>(rules.begin(), rules.begin() + i));
          } catch (Error const& first) {
            throw ParseError(first.what(), rule_lines[i - 1]);
          }
        }
        throw ParseError(e.what(), b.alphabet_line);
      }
    }

    Letter letter_of(Alphabet const& a, Line const& line, std::size_t i) {
      if (i >= line.tokens.size()) {
        throw ParseError("missing letter", line.number);
      }
      return word_from(a, line, i, i + 1)[0];
    }

    SchemaPtr parse_lifted(Block const& b) {
      Alphabet const&            a = *b.alphabet;
      std::optional<Letter>      sep;
      std::size_t                level = 0;
      std::vector<Word>          prefixes;
      std::optional<std::size_t> limit;
      TableReader                table;
      std::optional<std::vector<Element>> images;
      std::size_t                reduce_line = 0;
      for (auto const& line : b.params) {
        auto const& key = line.tokens[0];
        if (key == "separator") {
          sep = letter_of(a, line, 1);
        } else if (key == "level") {
          level = to_size(line, 1);
        } else if (key == "prefix") {
          prefixes.push_back(word_from(a, line, 1));
        } else if (key == "reduce" && line.tokens.size() >= 2) {
          auto const& sub = line.tokens[1];
          reduce_line     = line.number;
          if (sub == "limit") {
            limit = to_size(line, 2);
          } else if (sub == "monoid") {
            table.header = line;
          } else if (sub == "row") {
            auto row = elements_from(line, 2);
            table.rows.insert(table.rows.end(), row.begin(), row.end());
          } else if (sub == "images") {
            images = elements_from(line, 2);
          } else {
            throw ParseError("unknown reduce line \"" + sub + "\"", line.number);
          }
        } else {
          throw ParseError("unknown line \"" + key + "\"", line.number);
        }
      }
      std::size_t const at = b.alphabet_line;
      if (!sep) {
        throw ParseError("missing separator", at);
      }
      std::optional<AlphabetReduction> reduction;
      if (limit || table.header || images) {
        if (!limit || !images) {
          throw ParseError("incomplete reduce block", reduce_line);
        }
        try {
          reduction = AlphabetReduction{*limit, Homomorphism(table.build(reduce_line), *images)};
        } catch (ParseError const&) {
          throw;
        } catch (Error const& e) {
          throw ParseError(e.what(), reduce_line);
        }
      }
      auto base  = child(b, "base", at);
      auto inner = child(b, "inner", at);
      try {
        return std::make_shared<LiftedSchema>(a, *sep, base, std::move(prefixes),
                                              std::move(reduction), inner, level);
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        throw ParseError(e.what(), at);
      }
    }

    SchemaPtr parse_repetition(Block const& b) {
      Alphabet const&  a = *b.alphabet;
      DeltaOmegaParams p;
      OmegaCeiling     c;
      std::size_t      level = 0;
      std::string      nf_kind;
      std::size_t      nf_line = b.alphabet_line;
      AbelianNormalForm abelian;
      TableReader       table;
      std::vector<Element> values;
      std::vector<Word>    reps;
      std::map<std::string, bool> seen;
      for (auto const& line : b.params) {
        auto const& key = line.tokens[0];
        if (key != "nf") {
          if (seen[key]) {
            throw ParseError("duplicate line \"" + key + "\"", line.number);
          }
          seen[key] = true;
        }
        if (key == "level") {
          level = to_size(line, 1);
        } else if (key == "step") {
          p.n = to_size(line, 1);
        } else if (key == "period") {
          p.period = to_size(line, 1);
        } else if (key == "t") {
          p.t = to_size(line, 1);
        } else if (key == "t0") {
          p.t0 = to_size(line, 1);
        } else if (key == "marker") {
          p.marker = to_size(line, 1);
        } else if (key == "separator") {
          p.separator = letter_of(a, line, 1);
        } else if (key == "omega-count") {
          c.omega_count = to_big(line, 1);
        } else if (key == "omega-ceiling") {
          if (line.tokens.size() == 2 && line.tokens[1] == "symbolic") {
            c.t_omega.reset();
          } else {
            c.t_omega = to_big(line, 1);
          }
        } else if (key == "relaxed") {
          c.relaxed = to_size(line, 1) != 0;
        } else if (key == "nf" && line.tokens.size() >= 2) {
          auto const& sub = line.tokens[1];
          if (sub == "abelian" || sub == "group") {
            if (!nf_kind.empty()) {
              throw ParseError("duplicate normal form", line.number);
            }
            nf_kind = sub;
            nf_line = line.number;
          } else if (sub == "orders") {
            abelian.orders = sizes_from(line, 2);
          } else if (sub == "counts") {
            abelian.counts.push_back(sizes_from(line, 2));
          } else if (sub == "powers") {
            abelian.powers.push_back(word_from(a, line, 2));
          } else if (sub == "monoid") {
            table.header = line;
          } else if (sub == "row") {
            auto row = elements_from(line, 2);
            table.rows.insert(table.rows.end(), row.begin(), row.end());
          } else if (sub == "values") {
            values = elements_from(line, 2);
          } else if (sub == "representative") {
            reps.push_back(word_from(a, line, 2));
          } else {
            throw ParseError("unknown nf line \"" + sub + "\"", line.number);
          }
        } else {
          throw ParseError("unknown line \"" + key + "\"", line.number);
        }
      }
      for (auto const* key : {"step", "period", "t", "t0", "marker", "separator", "omega-count",
                              "omega-ceiling"}) {
        if (!seen[key]) {
          throw ParseError(std::string("missing line \"") + key + "\"", b.alphabet_line);
        }
      }
      NormalFormSpec nf;
      if (nf_kind == "abelian") {
        nf = std::move(abelian);
      } else if (nf_kind == "group") {
        nf = GroupNormalForm{table.build(nf_line), std::move(values), std::move(reps)};
      } else {
        throw ParseError("missing normal form", b.alphabet_line);
      }
      try {
        return std::make_shared<DeltaOmegaSchema>(a, p, std::move(c), std::move(nf), level);
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        throw ParseError(e.what(), nf_line);
      }
    }

    SchemaPtr parse_lines(Lines const& lines, std::size_t from, std::size_t to) {
      Block b = split(lines, from, to);
      if (b.kind == "explicit") {
        if (!b.children.empty()) {
          throw ParseError("explicit systems have no nested blocks", b.alphabet_line);
        }
        return parse_explicit(b);
      }
      if (b.kind == "lifted") {
        return parse_lifted(b);
      }
      if (b.kind == "repetition-marker") {
        return parse_repetition(b);
      }
      throw ParseError("unknown schema kind \"" + b.kind + "\"", lines[from].number);
    }

  }  // namespace

  std::string format_system(RuleSchema const& sys) {
    std::ostringstream out;
    format_into(out, sys);
    return out.str();
  }

  SchemaPtr parse_system(std::istream& in) {
    Lines       lines;
    std::size_t number = 0;
    for (std::string text; std::getline(in, text);) {
      ++number;
      if (auto hash = text.find('#'); hash != std::string::npos) {
        text.erase(hash);
      }
      std::istringstream       tokens(text);
      std::vector<std::string> parts;
      for (std::string tok; tokens >> tok;) {
        parts.push_back(tok);
      }
      if (!parts.empty()) {
        lines.push_back({number, std::move(parts)});
      }
    }
    if (lines.empty()) {
      throw ParseError("empty system file", 1);
    }
    return parse_lines(lines, 0, lines.size());
  }

  SchemaPtr parse_system(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_system(in);
  }

  SchemaPtr read_system_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open " + path);
    }
    return parse_system(in);
  }

  void write_system_file(std::string const& path, RuleSchema const& sys) {
    std::ofstream out(path);
    if (!out) {
      throw Error("cannot write " + path);
    }
    out << format_system(sys);
  }

}  // namespace prcr
