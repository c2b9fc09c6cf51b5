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

// prcr: construct, rewrite and check Parikh-reducing Church-Rosser systems.
//
// Exit codes: 0 pass, 1 check failed (or not a member), 2 inconclusive,
// 64 usage, 65 malformed input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "prcr/abelian.hpp"
#include "prcr/errors.hpp"
#include "prcr/monoid_construction.hpp"
#include "prcr/oracle.hpp"
#include "prcr/sampling.hpp"
#include "prcr/sts_format.hpp"
#include "prcr/two_letter.hpp"

namespace {

  using namespace prcr;

  constexpr int exit_pass         = 0;
  constexpr int exit_failed       = 1;
  constexpr int exit_inconclusive = 2;
  constexpr int exit_usage        = 64;
  constexpr int exit_parse        = 65;

  struct RunConfig {
    std::uint64_t budget            = 10'000'000;
    std::size_t   max_len           = 24;
    std::uint64_t seed              = 1;
    bool          relax_upper_bound = false;
    bool          no_reduction      = false;
    std::string   strategy          = "leftmost-shortest";
    std::string   report            = "text";

    bool tsv() const {
      return report == "tsv";
    }
    Strategy strat() const {
      return Strategy::parse(strategy, seed);
    }
  };

  void add_common(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--budget", cfg.budget, "rewrite step budget")->check(CLI::PositiveNumber);
    cmd->add_option("--max-len", cfg.max_len, "enumeration length cap")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", cfg.seed, "random seed");
    cmd->add_option("--strategy", cfg.strategy,
                    "leftmost-shortest | leftmost-longest | rightmost | random");
    cmd->add_option("--report", cfg.report, "text | tsv")
        ->check(CLI::IsMember({"text", "tsv"}));
  }

  // Homomorphism of a .mon file re-indexed to the letters of `a`.
  Homomorphism hom_for(MonoidFile const& file, Alphabet const& a) {
    if (!file.has_hom()) {
      throw Error("monoid file has no hom lines");
    }
    Alphabet const       fa = file.alphabet();
    std::vector<Element> images;
    for (auto const& name : a.names()) {
      auto x = fa.find(name);
      if (!x) {
        throw Error("letter \"" + name + "\" has no image in the monoid file");
      }
      images.push_back(file.hom_images[*x]);
    }
    return Homomorphism(file.monoid, images);
  }

  void print_row(RunConfig const& cfg, std::string const& key, std::string const& value) {
    if (cfg.tsv()) {
      std::cout << key << '\t' << value << '\n';
    } else {
      std::cout << key << ": " << value << '\n';
    }
  }

  std::string flag(bool b) {
    return b ? "true" : "false";
  }

  int cmd_construct(RunConfig const& cfg, std::string const& monoid_path, std::string const& mode,
                    std::string const& out_path) {
    MonoidFile          file = read_monoid_file(monoid_path);
    Alphabet const      a    = file.alphabet();
    Homomorphism const  phi  = file.homomorphism();
    ConstructionOptions options;
    options.alphabet_reduction = !cfg.no_reduction;
    options.relax_upper_bound  = cfg.relax_upper_bound;
    ConstructionArtifact art;
    if (mode == "abelian") {
      art = construct_abelian(a, phi, options);
    } else if (mode == "two-letter") {
      art = construct_two_letter(a, phi, options);
    } else {
      art = construct_monoid(a, phi, options);
    }
    if (!out_path.empty()) {
      write_system_file(out_path, *art.system);
    }
    if (cfg.tsv()) {
      std::cout << "level\tkind\talphabet\tmonoid\tseparator\tK\tn\ts\tt\tt0\tmarker\tomega\tt_omega\n";
      for (auto const& l : art.levels) {
        std::cout << l.level << '\t' << l.kind << '\t' << l.alphabet.size() << '\t'
                  << l.monoid_size << '\t' << l.separator.value_or("-") << '\t'
                  << (l.separator ? std::to_string(l.k_prefixes.size()) : "-") << '\t';
        if (l.params) {
          std::cout << l.n << '\t' << l.s << '\t' << l.params->t << '\t' << l.params->t0 << '\t'
                    << l.params->marker << '\t';
        } else {
          std::cout << "-\t-\t-\t-\t-\t";
        }
        if (l.ceiling) {
          std::cout << l.ceiling->omega_count << '\t' << l.ceiling->describe() << '\n';
        } else {
          std::cout << "-\t-\n";
        }
      }
    } else {
      std::cout << format_summary(art);
    }
    if (auto const* e = dynamic_cast<RewriteSystem const*>(art.system.get())) {
      auto c = classify(*e);
      print_row(cfg, "parikh-reducing", flag(c.parikh_reducing));
      print_row(cfg, "subword-reducing", flag(c.subword_reducing));
      print_row(cfg, "length-reducing", flag(c.length_reducing));
    } else {
      print_row(cfg, "parikh-reducing", "per instance, checked at every application");
    }
    if (cfg.relax_upper_bound) {
      print_row(cfg, "note", "omega length ceiling dropped (--relax-upper-bound)");
    }
    return exit_pass;
  }

  std::string family_label(Redex const& r) {
    switch (r.family) {
      case RuleFamily::explicit_rule:
        return "R";
      case RuleFamily::reduction:
        return "reduce level " + std::to_string(r.level);
      case RuleFamily::delta:
        return "T_delta level " + std::to_string(r.level);
      case RuleFamily::omega:
        return "T_omega level " + std::to_string(r.level);
    }
    return "?";
  }

  int cmd_rewrite(RunConfig const& cfg, std::string const& path, std::string const& word,
                  bool trace) {
    SchemaPtr         sys = read_system_file(path);
    Word const        w   = sys->alphabet().parse_word(word);
    NormalFormOptions options;
    options.budget        = cfg.budget;
    options.verify_parikh = true;
    if (trace) {
      options.observer = [&](StepInfo const& s) {
        if (cfg.tsv()) {
          std::cout << "step\t" << s.step << '\t' << s.redex.pos << '\t' << family_label(s.redex)
                    << '\t' << s.redex.lhs_local << '\t' << s.rhs.local_length << '\n';
        } else {
          std::cout << "step " << s.step << ": pos " << s.redex.pos << ", "
                    << family_label(s.redex) << ", lhs " << s.redex.lhs_local << ", rhs "
                    << s.rhs.local_length << '\n';
        }
      };
    }
    try {
      Word nf = normal_form(*sys, w, cfg.strat(), options);
      print_row(cfg, "normal form", sys->alphabet().format(nf));
      print_row(cfg, "length", std::to_string(nf.size()));
    } catch (BudgetExhausted const& e) {
      std::cerr << "prcr: " << e.what() << '\n';
      return exit_inconclusive;
    }
    return exit_pass;
  }

  struct CheckFlags {
    bool        confluence = false;
    bool        classify   = false;
    std::string invariance;
    std::size_t lower_bound = 0;
    std::size_t samples     = 1000;
    std::size_t sample_len  = 300;
  };

  int cmd_check(RunConfig const& cfg, std::string const& path, CheckFlags const& f) {
    SchemaPtr   sys      = read_system_file(path);
    auto const* e        = dynamic_cast<RewriteSystem const*>(sys.get());
    int         worst    = exit_pass;
    auto        record   = [&](std::string const& name, Verdict v, std::string const& detail) {
      print_row(cfg, name, std::string(verdict_name(v)) + (detail.empty() ? "" : " " + detail));
      int code = v == Verdict::pass ? exit_pass
                                    : (v == Verdict::fail ? exit_failed : exit_inconclusive);
      if (code == exit_failed || (code == exit_inconclusive && worst == exit_pass)) {
        worst = code;
      }
    };
    bool any = false;
    if (f.confluence) {
      any = true;
      if (e != nullptr) {
        auto r = is_locally_confluent(*e, cfg.strat(), cfg.budget);
        std::string detail = "(" + std::to_string(r.pairs) + " critical pairs)";
        if (r.counterexample) {
          detail += " witness " + e->alphabet().format(r.counterexample->witness) + " -> "
                    + e->alphabet().format(r.left_normal_form) + " | "
                    + e->alphabet().format(r.right_normal_form);
        }
        record("confluence", r.confluent ? Verdict::pass : Verdict::fail, detail);
      } else {
        NormalFormOptions o;
        o.budget        = cfg.budget;
        o.verify_parikh = true;
        auto r          = confluence_sampling(
            *sys, schema_sampler(sys, f.sample_len), f.samples,
            {Strategy{StrategyKind::leftmost_shortest}, Strategy{StrategyKind::rightmost},
                      Strategy{StrategyKind::random, cfg.seed}},
            cfg.seed, o);
        std::string detail = "(sampled, " + std::to_string(r.trials) + " words)";
        if (r.counterexample) {
          detail += " witness " + sys->alphabet().format(*r.counterexample);
        }
        record("confluence", r.ok ? Verdict::pass : Verdict::fail, detail);
      }
    }
    if (f.classify) {
      any = true;
      if (e == nullptr) {
        print_row(cfg, "classify", "schema: Parikh reduction is checked per applied instance");
      } else {
        auto c = classify(*e);
        print_row(cfg, "parikh-reducing", flag(c.parikh_reducing));
        print_row(cfg, "subword-reducing", flag(c.subword_reducing));
        print_row(cfg, "length-reducing", flag(c.length_reducing));
        if (!c.parikh_reducing) {
          worst = exit_failed;
        }
      }
    }
    if (!f.invariance.empty()) {
      any         = true;
      auto file   = read_monoid_file(f.invariance);
      auto phi    = hom_for(file, sys->alphabet());
      if (e != nullptr) {
        record("invariance", check_invariance(*e, phi) ? Verdict::pass : Verdict::fail, "");
      } else {
        auto r = check_invariance_sampled(*sys, phi, schema_sampler(sys, f.sample_len),
                                          f.samples, cfg.seed, cfg.budget);
        record("invariance", r.invariant ? Verdict::pass : Verdict::fail,
               "(sampled, " + std::to_string(r.applications) + " applications)");
      }
    }
    if (f.lower_bound != 0) {
      any    = true;
      auto r = check_lower_bound(*sys, f.lower_bound, cfg.max_len);
      record("lower-bound", r.verdict, r.detail);
    }
    if (!any) {
      std::cerr << "prcr: check needs at least one of --confluence, --classify, --invariance, "
                   "--lower-bound\n";
      return exit_usage;
    }
    return worst;
  }

  int cmd_index(RunConfig const& cfg, std::string const& path) {
    SchemaPtr sys = read_system_file(path);
    if (auto const* e = dynamic_cast<RewriteSystem const*>(sys.get())) {
      auto r = enumerate_irreducible(*e, cfg.max_len);
      if (r.complete) {
        print_row(cfg, "index", r.count.str());
        return exit_pass;
      }
      print_row(cfg, "index", "inconclusive (at least " + r.count.str() + " up to length "
                                  + std::to_string(cfg.max_len) + ")");
      return exit_inconclusive;
    }
    try {
      auto words = list_irreducible(*sys, cfg.max_len + 1);
      if (words.empty() || words.back().size() <= cfg.max_len) {
        print_row(cfg, "index", std::to_string(words.size()));
        return exit_pass;
      }
    } catch (BudgetExhausted const&) {
    }
    print_row(cfg, "index", "inconclusive (irreducible words beyond length "
                                + std::to_string(cfg.max_len) + ")");
    return exit_inconclusive;
  }

  std::vector<Element> parse_accept(std::string const& text, std::size_t size) {
    std::vector<Element> out;
    std::string          s = text;
    for (char& ch : s) {
      if (ch == ',') {
        ch = ' ';
      }
    }
    std::istringstream in(s);
    for (std::string tok; in >> tok;) {
      std::size_t used = 0;
      std::size_t x    = 0;
      try {
        x = std::stoul(tok, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used != tok.size() || x >= size) {
        throw ParseError("bad accept element \"" + tok + "\"", 0);
      }
      out.push_back(static_cast<Element>(x));
    }
    return out;
  }

  int cmd_member(RunConfig const& cfg, std::string const& path, std::string const& monoid_path,
                 std::string const& accept_text, std::string const& word) {
    SchemaPtr  sys    = read_system_file(path);
    auto       file   = read_monoid_file(monoid_path);
    auto       phi    = hom_for(file, sys->alphabet());
    auto       accept = parse_accept(accept_text, phi.monoid().size());
    Word const w      = sys->alphabet().parse_word(word);
    NormalFormOptions o;
    o.budget = cfg.budget;
    Word nf;
    try {
      nf = normal_form(*sys, w, cfg.strat(), o);
    } catch (BudgetExhausted const& e) {
      std::cerr << "prcr: " << e.what() << '\n';
      return exit_inconclusive;
    }
    auto in_accept = [&](Element g) {
      return std::find(accept.begin(), accept.end(), g) != accept.end();
    };
    Element const image  = phi.evaluate(nf);
    bool const    member = in_accept(image);
    if (image != phi.evaluate(w)) {
      std::cerr << "prcr: normal form changed the image; the system does not factor through "
                   "the homomorphism\n";
      return exit_failed;
    }
    // With an enumerable index: [w] is one of the accepted classes.
    if (auto const* e = dynamic_cast<RewriteSystem const*>(sys.get())) {
      auto count = enumerate_irreducible(*e, cfg.max_len);
      if (count.complete) {
        bool listed = false;
        for (auto const& u : list_irreducible(*e, cfg.max_len)) {
          listed = listed || (u == nf && in_accept(phi.evaluate(u)));
        }
        if (listed != member) {
          std::cerr << "prcr: class listing disagrees with the image test\n";
          return exit_failed;
        }
      }
    }
    print_row(cfg, "normal form", sys->alphabet().format(nf));
    print_row(cfg, "image", std::to_string(image));
    print_row(cfg, "member", flag(member));
    return member ? exit_pass : exit_failed;
  }

  int cmd_nw(RunConfig const& cfg, std::size_t m, std::string const& out_path) {
    auto sys = niemann_waldmann(m);
    if (!out_path.empty()) {
      write_system_file(out_path, sys);
    } else {
      std::cout << format_system(sys);
    }
    (void) cfg;
    return exit_pass;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parikh-reducing Church-Rosser systems"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto*       construct = app.add_subcommand("construct", "build a system for a homomorphism");
  std::string monoid_path;
  std::string mode = "auto";
  std::string out_path;
  construct->add_option("--monoid", monoid_path, ".mon file with hom lines")->required();
  construct->add_option("--mode", mode, "auto | abelian | two-letter | monoid")
      ->check(CLI::IsMember({"auto", "abelian", "two-letter", "monoid"}));
  construct->add_option("-o,--out", out_path, "write the system to this .sts file");
  construct->add_flag("--relax-upper-bound", cfg.relax_upper_bound,
                      "drop the omega rule length ceiling");
  construct->add_flag("--no-alphabet-reduction", cfg.no_reduction,
                      "keep unshortened K alphabets");
  add_common(construct, cfg);

  auto*       rewrite = app.add_subcommand("rewrite", "normal form of a word");
  std::string sys_path;
  std::string word;
  bool        trace = false;
  rewrite->add_option("system", sys_path, ".sts file")->required();
  rewrite->add_option("word", word, "word (space separated tokens, or one token of letters)")
      ->required();
  rewrite->add_flag("--trace", trace, "print every step");
  add_common(rewrite, cfg);

  auto*      check = app.add_subcommand("check", "confluence, classification, invariance");
  CheckFlags flags;
  check->add_option("system", sys_path, ".sts file")->required();
  check->add_flag("--confluence", flags.confluence,
                  "critical pairs (explicit) or multi-strategy sampling (schemas)");
  check->add_flag("--classify", flags.classify, "Parikh / subword / length reduction");
  check->add_option("--invariance", flags.invariance, ".mon file with hom lines");
  check->add_option("--lower-bound", flags.lower_bound, "check that words shorter than n are irreducible");
  check->add_option("--samples", flags.samples, "sampled words for schemas");
  check->add_option("--sample-len", flags.sample_len, "maximal sampled word length");
  add_common(check, cfg);

  auto* index = app.add_subcommand("index", "number of congruence classes");
  index->add_option("system", sys_path, ".sts file")->required();
  add_common(index, cfg);

  auto*       member = app.add_subcommand("member", "membership in the recognized language");
  std::string accept;
  member->add_option("system", sys_path, ".sts file")->required();
  member->add_option("--monoid", monoid_path, ".mon file with hom lines")->required();
  member->add_option("--accept", accept, "accepted elements, comma separated")->required();
  member->add_option("word", word, "word")->required();
  add_common(member, cfg);

  auto*       nw = app.add_subcommand("nw", "the xyz -> max(x, z) system over m letters");
  std::size_t m  = 0;
  nw->add_option("m", m, "number of letters")->required()->check(CLI::PositiveNumber);
  nw->add_option("-o,--out", out_path, "write to this .sts file");
  add_common(nw, cfg);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    cfg.strat();
  } catch (Error const& e) {
    std::cerr << "prcr: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (construct->parsed()) {
      return cmd_construct(cfg, monoid_path, mode, out_path);
    }
    if (rewrite->parsed()) {
      return cmd_rewrite(cfg, sys_path, word, trace);
    }
    if (check->parsed()) {
      return cmd_check(cfg, sys_path, flags);
    }
    if (index->parsed()) {
      return cmd_index(cfg, sys_path);
    }
    if (member->parsed()) {
      return cmd_member(cfg, sys_path, monoid_path, accept, word);
    }
    return cmd_nw(cfg, m, out_path);
  } catch (ParseError const& e) {
    std::cerr << "prcr: parse error: " << e.what() << '\n';
    return exit_parse;
  } catch (UnsupportedError const& e) {
    std::cerr << "prcr: " << e.what() << '\n';
    return exit_failed;
  } catch (Error const& e) {
    std::cerr << "prcr: error: " << e.what() << '\n';
    return exit_failed;
  }
}
