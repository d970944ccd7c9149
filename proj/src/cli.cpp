// Copyright 2026 The Cannon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cannon/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "cannon/grammar.hpp"
#include "cannon/history.hpp"
#include "cannon/io.hpp"
#include "cannon/search.hpp"
#include "cannon/transforms.hpp"

namespace cannon::cli {

  namespace {
    struct Args {
      std::string file;
      std::string file_b;
      std::string word;
      std::string to;
      std::string output;
      std::string trace_out;
      std::size_t max_len   = 0;
      bool        canonical = false;
      bool        diagram   = false;
      Limits      limits;
    };

    // Everything that ends a command early with a known exit code.
    struct Exit {
      int         code;
      std::string message;
    };

    System read_system(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw Exit{usage_error, "cannot open '" + path + "'"};
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      try {
        return parse_system(buf.str());
      } catch (InputError const& e) {
        throw Exit{usage_error, path + ": " + e.what()};
      }
    }

    Word read_word(std::string const& text) {
      try {
        return parse_word(text);
      } catch (InputError const& e) {
        throw Exit{usage_error, e.what()};
      }
    }

    void write_text(std::string const& path, std::string const& text, std::ostream& out) {
      if (path.empty()) {
        out << text;
        return;
      }
      std::ofstream f(path);
      if (!f || !(f << text)) {
        throw Exit{usage_error, "cannot write '" + path + "'"};
      }
    }

    Language language_of(System const& sys, std::size_t max_len, Limits const& limits) {
      if (auto const* nca = std::get_if<NcaSystem>(&sys)) {
        return enumerate_language(*nca, max_len, limits);
      }
      return generate_language(std::get<Grammar>(sys), max_len, limits);
    }

    int cmd_validate(Args const& a, std::ostream& out) {
      std::ifstream in(a.file);
      if (!in) {
        throw Exit{usage_error, "cannot open '" + a.file + "'"};
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      System sys = [&] {
        try {
          return parse_system_unchecked(buf.str());
        } catch (ParseError const& e) {
          throw Exit{usage_error, a.file + ": " + e.what()};
        }
      }();
      auto violations = validate(sys);
      if (violations.empty()) {
        std::size_t n = std::visit(
            [](auto const& x) {
              if constexpr (std::is_same_v<std::decay_t<decltype(x)>, NcaSystem>) {
                return x.number_of_rules();
              } else {
                return x.productions().size();
              }
            },
            sys);
        out << "ok: " << to_string(kind_of(sys)) << " with " << n
            << (kind_of(sys) == SystemKind::nca ? " rules" : " productions") << "\n";
        return success;
      }
      for (auto const& v : violations) {
        out << to_string(v) << "\n";
      }
      return negative;
    }

    int cmd_convert(Args const& a, std::ostream& out) {
      System      sys  = read_system(a.file);
      SystemKind  kind = kind_of(sys);
      std::string text;
      auto        need_grammar = [&]() -> Grammar const& {
        if (kind == SystemKind::nca) {
          throw Exit{usage_error, "--to " + a.to + " expects a grammar file"};
        }
        return std::get<Grammar>(sys);
      };
      auto need_nca = [&]() -> NcaSystem const& {
        if (kind != SystemKind::nca) {
          throw Exit{usage_error, "--to " + a.to + " expects an nca file"};
        }
        return std::get<NcaSystem>(sys);
      };
      try {
        if (a.to == "nca") {
          Grammar const& g = need_grammar();
          text = serialize(gcsg_to_nca(g.flavor() == Flavor::extended ? deanchor(g) : g));
        } else if (a.to == "gcsg") {
          text = serialize(nca_to_gcsg(need_nca()));
        } else if (a.to == "egcsg") {
          text = serialize(nca_to_extended_gcsg(need_nca()));
        } else if (a.to == "standard") {
          text = serialize(deanchor(need_grammar()));
        } else {
          text = serialize(eliminate_terminals(need_grammar()));
        }
      } catch (InputError const& e) {
        throw Exit{usage_error, e.what()};
      }
      write_text(a.output, text, out);
      return success;
    }

    int report(Verdict v, std::ostream& out) {
      out << to_string(v) << "\n";
      switch (v) {
        case Verdict::accepted:
          return success;
        case Verdict::rejected:
          return negative;
        case Verdict::budget_exceeded:
          return budget_exceeded;
      }
      return negative;
    }

    Decision decide_nca(NcaSystem const& sys, Word const& w, Limits const& limits) {
      try {
        return decide(sys, w, limits);
      } catch (InputError const& e) {
        throw Exit{usage_error, e.what()};
      }
    }

    int cmd_decide(Args const& a, std::ostream& out) {
      System sys = read_system(a.file);
      Word   w   = read_word(a.word);
      if (auto const* g = std::get_if<Grammar>(&sys)) {
        if (!a.trace_out.empty()) {
          throw Exit{usage_error, "--trace needs an nca file"};
        }
        try {
          return report(member(*g, w, a.limits), out);
        } catch (InputError const& e) {
          throw Exit{usage_error, e.what()};
        }
      }
      Decision d = decide_nca(std::get<NcaSystem>(sys), w, a.limits);
      if (d.witness && !a.trace_out.empty()) {
        write_text(a.trace_out, format_trace(*d.witness), out);
      }
      return report(d.verdict, out);
    }

    int cmd_enumerate(Args const& a, std::ostream& out) {
      System sys = read_system(a.file);
      Language lang;
      try {
        lang = language_of(sys, a.max_len, a.limits);
      } catch (BudgetExceeded const& e) {
        throw Exit{budget_exceeded, e.what()};
      } catch (InputError const& e) {
        throw Exit{usage_error, e.what()};
      }
      for (Word const& w : lang) {
        out << to_string(w) << "\n";
      }
      return success;
    }

    int cmd_equiv(Args const& a, std::ostream& out) {
      System   sa = read_system(a.file);
      System   sb = read_system(a.file_b);
      Language la, lb;
      try {
        la = language_of(sa, a.max_len, a.limits);
        lb = language_of(sb, a.max_len, a.limits);
      } catch (BudgetExceeded const& e) {
        throw Exit{budget_exceeded, e.what()};
      } catch (InputError const& e) {
        throw Exit{usage_error, e.what()};
      }
      std::vector<Word> diff;
      std::set_symmetric_difference(la.begin(), la.end(), lb.begin(), lb.end(),
                                    std::back_inserter(diff), ShortlexLess{});
      if (diff.empty()) {
        out << "equal: " << la.size() << " words up to length " << a.max_len << "\n";
        return success;
      }
      Word const& first = diff.front();
      out << "differ: " << to_string(first) << " is only in "
          << (la.contains(first) ? a.file : a.file_b) << "\n";
      return negative;
    }

    int cmd_trace(Args const& a, std::ostream& out, bool terminal) {
      System sys = read_system(a.file);
      auto const* nca = std::get_if<NcaSystem>(&sys);
      if (nca == nullptr) {
        throw Exit{usage_error, "trace needs an nca file"};
      }
      Decision d = decide_nca(*nca, read_word(a.word), a.limits);
      if (!d.witness) {
        return report(d.verdict, out);
      }
      History h = a.canonical ? canonicalize(*d.witness) : *d.witness;
      out << format_trace(h);
      if (terminal || a.diagram) {
        out << "\n" << render_diagram(h);
      }
      return success;
    }

    void add_limits(CLI::App* cmd, Args& a) {
      cmd->add_option("--max-expansions", a.limits.max_expansions,
                      "Search nodes expanded per word before giving up");
      cmd->add_option("--max-memo", a.limits.max_memo,
                      "Memo entries per word before giving up");
    }
  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err,
          bool                            out_is_terminal) {
    Args     a;
    CLI::App app{"Non-deterministic Cannon's algorithms and growing context-sensitive "
                 "grammars",
                 "cannon"};
    app.require_subcommand(1);

    auto* validate_cmd = app.add_subcommand("validate", "Check a system file");
    validate_cmd->add_option("FILE", a.file)->required();

    auto* convert_cmd = app.add_subcommand("convert", "Convert between system kinds");
    convert_cmd->add_option("--to", a.to, "nca | gcsg | egcsg | standard | noterm")
        ->required()
        ->check(CLI::IsMember({"nca", "gcsg", "egcsg", "standard", "noterm"}));
    convert_cmd->add_option("FILE", a.file)->required();
    convert_cmd->add_option("-o,--output", a.output, "Write here instead of stdout");

    auto* decide_cmd = app.add_subcommand("decide", "Decide membership of a word");
    decide_cmd->add_option("FILE", a.file)->required();
    decide_cmd->add_option("WORD", a.word, "Symbols separated by spaces, or _")->required();
    decide_cmd->add_option("--trace", a.trace_out, "Write the witness trace here");
    add_limits(decide_cmd, a);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List the language up to a length");
    enumerate_cmd->add_option("FILE", a.file)->required();
    enumerate_cmd->add_option("--max-len", a.max_len)->required();
    add_limits(enumerate_cmd, a);

    auto* equiv_cmd = app.add_subcommand("equiv", "Compare two languages up to a length");
    equiv_cmd->add_option("FILE_A", a.file)->required();
    equiv_cmd->add_option("FILE_B", a.file_b)->required();
    equiv_cmd->add_option("--max-len", a.max_len)->required();
    add_limits(equiv_cmd, a);

    auto* trace_cmd = app.add_subcommand("trace", "Print a witness reduction");
    trace_cmd->add_option("FILE", a.file)->required();
    trace_cmd->add_option("WORD", a.word)->required();
    trace_cmd->add_flag("--canonical", a.canonical, "Reorder to the left-first form");
    trace_cmd->add_flag("--diagram", a.diagram, "Append the diagram");
    add_limits(trace_cmd, a);

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      out << app.help();
      return success;
    } catch (CLI::CallForAllHelp const& e) {
      out << app.help("", CLI::AppFormatMode::All);
      return success;
    } catch (CLI::ParseError const& e) {
      err << e.what() << "\n" << app.help();
      return usage_error;
    }

    try {
      if (validate_cmd->parsed()) {
        return cmd_validate(a, out);
      }
      if (convert_cmd->parsed()) {
        return cmd_convert(a, out);
      }
      if (decide_cmd->parsed()) {
        return cmd_decide(a, out);
      }
      if (enumerate_cmd->parsed()) {
        return cmd_enumerate(a, out);
      }
      if (equiv_cmd->parsed()) {
        return cmd_equiv(a, out);
      }
      return cmd_trace(a, out, out_is_terminal);
    } catch (Exit const& e) {
      err << "cannon: " << e.message << "\n";
      return e.code;
    }
  }

}  // namespace cannon::cli
