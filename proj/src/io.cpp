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

#include "cannon/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace cannon {

  ParseError::ParseError(std::size_t line, std::size_t column, std::string const& what)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column)
                   + ": " + what),
        _line(line),
        _column(column) {}

  SystemKind kind_of(System const& sys) {
    if (std::holds_alternative<NcaSystem>(sys)) {
      return SystemKind::nca;
    }
    return std::get<Grammar>(sys).flavor() == Flavor::standard ? SystemKind::gcsg
                                                               : SystemKind::egcsg;
  }

  std::string_view to_string(SystemKind k) noexcept {
    switch (k) {
      case SystemKind::nca:
        return "nca";
      case SystemKind::gcsg:
        return "gcsg";
      case SystemKind::egcsg:
        return "egcsg";
    }
    return "?";
  }

  namespace {
    struct Token {
      std::string text;
      std::size_t column;  // 1-based
    };

    std::vector<Token> tokenize(std::string_view line) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
        }
        if (i == line.size() || line[i] == '#') {
          break;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) {
          ++j;
        }
        out.push_back({std::string(line.substr(i, j - i)), i + 1});
        i = j;
      }
      return out;
    }

    struct RawRule {
      Word       lhs;
      Word       rhs;
      AnchorMode anchor;
    };

    struct RawFile {
      std::optional<SystemKind>                              kind;
      std::map<std::string, std::pair<std::size_t, Word>>    lists;  // header -> (line, symbols)
      std::vector<RawRule>                                   rules;
      std::optional<std::string>                             body;   // "rules" or "productions"
    };

    Symbol symbol_at(Token const& t, std::size_t line) {
      if (!Symbol::is_valid_name(t.text)) {
        throw ParseError(line, t.column, "invalid symbol name '" + t.text + "'");
      }
      return Symbol(t.text);
    }

    Word word_of(std::vector<Token> const& toks,
                 std::size_t               first,
                 std::size_t               last,
                 std::size_t               line,
                 std::size_t               column_if_empty) {
      if (first == last) {
        throw ParseError(line, column_if_empty, "missing word (use '_' for the empty word)");
      }
      if (last - first == 1 && toks[first].text == EMPTY_WORD_TOKEN) {
        return {};
      }
      Word out;
      for (std::size_t i = first; i < last; ++i) {
        if (toks[i].text == EMPTY_WORD_TOKEN) {
          throw ParseError(line, toks[i].column, "'_' must stand alone");
        }
        out.push_back(symbol_at(toks[i], line));
      }
      return out;
    }

    RawRule parse_rule(std::vector<Token> const& toks, std::size_t line) {
      std::size_t end    = toks.size();
      AnchorMode  anchor = AnchorMode::none;
      if (toks.back().text.front() == '@') {
        auto const& a = toks.back().text;
        if (a == "@left") {
          anchor = AnchorMode::left;
        } else if (a == "@right") {
          anchor = AnchorMode::right;
        } else if (a == "@both") {
          anchor = AnchorMode::both;
        } else {
          throw ParseError(line, toks.back().column, "unknown anchor '" + a + "'");
        }
        --end;
      }
      auto arrow = std::find_if(toks.begin(), toks.begin() + end,
                                [](Token const& t) { return t.text == "->"; });
      if (arrow == toks.begin() + end) {
        throw ParseError(line, toks.front().column, "expected '->'");
      }
      std::size_t a = static_cast<std::size_t>(arrow - toks.begin());
      for (std::size_t i = a + 1; i < end; ++i) {
        if (toks[i].text == "->") {
          throw ParseError(line, toks[i].column, "more than one '->'");
        }
      }
      std::size_t after = arrow->column + 2;
      return {word_of(toks, 0, a, line, toks.front().column),
              word_of(toks, a + 1, end, line, after),
              anchor};
    }

    RawFile read(std::string_view text) {
      static std::vector<std::string> const list_keys
          = {"terminals", "alphabet", "nonterminals", "start"};
      RawFile            raw;
      std::istringstream in{std::string(text)};
      std::string        line;
      std::size_t        lineno = 0;
      while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) {
          continue;
        }
        std::string const& head = toks.front().text;
        if (head.size() > 1 && head.back() == ':') {
          std::string key = head.substr(0, head.size() - 1);
          if (key == "kind") {
            if (toks.size() != 2) {
              throw ParseError(lineno, toks.front().column, "expected 'kind: nca|gcsg|egcsg'");
            }
            if (toks[1].text == "nca") {
              raw.kind = SystemKind::nca;
            } else if (toks[1].text == "gcsg") {
              raw.kind = SystemKind::gcsg;
            } else if (toks[1].text == "egcsg") {
              raw.kind = SystemKind::egcsg;
            } else {
              throw ParseError(lineno, toks[1].column, "unknown kind '" + toks[1].text + "'");
            }
            continue;
          }
          if (key == "rules" || key == "productions") {
            if (toks.size() != 1) {
              throw ParseError(lineno, toks[1].column, "unexpected text after '" + head + "'");
            }
            if (raw.body) {
              throw ParseError(lineno, toks.front().column, "duplicate '" + head + "'");
            }
            raw.body = key;
            continue;
          }
          if (std::find(list_keys.begin(), list_keys.end(), key) != list_keys.end()) {
            if (raw.lists.contains(key)) {
              throw ParseError(lineno, toks.front().column, "duplicate '" + head + "'");
            }
            Word w;
            for (std::size_t i = 1; i < toks.size(); ++i) {
              w.push_back(symbol_at(toks[i], lineno));
            }
            raw.lists[key] = {lineno, std::move(w)};
            continue;
          }
          throw ParseError(lineno, toks.front().column, "unknown header '" + head + "'");
        }
        if (!raw.body) {
          throw ParseError(lineno, toks.front().column,
                           "rule before 'rules:' or 'productions:' header");
        }
        raw.rules.push_back(parse_rule(toks, lineno));
      }
      if (!raw.kind) {
        throw ParseError(lineno + 1, 1, "missing 'kind:' header");
      }
      return raw;
    }

    Word const& required(RawFile const& raw, std::string const& key, std::size_t eof) {
      auto it = raw.lists.find(key);
      if (it == raw.lists.end()) {
        throw ParseError(eof, 1, "missing '" + key + ":' header");
      }
      return it->second.second;
    }

    void forbid(RawFile const& raw, std::string const& key) {
      auto it = raw.lists.find(key);
      if (it != raw.lists.end()) {
        throw ParseError(it->second.first, 1, "'" + key + ":' does not belong in this kind");
      }
    }

    std::string line_of(Word const& w) {
      std::string out;
      for (Symbol s : w) {
        out += ' ';
        out += s.name();
      }
      return out;
    }

    std::string line_of(std::set<Symbol> const& s) {
      return line_of(Word(s.begin(), s.end()));
    }
  }  // namespace

  System parse_system_unchecked(std::string_view text) {
    RawFile     raw = read(text);
    std::size_t eof = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;
    if (*raw.kind == SystemKind::nca) {
      forbid(raw, "nonterminals");
      forbid(raw, "start");
      if (raw.body && *raw.body != "rules") {
        throw ParseError(eof, 1, "an nca lists 'rules:', not 'productions:'");
      }
      Word const& x = required(raw, "terminals", eof);
      Word const& a = required(raw, "alphabet", eof);
      Alphabet    alphabet{{x.begin(), x.end()}, {a.begin(), a.end()}};
      std::vector<Rule> rules;
      for (auto& r : raw.rules) {
        rules.push_back({std::move(r.lhs), std::move(r.rhs), r.anchor});
      }
      return NcaSystem(std::move(alphabet), std::move(rules));
    }
    forbid(raw, "alphabet");
    if (raw.body && *raw.body != "productions") {
      throw ParseError(eof, 1, "a grammar lists 'productions:', not 'rules:'");
    }
    Word const& x = required(raw, "terminals", eof);
    Word const& n = required(raw, "nonterminals", eof);
    Word const& s = required(raw, "start", eof);
    if (s.size() != 1) {
      throw ParseError(raw.lists.at("start").first, 1, "expected exactly one start symbol");
    }
    std::vector<Production> prods;
    for (auto& r : raw.rules) {
      prods.push_back({std::move(r.lhs), std::move(r.rhs), r.anchor});
    }
    return Grammar({n.begin(), n.end()},
                   {x.begin(), x.end()},
                   s.front(),
                   std::move(prods),
                   *raw.kind == SystemKind::gcsg ? Flavor::standard : Flavor::extended);
  }

  std::vector<Violation> validate(System const& sys) {
    return std::visit([](auto const& x) { return cannon::validate(x); }, sys);
  }

  System parse_system(std::string_view text) {
    System sys = parse_system_unchecked(text);
    std::visit([](auto const& x) { require_valid(x); }, sys);
    return sys;
  }

  System load_system(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InputError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_system(buf.str());
  }

  std::string serialize(NcaSystem const& sys) {
    std::string out = "kind: nca\n";
    out += "terminals:" + line_of(sys.alphabet().terminals) + "\n";
    out += "alphabet:" + line_of(sys.alphabet().working) + "\n";
    out += "rules:\n";
    for (auto const& r : sys.rules()) {
      out += to_string(r) + "\n";
    }
    return out;
  }

  std::string serialize(Grammar const& g) {
    std::string out = "kind: ";
    out += g.flavor() == Flavor::standard ? "gcsg" : "egcsg";
    out += "\nterminals:" + line_of(g.terminals()) + "\n";
    out += "nonterminals:" + line_of(g.nonterminals()) + "\n";
    out += "start: " + g.start().name() + "\n";
    out += "productions:\n";
    for (auto const& p : g.productions()) {
      out += to_string(p) + "\n";
    }
    return out;
  }

  std::string serialize(System const& sys) {
    return std::visit([](auto const& x) { return serialize(x); }, sys);
  }

  ////////////////////////////////////////////////////////////////////////
  // Traces
  ////////////////////////////////////////////////////////////////////////

  std::string format_trace(History const& h) {
    std::string out;
    for (std::size_t t = 0; t < h.size(); ++t) {
      auto const& ev = h.events()[t];
      out += std::to_string(t) + " | " + to_string(h.word(t)) + " | rule#"
             + std::to_string(ev.rule) + " @" + std::to_string(ev.position) + "\n";
    }
    out += std::to_string(h.size()) + " | " + to_string(h.end_word()) + " | end\n";
    return out;
  }

  History parse_trace(NcaSystem const& sys, std::string_view text) {
    std::istringstream       in{std::string(text)};
    std::string              line;
    std::size_t              lineno = 0;
    std::optional<Word>      start;
    Word                     current;
    std::vector<Move>        moves;
    bool                     ended = false;
    while (std::getline(in, line)) {
      ++lineno;
      if (tokenize(line).empty()) {
        continue;
      }
      if (ended) {
        throw ParseError(lineno, 1, "text after the 'end' step");
      }
      auto bar1 = line.find('|');
      auto bar2 = bar1 == std::string::npos ? bar1 : line.find('|', bar1 + 1);
      if (bar2 == std::string::npos) {
        throw ParseError(lineno, 1, "expected 't | word | step'");
      }
      Word word;
      try {
        word = parse_word(line.substr(bar1 + 1, bar2 - bar1 - 1));
      } catch (InputError const& e) {
        throw ParseError(lineno, bar1 + 2, e.what());
      }
      if (!start) {
        start   = word;
        current = word;
      } else if (word != current) {
        throw ParseError(lineno, bar1 + 2,
                         "word does not match the replay: expected " + to_string(current));
      }
      auto step = tokenize(line.substr(bar2 + 1));
      if (step.size() == 1 && step[0].text == "end") {
        ended = true;
        continue;
      }
      if (step.size() == 1 && step[0].text == "-") {
        continue;
      }
      if (step.size() != 2 || !step[0].text.starts_with("rule#")
          || !step[1].text.starts_with("@")) {
        throw ParseError(lineno, bar2 + 2, "expected 'rule#k @pos', '-' or 'end'");
      }
      Move m{};
      try {
        m.rule     = std::stoul(step[0].text.substr(5));
        m.position = std::stoul(step[1].text.substr(1));
      } catch (std::exception const&) {
        throw ParseError(lineno, bar2 + 2, "malformed rule number or position");
      }
      try {
        current = apply_move(sys, current, m);
      } catch (InputError const& e) {
        throw ParseError(lineno, bar2 + 2, e.what());
      }
      moves.push_back(m);
    }
    if (!start) {
      throw ParseError(lineno + 1, 1, "empty trace");
    }
    return History(sys, *start, moves);
  }

  ////////////////////////////////////////////////////////////////////////
  // Diagrams
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(Rational const& q) {
    if (q.denominator() == 1) {
      return std::to_string(q.numerator());
    }
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
  }

  std::string to_string(Interval const& i) {
    return "[" + to_string(i.lo) + "," + to_string(i.hi) + ")";
  }

  std::string render_diagram(History const& h) {
    Geometry    g = geometry(h);
    std::string out;
    for (std::size_t t = 0; t <= h.size(); ++t) {
      out += "row " + std::to_string(t) + ":";
      auto row = h.row(t);
      if (row.empty()) {
        out += " _";
      }
      for (LetterId l : row) {
        auto const& lg = g.letters[l];
        out += "  " + h.letters()[l].symbol.name() + to_string(lg.interval);
        if (lg.generation > 0) {
          out += "g" + std::to_string(lg.generation);
        }
      }
      out += "\n";
      if (t < h.size()) {
        auto const& ev = h.events()[t];
        out += "  --- rule#" + std::to_string(ev.rule) + " ("
               + to_string(h.system().rule(ev.rule)) + ") on " + to_string(g.lines[t])
               + "\n";
      }
    }
    return out;
  }

}  // namespace cannon
