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

#include "cannon/grammar.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace cannon {

  std::string to_string(Production const& p) {
    return to_string(Rule{p.lhs, p.rhs, p.anchor});
  }

  Grammar::Grammar(std::set<Symbol>        nonterminals,
                   std::set<Symbol>        terminals,
                   Symbol                  start,
                   std::vector<Production> productions,
                   Flavor                  flavor)
      : _nonterminals(std::move(nonterminals)),
        _terminals(std::move(terminals)),
        _start(start),
        _flavor(flavor) {
    _productions.reserve(productions.size());
    for (auto& p : productions) {
      if (std::find(_productions.begin(), _productions.end(), p) == _productions.end()) {
        _productions.push_back(std::move(p));
      }
    }
  }

  bool Grammar::derives_empty() const {
    return std::any_of(_productions.begin(), _productions.end(), [this](auto const& p) {
      return is_start_production(p) && p.rhs.empty();
    });
  }

  namespace {
    std::vector<Violation> check(Grammar const& g, bool growing) {
      using Kind = Violation::Kind;
      std::vector<Violation> out;
      for (Symbol s : g.terminals()) {
        if (g.nonterminals().contains(s)) {
          out.push_back({Kind::overlapping_alphabets,
                         std::nullopt,
                         "symbol " + s.name() + " is both terminal and nonterminal"});
        }
      }
      if (!g.nonterminals().contains(g.start())) {
        out.push_back({Kind::start_not_nonterminal,
                       std::nullopt,
                       "start symbol " + g.start().name() + " is not a nonterminal"});
      }
      bool start_in_some_rhs = false;
      for (auto const& p : g.productions()) {
        start_in_some_rhs
            = start_in_some_rhs
              || std::find(p.rhs.begin(), p.rhs.end(), g.start()) != p.rhs.end();
      }

      for (std::size_t i = 0; i < g.productions().size(); ++i) {
        Production const& p        = g.productions()[i];
        bool              is_start = g.is_start_production(p);
        if (p.lhs.empty()) {
          out.push_back({Kind::empty_lhs, i, "empty left-hand side: " + to_string(p)});
        }
        for (Word const* w : {&p.lhs, &p.rhs}) {
          for (Symbol s : *w) {
            if (!g.nonterminals().contains(s) && !g.terminals().contains(s)) {
              out.push_back({Kind::symbol_outside_alphabet,
                             i,
                             "symbol outside alphabet: " + s.name()});
            }
          }
        }
        if (is_start && p.rhs.empty()) {
          if (start_in_some_rhs) {
            out.push_back({Kind::not_context_sensitive,
                           i,
                           "start -> _ needs the start symbol absent from every "
                           "right-hand side"});
          }
        } else if (p.lhs.size() > p.rhs.size()) {
          out.push_back({Kind::not_context_sensitive,
                         i,
                         "not context-sensitive: " + to_string(p)});
        }
        if (growing) {
          if (std::find(p.rhs.begin(), p.rhs.end(), g.start()) != p.rhs.end()) {
            out.push_back({Kind::start_in_rhs, i, "start symbol in rhs: " + to_string(p)});
          }
          if (!is_start && p.lhs.size() >= p.rhs.size()) {
            out.push_back({Kind::not_growing, i, "not growing: " + to_string(p)});
          }
        }
        if (p.anchor != AnchorMode::none) {
          if (g.flavor() == Flavor::standard) {
            out.push_back({Kind::anchored_in_standard,
                           i,
                           "anchored production in a standard grammar: " + to_string(p)});
          }
          if (is_start) {
            out.push_back({Kind::anchored_start,
                           i,
                           "start productions cannot be anchored: " + to_string(p)});
          }
        }
      }
      return out;
    }
  }  // namespace

  std::vector<Violation> validate(Grammar const& g) {
    return check(g, true);
  }

  std::vector<Violation> validate_context_sensitive(Grammar const& g) {
    return check(g, false);
  }

  void require_valid(Grammar const& g) {
    auto v = validate(g);
    if (v.empty()) {
      return;
    }
    std::string msg = "invalid grammar:";
    for (auto const& x : v) {
      msg += "\n  " + to_string(x);
    }
    throw InputError(msg);
  }

  std::vector<Word> derive_successors(Grammar const& g, WordView sentential) {
    std::vector<Word>                  out;
    std::unordered_set<Word, WordHash> seen;
    for (auto const& p : g.productions()) {
      if (p.lhs.empty()) {
        continue;
      }
      for (std::size_t pos : occurrences(sentential, p.lhs, p.anchor)) {
        Word next = splice(sentential, pos, p.lhs.size(), p.rhs);
        if (seen.insert(next).second) {
          out.push_back(std::move(next));
        }
      }
    }
    return out;
  }

  Language generate_language(Grammar const& g,
                             std::size_t    max_len,
                             Limits const&  limits,
                             std::size_t    guard) {
    require_valid(g);
    if (max_len > guard) {
      throw InputError("generate_language: max length " + std::to_string(max_len)
                       + " exceeds guard " + std::to_string(guard));
    }
    Word                               root{g.start()};
    std::unordered_set<Word, WordHash> seen{root};
    std::vector<Word>                  frontier{root};
    Language                           out;
    auto is_terminal_word = [&](Word const& w) {
      return std::all_of(w.begin(), w.end(), [&](Symbol s) { return g.is_terminal(s); });
    };
    while (!frontier.empty()) {
      std::vector<Word> next;
      for (Word const& form : frontier) {
        for (Word& succ : derive_successors(g, form)) {
          if (succ.size() > max_len || seen.contains(succ)) {
            continue;
          }
          if (std::find(succ.begin(), succ.end(), g.start()) != succ.end()) {
            throw std::logic_error("generate_language: start symbol reappeared in "
                                   + to_string(succ));
          }
          seen.insert(succ);
          if (seen.size() > limits.max_memo) {
            throw BudgetExceeded("generate_language: more than "
                                 + std::to_string(limits.max_memo)
                                 + " sentential forms");
          }
          if (is_terminal_word(succ)) {
            out.insert(succ);
          }
          next.push_back(std::move(succ));
        }
      }
      frontier = std::move(next);
    }
    return out;
  }

  NcaSystem reversed_system(Grammar const& g) {
    Alphabet alphabet;
    alphabet.terminals = g.terminals();
    alphabet.working   = g.terminals();
    for (Symbol n : g.nonterminals()) {
      if (n != g.start()) {
        alphabet.working.insert(n);
      }
    }
    std::vector<Rule> rules;
    for (auto const& p : g.productions()) {
      if (g.is_start_production(p)) {
        if (!p.rhs.empty()) {
          rules.push_back({p.rhs, {}, AnchorMode::both});
        }
      } else {
        rules.push_back({p.rhs, p.lhs, p.anchor});
      }
    }
    return NcaSystem(std::move(alphabet), std::move(rules));
  }

  Verdict member(Grammar const& g, WordView w, Limits const& limits) {
    require_valid(g);
    for (Symbol s : w) {
      if (!g.is_terminal(s)) {
        throw InputError("member: symbol '" + s.name() + "' is not a terminal");
      }
    }
    if (w.empty()) {
      return g.derives_empty() ? Verdict::accepted : Verdict::rejected;
    }
    return reduce_to_empty(reversed_system(g), w, limits).verdict;
  }

}  // namespace cannon
