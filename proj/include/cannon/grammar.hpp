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

// Growing context-sensitive grammars.  Every production u -> v either has
// u = start or |u| < |v|, and the start symbol never occurs on a right-hand
// side; start -> _ is allowed.  Extended grammars may anchor non-start
// productions to the ends of the sentential form, with the same semantics
// as anchored NCA rules.

#ifndef CANNON_GRAMMAR_HPP_
#define CANNON_GRAMMAR_HPP_

#include <set>
#include <vector>

#include "cannon/core.hpp"
#include "cannon/nca.hpp"
#include "cannon/search.hpp"

namespace cannon {

  struct Production {
    Word       lhs;
    Word       rhs;
    AnchorMode anchor = AnchorMode::none;

    bool operator==(Production const&) const = default;
  };

  std::string to_string(Production const& p);

  enum class Flavor { standard, extended };

  class Grammar {
   public:
    // Duplicate productions are dropped, keeping the first occurrence.
    Grammar(std::set<Symbol>        nonterminals,
            std::set<Symbol>        terminals,
            Symbol                  start,
            std::vector<Production> productions,
            Flavor                  flavor = Flavor::standard);

    std::set<Symbol> const& nonterminals() const noexcept {
      return _nonterminals;
    }
    std::set<Symbol> const& terminals() const noexcept {
      return _terminals;
    }
    Symbol start() const noexcept {
      return _start;
    }
    std::vector<Production> const& productions() const noexcept {
      return _productions;
    }
    Flavor flavor() const noexcept {
      return _flavor;
    }

    bool is_terminal(Symbol s) const {
      return _terminals.contains(s);
    }
    bool is_start_production(Production const& p) const {
      return p.lhs.size() == 1 && p.lhs.front() == _start;
    }
    // start -> _ is present.
    bool derives_empty() const;

    bool operator==(Grammar const&) const = default;

   private:
    std::set<Symbol>        _nonterminals;
    std::set<Symbol>        _terminals;
    Symbol                  _start;
    std::vector<Production> _productions;
    Flavor                  _flavor;
  };

  // Every violated structural, context-sensitivity and growing condition.
  std::vector<Violation> validate(Grammar const& g);

  // Only the conditions for a (possibly non-growing) context-sensitive
  // grammar, i.e. validate() without the growing checks.
  std::vector<Violation> validate_context_sensitive(Grammar const& g);

  void require_valid(Grammar const& g);

  // Sentential forms one production application away, duplicates removed.
  std::vector<Word> derive_successors(Grammar const& g, WordView sentential);

  // Terminal words of length <= max_len derivable from the start symbol.
  // Throws InputError on invalid grammars or past the guard, and
  // BudgetExceeded when more than limits.max_memo forms are visited.
  Language generate_language(Grammar const& g,
                             std::size_t    max_len,
                             Limits const&  limits = {},
                             std::size_t    guard  = DEFAULT_LENGTH_GUARD);

  // The productions read backwards as an NCA over the symbols other than the
  // start symbol: u -> v becomes v -> u with the same anchor, and start -> v
  // (v non-empty) becomes the both-anchored v -> _.
  NcaSystem reversed_system(Grammar const& g);

  // Whether the start symbol derives `w`, by searching the reversed system.
  Verdict member(Grammar const& g, WordView w, Limits const& limits = {});

}  // namespace cannon

#endif  // CANNON_GRAMMAR_HPP_
