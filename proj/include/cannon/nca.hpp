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

// Non-deterministic Cannon's algorithms: a terminal alphabet inside a working
// alphabet, and a set of strictly length-reducing rewriting rules, each
// optionally anchored to the left end, the right end, or the whole word.
// The language is the set of terminal words that some sequence of rule
// applications reduces to the empty word.

#ifndef CANNON_NCA_HPP_
#define CANNON_NCA_HPP_

#include <optional>
#include <string>
#include <vector>

#include "cannon/core.hpp"

namespace cannon {

  struct Rule {
    Word       lhs;
    Word       rhs;
    AnchorMode anchor = AnchorMode::none;

    bool operator==(Rule const&) const = default;
  };

  std::string to_string(Rule const& r);

  // A problem found by one of the validators.  `item` is the index of the
  // offending rule or production, when there is one.
  struct Violation {
    enum class Kind {
      not_length_reducing,
      symbol_outside_alphabet,
      terminals_not_in_working,
      empty_lhs,
      not_context_sensitive,
      not_growing,
      start_in_rhs,
      anchored_in_standard,
      anchored_start,
      start_not_nonterminal,
      overlapping_alphabets,
    };

    Kind                       kind;
    std::optional<std::size_t> item;
    std::string                message;
  };

  std::string to_string(Violation const& v);

  class NcaSystem {
   public:
    NcaSystem() = default;
    // Duplicate rules are dropped, keeping the first occurrence.
    NcaSystem(Alphabet alphabet, std::vector<Rule> rules);

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    std::vector<Rule> const& rules() const noexcept {
      return _rules;
    }
    Rule const& rule(std::size_t i) const {
      return _rules.at(i);
    }
    std::size_t number_of_rules() const noexcept {
      return _rules.size();
    }

    bool operator==(NcaSystem const&) const = default;

   private:
    Alphabet          _alphabet;
    std::vector<Rule> _rules;
  };

  // Every violation of length reduction, alphabet closure, and X ⊆ A.
  std::vector<Violation> validate(NcaSystem const& sys);

  // Throws InputError listing the violations, if any.
  void require_valid(NcaSystem const& sys);

  struct Move {
    std::size_t rule;
    std::size_t position;

    bool operator==(Move const&) const = default;
    auto operator<=>(Move const&) const = default;
  };

  // Applicable moves in (rule, position) order.
  std::vector<Move> legal_moves(NcaSystem const& sys, WordView w);

  bool is_legal(NcaSystem const& sys, WordView w, Move m);

  // Throws InputError when `m` is not legal on `w`.
  Word apply_move(NcaSystem const& sys, WordView w, Move m);

}  // namespace cannon

#endif  // CANNON_NCA_HPP_
