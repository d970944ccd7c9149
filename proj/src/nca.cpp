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

#include "cannon/nca.hpp"

#include <algorithm>

namespace cannon {

  std::string to_string(Rule const& r) {
    std::string out = to_string(r.lhs) + " -> " + to_string(r.rhs);
    if (r.anchor != AnchorMode::none) {
      out += " @";
      out += to_string(r.anchor);
    }
    return out;
  }

  std::string to_string(Violation const& v) {
    if (v.item) {
      return "#" + std::to_string(*v.item) + ": " + v.message;
    }
    return v.message;
  }

  NcaSystem::NcaSystem(Alphabet alphabet, std::vector<Rule> rules)
      : _alphabet(std::move(alphabet)) {
    _rules.reserve(rules.size());
    for (auto& r : rules) {
      if (std::find(_rules.begin(), _rules.end(), r) == _rules.end()) {
        _rules.push_back(std::move(r));
      }
    }
  }

  std::vector<Violation> validate(NcaSystem const& sys) {
    using Kind = Violation::Kind;
    std::vector<Violation> out;
    for (Symbol x : sys.alphabet().terminals) {
      if (!sys.alphabet().contains(x)) {
        out.push_back({Kind::terminals_not_in_working,
                       std::nullopt,
                       "terminal " + x.name() + " is not in the working alphabet"});
      }
    }
    for (std::size_t i = 0; i < sys.number_of_rules(); ++i) {
      Rule const& r = sys.rule(i);
      if (r.lhs.size() <= r.rhs.size()) {
        out.push_back({Kind::not_length_reducing, i, "not length-reducing: " + to_string(r)});
      }
      auto check = [&](Word const& w) {
        for (Symbol s : w) {
          if (!sys.alphabet().contains(s)) {
            out.push_back({Kind::symbol_outside_alphabet,
                           i,
                           "symbol outside working alphabet: " + s.name()});
          }
        }
      };
      check(r.lhs);
      check(r.rhs);
    }
    return out;
  }

  void require_valid(NcaSystem const& sys) {
    auto v = validate(sys);
    if (v.empty()) {
      return;
    }
    std::string msg = "invalid NCA:";
    for (auto const& x : v) {
      msg += "\n  " + to_string(x);
    }
    throw InputError(msg);
  }

  std::vector<Move> legal_moves(NcaSystem const& sys, WordView w) {
    std::vector<Move> out;
    for (std::size_t i = 0; i < sys.number_of_rules(); ++i) {
      Rule const& r = sys.rule(i);
      for (std::size_t pos : occurrences(w, r.lhs, r.anchor)) {
        out.push_back({i, pos});
      }
    }
    return out;
  }

  bool is_legal(NcaSystem const& sys, WordView w, Move m) {
    if (m.rule >= sys.number_of_rules()) {
      return false;
    }
    Rule const& r = sys.rule(m.rule);
    if (m.position > w.size() || r.lhs.size() > w.size() - m.position) {
      return false;
    }
    return anchor_allows(r.anchor, m.position, r.lhs.size(), w.size())
           && std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + m.position);
  }

  Word apply_move(NcaSystem const& sys, WordView w, Move m) {
    if (!is_legal(sys, w, m)) {
      throw InputError("illegal move rule#" + std::to_string(m.rule) + " @"
                       + std::to_string(m.position) + " on " + to_string(w));
    }
    Rule const& r = sys.rule(m.rule);
    return splice(w, m.position, r.lhs.size(), r.rhs);
  }

}  // namespace cannon
