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

#include "cannon/search.hpp"

#include <unordered_set>

namespace cannon {

  std::string_view to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::accepted:
        return "accepted";
      case Verdict::rejected:
        return "rejected";
      case Verdict::budget_exceeded:
        return "budget exceeded";
    }
    return "?";
  }

  namespace {
    struct OutOfBudget {};

    class Reducer {
     public:
      Reducer(NcaSystem const& sys, Limits const& limits, MoveOrder const& order)
          : _sys(sys), _limits(limits), _order(order) {}

      bool reduces(Word const& w) {
        if (w.empty()) {
          return true;
        }
        if (_dead.contains(w)) {
          return false;
        }
        if (++_expansions > _limits.max_expansions) {
          throw OutOfBudget{};
        }
        auto moves = legal_moves(_sys, w);
        if (_order) {
          _order(moves);
        }
        for (Move m : moves) {
          Rule const& r = _sys.rule(m.rule);
          _path.push_back(m);
          if (reduces(splice(w, m.position, r.lhs.size(), r.rhs))) {
            return true;
          }
          _path.pop_back();
        }
        _dead.insert(w);
        if (_dead.size() > _limits.max_memo) {
          throw OutOfBudget{};
        }
        return false;
      }

      std::vector<Move> const& path() const noexcept {
        return _path;
      }
      std::size_t expansions() const noexcept {
        return _expansions;
      }

     private:
      NcaSystem const&                   _sys;
      Limits const&                      _limits;
      MoveOrder const&                   _order;
      std::unordered_set<Word, WordHash> _dead;
      std::vector<Move>                  _path;
      std::size_t                        _expansions = 0;
    };
  }  // namespace

  Decision reduce_to_empty(NcaSystem const& sys,
                           WordView         w,
                           Limits const&    limits,
                           MoveOrder const& order) {
    Reducer  reducer(sys, limits, order);
    Decision out;
    Word     start(w.begin(), w.end());
    try {
      if (reducer.reduces(start)) {
        out.verdict = Verdict::accepted;
        out.witness.emplace(sys, start, reducer.path());
      } else {
        out.verdict = Verdict::rejected;
      }
    } catch (OutOfBudget const&) {
      out.verdict = Verdict::budget_exceeded;
    }
    out.expansions = reducer.expansions();
    return out;
  }

  Decision decide(NcaSystem const& sys, WordView w, Limits const& limits) {
    for (Symbol s : w) {
      if (!sys.alphabet().is_terminal(s)) {
        throw InputError("decide: symbol '" + s.name() + "' is not a terminal");
      }
    }
    return reduce_to_empty(sys, w, limits);
  }

  void for_each_word(std::vector<Symbol> const&              letters,
                     std::size_t                             max_len,
                     std::function<void(Word const&)> const& f) {
    f(Word{});
    if (letters.empty()) {
      return;
    }
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<std::size_t> digits(len, 0);
      Word                     w(len, letters.front());
      while (true) {
        f(w);
        std::size_t i = len;
        while (i > 0 && digits[i - 1] + 1 == letters.size()) {
          digits[i - 1] = 0;
          w[i - 1]      = letters.front();
          --i;
        }
        if (i == 0) {
          break;
        }
        ++digits[i - 1];
        w[i - 1] = letters[digits[i - 1]];
      }
    }
  }

  Language enumerate_language(NcaSystem const& sys,
                              std::size_t      max_len,
                              Limits const&    limits,
                              std::size_t      guard) {
    if (max_len > guard) {
      throw InputError("enumerate_language: max length " + std::to_string(max_len)
                       + " exceeds guard " + std::to_string(guard));
    }
    std::vector<Symbol> letters(sys.alphabet().terminals.begin(),
                                sys.alphabet().terminals.end());
    Language out;
    for_each_word(letters, max_len, [&](Word const& w) {
      auto d = reduce_to_empty(sys, w, limits);
      if (d.verdict == Verdict::budget_exceeded) {
        throw BudgetExceeded("enumerate_language: budget exceeded on " + to_string(w));
      }
      if (d.verdict == Verdict::accepted) {
        out.insert(w);
      }
    });
    return out;
  }

}  // namespace cannon
