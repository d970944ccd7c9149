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

#ifndef CANNON_SEARCH_HPP_
#define CANNON_SEARCH_HPP_

#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "cannon/core.hpp"
#include "cannon/history.hpp"
#include "cannon/nca.hpp"

namespace cannon {

  struct Limits {
    std::size_t max_expansions = 1'000'000;
    std::size_t max_memo       = 1'000'000;
  };

  inline constexpr std::size_t DEFAULT_LENGTH_GUARD = 12;

  // Raised by the enumerators when a search runs out of budget; decide()
  // reports the same condition as a verdict instead.
  class BudgetExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  enum class Verdict { accepted, rejected, budget_exceeded };

  std::string_view to_string(Verdict v) noexcept;

  struct Decision {
    Verdict                verdict = Verdict::rejected;
    std::optional<History> witness;
    std::size_t            expansions = 0;
  };

  // Hook for reordering the candidate moves at each node; used to check that
  // acceptance does not depend on exploration order.
  using MoveOrder = std::function<void(std::vector<Move>&)>;

  // Depth-first search for a reduction of `w` to the empty word, with a memo
  // of words already known not to reduce.  `w` may use any working symbol.
  Decision reduce_to_empty(NcaSystem const& sys,
                           WordView         w,
                           Limits const&    limits = {},
                           MoveOrder const& order  = {});

  // Membership of a terminal word.  Throws InputError when `w` has a symbol
  // outside the terminal alphabet.
  Decision decide(NcaSystem const& sys, WordView w, Limits const& limits = {});

  struct ShortlexLess {
    bool operator()(Word const& a, Word const& b) const {
      return shortlex_less(a, b);
    }
  };

  using Language = std::set<Word, ShortlexLess>;

  // Calls `f` on every word over `letters` of length at most `max_len`, in
  // shortlex order (given `letters` sorted).
  void for_each_word(std::vector<Symbol> const&        letters,
                     std::size_t                       max_len,
                     std::function<void(Word const&)> const& f);

  // Accepted terminal words of length <= max_len.  Throws InputError past the
  // guard and BudgetExceeded when some word exhausts its budget.
  Language enumerate_language(NcaSystem const& sys,
                              std::size_t      max_len,
                              Limits const&    limits = {},
                              std::size_t      guard  = DEFAULT_LENGTH_GUARD);

}  // namespace cannon

#endif  // CANNON_SEARCH_HPP_
