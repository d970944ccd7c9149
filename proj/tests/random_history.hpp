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

// Random histories and the checks run on them, shared by the unit tests and
// the acceptance binary.

#ifndef CANNON_TESTS_RANDOM_HISTORY_HPP_
#define CANNON_TESTS_RANDOM_HISTORY_HPP_

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cannon/history.hpp"
#include "cannon/nca.hpp"
#include "oracles.hpp"

namespace cannon::oracle {

  inline std::vector<NcaSystem> const& history_systems() {
    static std::vector<NcaSystem> const systems = [] {
      std::vector<NcaSystem> out;
      for (auto const* name : {"fg2.nca", "ab.nca", "anbn.nca", "mixed.nca"}) {
        out.push_back(load_nca(name));
      }
      return out;
    }();
    return systems;
  }

  // A word that reduces to the empty word: rules run backwards from the
  // empty word, at random places, while the word stays within `max_len`.
  inline Word grow_reducible(NcaSystem const& sys, std::mt19937& rng, std::size_t max_len) {
    Word                                       cur;
    std::uniform_int_distribution<std::size_t> pick_rule(0, sys.number_of_rules() - 1);
    for (int attempt = 0; attempt < 200; ++attempt) {
      Rule const&              r = sys.rule(pick_rule(rng));
      std::vector<std::size_t> spots;
      if (cur.size() - r.rhs.size() + r.lhs.size() > max_len) {
        continue;
      }
      if (r.rhs.empty()) {
        for (std::size_t i = 0; i <= cur.size(); ++i) {
          spots.push_back(i);
        }
      } else {
        spots = occurrences(cur, r.rhs, AnchorMode::none);
      }
      std::erase_if(spots, [&](std::size_t i) {
        bool left  = i == 0;
        bool right = i + r.rhs.size() == cur.size();
        return (anchored_left(r.anchor) && !left) || (anchored_right(r.anchor) && !right);
      });
      if (spots.empty()) {
        continue;
      }
      std::uniform_int_distribution<std::size_t> pick(0, spots.size() - 1);
      cur = splice(cur, spots[pick(rng)], r.rhs.size(), r.lhs);
    }
    return cur;
  }

  // A random system from the fixtures and a start word of length at most
  // `max_len` (uniformly random over the terminals one time in four, else
  // grown backwards from the empty word), then random legal moves until none
  // is left.
  inline History random_history(std::mt19937& rng, std::size_t max_len = 12) {
    auto const&                                systems = history_systems();
    std::uniform_int_distribution<std::size_t> pick_sys(0, systems.size() - 1);
    NcaSystem const&                           sys = systems[pick_sys(rng)];

    Word start;
    if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
      std::vector<Symbol> letters(sys.alphabet().terminals.begin(),
                                  sys.alphabet().terminals.end());
      std::uniform_int_distribution<std::size_t> pick_len(0, max_len);
      std::uniform_int_distribution<std::size_t> pick_letter(0, letters.size() - 1);
      start.assign(pick_len(rng), letters[0]);
      for (auto& s : start) {
        s = letters[pick_letter(rng)];
      }
    } else {
      start = grow_reducible(sys, rng, max_len);
    }

    std::vector<Move> moves;
    Word              cur = start;
    for (;;) {
      auto legal = legal_moves(sys, cur);
      if (legal.empty()) {
        break;
      }
      std::uniform_int_distribution<std::size_t> pick(0, legal.size() - 1);
      Move                                       m = legal[pick(rng)];
      cur = apply_move(sys, cur, m);
      moves.push_back(m);
    }
    return History(sys, start, moves);
  }

  // Indices i at which events i and i+1 may be exchanged.
  inline std::vector<std::size_t> swappable(History const& h) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + 1 < h.size(); ++i) {
      if (!depends_on(h, i, i + 1)) {
        out.push_back(i);
      }
    }
    return out;
  }

  inline History random_swap_walk(History h, std::mt19937& rng, std::size_t steps) {
    for (std::size_t k = 0; k < steps; ++k) {
      auto options = swappable(h);
      if (options.empty()) {
        break;
      }
      std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
      h = swap_adjacent(h, options[pick(rng)]);
    }
    return h;
  }

  // Letters of every row are ascending and disjoint, each letter's width is
  // the length of its interval, and whatever part of [0, |w0|) a row leaves
  // uncovered lies under the lines of earlier erasing events.  Rows before
  // the first erasing event cover [0, |w0|) exactly.
  inline bool widths_conserved(History const& h, std::string* why = nullptr) {
    auto fail = [&](std::string msg) {
      if (why != nullptr) {
        *why = std::move(msg);
      }
      return false;
    };
    auto const&    geo   = h.letter_geometry();
    Rational const total = static_cast<std::int64_t>(h.start().size());
    std::vector<Interval> erased;
    for (std::size_t t = 0; t <= h.size(); ++t) {
      if (t > 0) {
        auto const& e = h.events()[t - 1];
        if (e.produced.empty()) {
          erased.push_back(h.line(e.id));
        }
      }
      std::sort(erased.begin(), erased.end(),
                [](Interval const& x, Interval const& y) { return x.lo < y.lo; });
      auto covered = [&](Rational lo, Rational hi) {
        for (auto const& e : erased) {
          if (e.lo <= lo && lo < e.hi) {
            lo = e.hi;
          }
          if (lo >= hi) {
            return true;
          }
        }
        return lo >= hi;
      };

      Rational sum = 0, gaps = 0, at = 0;
      for (LetterId id : h.row(t)) {
        auto const& g = geo[id];
        if (g.width != g.interval.width() || g.width <= Rational(0)) {
          return fail("row " + std::to_string(t) + ": width differs from interval");
        }
        if (g.interval.lo < at) {
          return fail("row " + std::to_string(t) + ": letters overlap");
        }
        if (g.interval.lo > at) {
          if (!covered(at, g.interval.lo)) {
            return fail("row " + std::to_string(t) + ": uncovered gap");
          }
          gaps += g.interval.lo - at;
        }
        sum += g.width;
        at = g.interval.hi;
      }
      if (at > total) {
        return fail("row " + std::to_string(t) + ": past the right end");
      }
      if (at < total) {
        if (!covered(at, total)) {
          return fail("row " + std::to_string(t) + ": uncovered right gap");
        }
        gaps += total - at;
      }
      if (sum + gaps != total) {
        return fail("row " + std::to_string(t) + ": widths do not add up");
      }
      if (erased.empty() && sum != total) {
        return fail("row " + std::to_string(t) + ": width sum differs from |w0|");
      }
    }
    return true;
  }

  // Two disjoint sets of time indices with nothing comparable across them,
  // both non-empty; empty sets when the history has no such pair.
  inline std::pair<std::set<std::size_t>, std::set<std::size_t>> random_independent_sets(
      History const& h,
      std::mt19937&  rng) {
    auto                                  order = precedence(h).order;
    std::bernoulli_distribution           coin(0.5);
    std::uniform_int_distribution<std::size_t> pick(0, h.size() == 0 ? 0 : h.size() - 1);
    for (int attempt = 0; attempt < 50 && h.size() >= 2; ++attempt) {
      std::set<std::size_t> first, second;
      first.insert(pick(rng));
      for (std::size_t i = 0; i < h.size(); ++i) {
        if (coin(rng) && coin(rng)) {
          first.insert(i);
        }
      }
      for (std::size_t j = 0; j < h.size(); ++j) {
        if (first.contains(j)) {
          continue;
        }
        bool free = std::none_of(first.begin(), first.end(),
                                 [&](std::size_t i) { return order.comparable(i, j); });
        if (free && coin(rng)) {
          second.insert(j);
        }
      }
      if (!second.empty()) {
        return {first, second};
      }
    }
    return {};
  }

}  // namespace cannon::oracle

#endif  // CANNON_TESTS_RANDOM_HISTORY_HPP_
