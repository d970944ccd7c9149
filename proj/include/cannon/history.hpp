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

// Reduction histories w0 -> w1 -> ... -> wn of an NCA, viewed as diagrams.
//
// Every letter that ever appears gets a LetterId.  The letters of w0 have
// width 1 and sit on consecutive unit intervals; the letters produced by a
// substitution split the substitution line (the hull of the consumed
// letters) into equal parts and are one generation older than the oldest
// consumed letter.  None of this depends on the order in which independent
// substitutions happen, which is what lets equivalent histories be compared
// event by event.
//
// Two substitutions are dependent when the later one consumes a letter the
// earlier one produced, when their lines overlap (a substitution that
// produces nothing can leave a gap that a later line spans), or when the
// later one is anchored to the side on which the earlier one lies.  The
// precedence order is the transitive closure of that relation; incomparable
// neighbours can always be swapped.

#ifndef CANNON_HISTORY_HPP_
#define CANNON_HISTORY_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "cannon/core.hpp"
#include "cannon/nca.hpp"

namespace cannon {

  using Rational = boost::rational<std::int64_t>;

  struct Interval {
    Rational lo;
    Rational hi;

    Rational width() const {
      return hi - lo;
    }
    bool overlaps(Interval const& other) const {
      return lo < other.hi && other.lo < hi;
    }
    bool operator==(Interval const&) const = default;
  };

  struct LetterGeometry {
    Rational    width;
    std::size_t generation;
    Interval    interval;
  };

  using LetterId = std::size_t;
  using EventId  = std::size_t;

  struct SubstitutionEvent {
    // Stable identity: the index of this event in the history it was first
    // replayed in.  Swaps and reorderings carry it along.
    EventId               id;
    std::size_t           rule;
    std::size_t           position;
    std::vector<LetterId> consumed;
    std::vector<LetterId> produced;
  };

  struct Letter {
    Symbol                 symbol;
    std::optional<EventId> producer;  // empty for letters of w0
  };

  class History {
   public:
    // Replays `moves` from `start`; throws InputError on the first illegal
    // move.  Letters are numbered w0 first, then in order of production.
    History(NcaSystem system, Word start, std::span<Move const> moves);

    NcaSystem const& system() const noexcept {
      return _system;
    }
    Word const& start() const noexcept {
      return _start;
    }
    std::vector<SubstitutionEvent> const& events() const noexcept {
      return _events;
    }
    std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _events.size();
    }

    std::vector<Move> moves() const;

    // Letters present after the first `t` substitutions, left to right.
    std::vector<LetterId> row(std::size_t t) const;
    Word                  word(std::size_t t) const;
    Word                  end_word() const {
      return word(size());
    }

    // Time index of the event with stable id `id`.
    std::size_t index_of(EventId id) const;

    // The same substitutions performed in the order given by `order` (a
    // permutation of time indices), letter ids kept.  Empty when some step
    // would not be legal in that order.
    std::optional<History> permuted(std::span<std::size_t const> order) const;

    // Same system, same start word, same move sequence.
    bool operator==(History const& other) const;

    // Line of the event with stable id `id`; independent of event order.
    Interval const& line(EventId id) const {
      return _lines.at(id);
    }

    std::vector<LetterGeometry> const& letter_geometry() const noexcept {
      return _letter_geometry;
    }

   private:
    History() = default;
    void compute_geometry();

    NcaSystem                      _system;
    Word                           _start;
    std::vector<SubstitutionEvent> _events;
    std::vector<Letter>            _letters;
    std::vector<LetterGeometry>    _letter_geometry;  // by LetterId
    std::vector<Interval>          _lines;            // by EventId
  };

  struct Geometry {
    std::vector<LetterGeometry> letters;  // indexed by LetterId
    std::vector<Interval>       lines;    // indexed by time index
  };

  Geometry geometry(History const& h);

  // A strict partial order over the events of one history, indexed by time.
  class Precedence {
   public:
    explicit Precedence(std::size_t n) : _n(n), _less(n * n, 0) {}

    bool precedes(std::size_t a, std::size_t b) const {
      return _less[a * _n + b] != 0;
    }
    bool comparable(std::size_t a, std::size_t b) const {
      return precedes(a, b) || precedes(b, a);
    }
    std::size_t size() const noexcept {
      return _n;
    }

    void set(std::size_t a, std::size_t b) {
      _less[a * _n + b] = 1;
    }
    void close();

    // Direct successors in the transitive reduction.
    std::vector<std::size_t> covers(std::size_t a) const;

   private:
    std::size_t               _n;
    std::vector<std::uint8_t> _less;
  };

  // The order generated by "consumes a letter produced by" alone.
  Precedence provenance_order(History const& h);

  struct PrecedenceReport {
    Precedence order;
    // Every incomparable pair as (left, right) time indices.
    std::vector<std::pair<std::size_t, std::size_t>> left_right;
  };

  PrecedenceReport precedence(History const& h);

  // For incomparable events: does `a` lie to the left of `b`?  Lines meet at
  // most at an endpoint; ties fall back to the rule index.
  bool lies_left_of(History const& h, std::size_t a, std::size_t b);

  // The generating relation: does event `b` depend directly on the earlier
  // event `a` (time indices, a < b)?
  bool depends_on(History const& h, std::size_t a, std::size_t b);

  // Events i and i+1 performed in the opposite order.  Throws InputError
  // when they are comparable.
  History swap_adjacent(History const& h, std::size_t i);

  // Applies swap_adjacent at each index in turn.
  History replay_swaps(History const& h, std::span<std::size_t const> swaps);

  struct Reordering {
    History                  history;
    std::vector<std::size_t> swaps;  // swap_adjacent indices, in order
  };

  // An equivalent history in which every event of `first` precedes every
  // event of `second` (time indices of `h`).  Throws InputError when the
  // sets intersect or some pair across them is comparable.
  Reordering reorder_before(History const&               h,
                            std::set<std::size_t> const& first,
                            std::set<std::size_t> const& second);

  // The equivalent history in which incomparable events happen left first.
  History canonicalize(History const& h);

  bool equivalent(History const& a, History const& b);

}  // namespace cannon

#endif  // CANNON_HISTORY_HPP_
