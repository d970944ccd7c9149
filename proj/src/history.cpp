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

#include "cannon/history.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace cannon {

  ////////////////////////////////////////////////////////////////////////
  // History
  ////////////////////////////////////////////////////////////////////////

  History::History(NcaSystem system, Word start, std::span<Move const> moves)
      : _system(std::move(system)), _start(std::move(start)) {
    std::vector<LetterId> row(_start.size());
    std::iota(row.begin(), row.end(), LetterId{0});
    for (Symbol s : _start) {
      _letters.push_back({s, std::nullopt});
    }
    Word current = _start;
    for (std::size_t t = 0; t < moves.size(); ++t) {
      Move m = moves[t];
      Word next = apply_move(_system, current, m);
      Rule const& r = _system.rule(m.rule);

      SubstitutionEvent ev{t, m.rule, m.position, {}, {}};
      ev.consumed.assign(row.begin() + m.position,
                         row.begin() + m.position + r.lhs.size());
      for (Symbol s : r.rhs) {
        ev.produced.push_back(_letters.size());
        _letters.push_back({s, t});
      }
      row.erase(row.begin() + m.position, row.begin() + m.position + r.lhs.size());
      row.insert(row.begin() + m.position, ev.produced.begin(), ev.produced.end());
      _events.push_back(std::move(ev));
      current = std::move(next);
    }
    compute_geometry();
  }

  void History::compute_geometry() {
    _letter_geometry.assign(_letters.size(), {});
    for (std::size_t i = 0; i < _start.size(); ++i) {
      _letter_geometry[i] = {1, 0, {Rational(i), Rational(i + 1)}};
    }
    _lines.assign(_events.size(), {});
    for (auto const& ev : _events) {
      auto const& first = _letter_geometry[ev.consumed.front()];
      auto const& last  = _letter_geometry[ev.consumed.back()];
      Interval    line{first.interval.lo, last.interval.hi};
      std::size_t gen = 0;
      for (LetterId c : ev.consumed) {
        gen = std::max(gen, _letter_geometry[c].generation);
      }
      _lines[ev.id] = line;
      if (ev.produced.empty()) {
        continue;
      }
      Rational w = line.width() / static_cast<std::int64_t>(ev.produced.size());
      for (std::size_t k = 0; k < ev.produced.size(); ++k) {
        Rational lo = line.lo + w * static_cast<std::int64_t>(k);
        _letter_geometry[ev.produced[k]] = {w, gen + 1, {lo, lo + w}};
      }
    }
  }

  std::vector<Move> History::moves() const {
    std::vector<Move> out;
    out.reserve(_events.size());
    for (auto const& ev : _events) {
      out.push_back({ev.rule, ev.position});
    }
    return out;
  }

  std::vector<LetterId> History::row(std::size_t t) const {
    if (t > _events.size()) {
      throw std::out_of_range("History::row: time " + std::to_string(t)
                              + " beyond " + std::to_string(_events.size()));
    }
    std::vector<LetterId> row(_start.size());
    std::iota(row.begin(), row.end(), LetterId{0});
    for (std::size_t i = 0; i < t; ++i) {
      auto const& ev = _events[i];
      auto        at = row.begin() + ev.position;
      row.erase(at, at + ev.consumed.size());
      row.insert(row.begin() + ev.position, ev.produced.begin(), ev.produced.end());
    }
    return row;
  }

  Word History::word(std::size_t t) const {
    Word out;
    for (LetterId l : row(t)) {
      out.push_back(_letters[l].symbol);
    }
    return out;
  }

  std::size_t History::index_of(EventId id) const {
    for (std::size_t i = 0; i < _events.size(); ++i) {
      if (_events[i].id == id) {
        return i;
      }
    }
    throw std::out_of_range("History::index_of: no event " + std::to_string(id));
  }

  std::optional<History> History::permuted(std::span<std::size_t const> order) const {
    if (order.size() != _events.size()) {
      return std::nullopt;
    }
    History out;
    out._system          = _system;
    out._start           = _start;
    out._letters         = _letters;
    out._letter_geometry = _letter_geometry;
    out._lines           = _lines;

    std::vector<LetterId> row(_start.size());
    std::iota(row.begin(), row.end(), LetterId{0});
    std::vector<bool> seen(_events.size(), false);
    for (std::size_t idx : order) {
      if (idx >= _events.size() || seen[idx]) {
        return std::nullopt;
      }
      seen[idx]     = true;
      auto const& ev = _events[idx];
      auto        it = std::find(row.begin(), row.end(), ev.consumed.front());
      if (it == row.end()) {
        return std::nullopt;
      }
      std::size_t pos = static_cast<std::size_t>(it - row.begin());
      if (row.size() - pos < ev.consumed.size()
          || !std::equal(ev.consumed.begin(), ev.consumed.end(), it)) {
        return std::nullopt;
      }
      AnchorMode anchor = _system.rule(ev.rule).anchor;
      if (!anchor_allows(anchor, pos, ev.consumed.size(), row.size())) {
        return std::nullopt;
      }
      row.erase(it, it + ev.consumed.size());
      row.insert(row.begin() + pos, ev.produced.begin(), ev.produced.end());
      SubstitutionEvent moved = ev;
      moved.position          = pos;
      out._events.push_back(std::move(moved));
    }
    return out;
  }

  bool History::operator==(History const& other) const {
    if (_system != other._system || _start != other._start
        || _events.size() != other._events.size()) {
      return false;
    }
    for (std::size_t i = 0; i < _events.size(); ++i) {
      if (_events[i].rule != other._events[i].rule
          || _events[i].position != other._events[i].position) {
        return false;
      }
    }
    return true;
  }

  Geometry geometry(History const& h) {
    Geometry g;
    g.letters = h.letter_geometry();
    for (auto const& ev : h.events()) {
      g.lines.push_back(h.line(ev.id));
    }
    return g;
  }

  ////////////////////////////////////////////////////////////////////////
  // Precedence
  ////////////////////////////////////////////////////////////////////////

  void Precedence::close() {
    for (std::size_t k = 0; k < _n; ++k) {
      for (std::size_t i = 0; i < _n; ++i) {
        if (!precedes(i, k)) {
          continue;
        }
        for (std::size_t j = 0; j < _n; ++j) {
          if (precedes(k, j)) {
            set(i, j);
          }
        }
      }
    }
  }

  std::vector<std::size_t> Precedence::covers(std::size_t a) const {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < _n; ++b) {
      if (!precedes(a, b)) {
        continue;
      }
      bool direct = true;
      for (std::size_t c = 0; c < _n && direct; ++c) {
        if (precedes(a, c) && precedes(c, b)) {
          direct = false;
        }
      }
      if (direct) {
        out.push_back(b);
      }
    }
    return out;
  }

  namespace {
    bool consumes_from(History const& h, std::size_t a, std::size_t b) {
      EventId producer = h.events()[a].id;
      for (LetterId l : h.events()[b].consumed) {
        if (h.letters()[l].producer == producer) {
          return true;
        }
      }
      return false;
    }
  }  // namespace

  bool depends_on(History const& h, std::size_t a, std::size_t b) {
    if (consumes_from(h, a, b)) {
      return true;
    }
    Interval const& la = h.line(h.events()[a].id);
    Interval const& lb = h.line(h.events()[b].id);
    if (la.overlaps(lb)) {
      return true;
    }
    AnchorMode anchor = h.system().rule(h.events()[b].rule).anchor;
    if (anchored_left(anchor) && la.hi <= lb.lo) {
      return true;
    }
    if (anchored_right(anchor) && la.lo >= lb.hi) {
      return true;
    }
    return false;
  }

  Precedence provenance_order(History const& h) {
    Precedence p(h.size());
    for (std::size_t b = 0; b < h.size(); ++b) {
      for (std::size_t a = 0; a < b; ++a) {
        if (consumes_from(h, a, b)) {
          p.set(a, b);
        }
      }
    }
    p.close();
    return p;
  }

  bool lies_left_of(History const& h, std::size_t a, std::size_t b) {
    auto const& ea = h.events()[a];
    auto const& eb = h.events()[b];
    return std::tuple(h.line(ea.id).lo, ea.rule, ea.id)
           < std::tuple(h.line(eb.id).lo, eb.rule, eb.id);
  }

  PrecedenceReport precedence(History const& h) {
    PrecedenceReport out{Precedence(h.size()), {}};
    for (std::size_t b = 0; b < h.size(); ++b) {
      for (std::size_t a = 0; a < b; ++a) {
        if (depends_on(h, a, b)) {
          out.order.set(a, b);
        }
      }
    }
    out.order.close();
    for (std::size_t a = 0; a < h.size(); ++a) {
      for (std::size_t b = a + 1; b < h.size(); ++b) {
        if (out.order.comparable(a, b)) {
          continue;
        }
        if (lies_left_of(h, a, b)) {
          out.left_right.emplace_back(a, b);
        } else {
          out.left_right.emplace_back(b, a);
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Swaps and reorderings
  ////////////////////////////////////////////////////////////////////////

  History swap_adjacent(History const& h, std::size_t i) {
    if (i + 1 >= h.size()) {
      throw InputError("swap_adjacent: no events at " + std::to_string(i) + " and "
                       + std::to_string(i + 1));
    }
    // Nothing happens strictly between i and i + 1, so they are comparable
    // exactly when i + 1 depends on i directly.
    if (depends_on(h, i, i + 1)) {
      throw InputError("swap_adjacent: events " + std::to_string(i) + " and "
                       + std::to_string(i + 1) + " are comparable");
    }
    std::vector<std::size_t> order(h.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::swap(order[i], order[i + 1]);
    auto swapped = h.permuted(order);
    if (!swapped) {
      throw std::logic_error("swap_adjacent: independent events failed to commute");
    }
    return std::move(*swapped);
  }

  History replay_swaps(History const& h, std::span<std::size_t const> swaps) {
    History cur = h;
    for (std::size_t i : swaps) {
      cur = swap_adjacent(cur, i);
    }
    return cur;
  }

  namespace {
    // Precedence keyed by stable event id; it does not change under swaps.
    class IdOrder {
     public:
      explicit IdOrder(History const& h)
          : _order(precedence(h).order), _index(h.size()) {
        for (std::size_t i = 0; i < h.size(); ++i) {
          _index[h.events()[i].id] = i;
        }
      }
      bool precedes(EventId a, EventId b) const {
        return _order.precedes(_index[a], _index[b]);
      }

     private:
      Precedence               _order;
      std::vector<std::size_t> _index;
    };

    void swap_logged(History& h, std::size_t i, std::vector<std::size_t>& log) {
      h = swap_adjacent(h, i);
      log.push_back(i);
    }

    // Moves `late` before `early` (incomparable, `early` currently first),
    // by cases: adjacent events are swapped; otherwise the earliest ancestor
    // of `late` that happens after `early` is moved before `early` first;
    // once no such ancestor remains, `late` steps back one place at a time.
    void move_before(History&                  h,
                     IdOrder const&            order,
                     EventId                   late,
                     EventId                   early,
                     std::vector<std::size_t>& log) {
      while (h.index_of(late) > h.index_of(early)) {
        std::size_t i_early = h.index_of(early);
        std::size_t i_late  = h.index_of(late);
        if (i_late == i_early + 1) {
          swap_logged(h, i_early, log);
          return;
        }
        std::optional<EventId> blocker;
        for (std::size_t t = i_early + 1; t < i_late; ++t) {
          if (order.precedes(h.events()[t].id, late)) {
            blocker = h.events()[t].id;
            break;
          }
        }
        if (blocker) {
          move_before(h, order, *blocker, early, log);
        } else {
          swap_logged(h, i_late - 1, log);
        }
      }
    }
  }  // namespace

  Reordering reorder_before(History const&               h,
                            std::set<std::size_t> const& first,
                            std::set<std::size_t> const& second) {
    auto prec = precedence(h).order;
    for (std::size_t a : first) {
      if (a >= h.size()) {
        throw InputError("reorder_before: no event " + std::to_string(a));
      }
      for (std::size_t b : second) {
        if (b >= h.size()) {
          throw InputError("reorder_before: no event " + std::to_string(b));
        }
        if (a == b) {
          throw InputError("reorder_before: event sets intersect at "
                           + std::to_string(a));
        }
        if (prec.comparable(a, b)) {
          throw InputError("reorder_before: events " + std::to_string(a) + " and "
                           + std::to_string(b) + " are comparable");
        }
      }
    }

    std::set<EventId> first_ids, second_ids;
    for (std::size_t a : first) {
      first_ids.insert(h.events()[a].id);
    }
    for (std::size_t b : second) {
      second_ids.insert(h.events()[b].id);
    }

    IdOrder    order(h);
    Reordering out{h, {}};
    while (true) {
      // The earliest event of `second` that has an event of `first` after it.
      std::optional<EventId> early, late;
      for (std::size_t t = 0; t < out.history.size() && !late; ++t) {
        EventId id = out.history.events()[t].id;
        if (!early && second_ids.contains(id)) {
          early = id;
        } else if (early && first_ids.contains(id)) {
          late = id;
        }
      }
      if (!late) {
        return out;
      }
      move_before(out.history, order, *late, *early, out.swaps);
    }
  }

  History canonicalize(History const& h) {
    auto const& prec = precedence(h).order;
    std::size_t n    = h.size();

    std::vector<std::size_t> pending(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b : prec.covers(a)) {
        ++pending[b];
      }
    }
    std::vector<bool>        done(n, false);
    std::vector<std::size_t> order;
    order.reserve(n);
    while (order.size() < n) {
      std::optional<std::size_t> best;
      for (std::size_t i = 0; i < n; ++i) {
        if (!done[i] && pending[i] == 0 && (!best || lies_left_of(h, i, *best))) {
          best = i;
        }
      }
      done[*best] = true;
      order.push_back(*best);
      for (std::size_t b : prec.covers(*best)) {
        --pending[b];
      }
    }
    auto result = h.permuted(order);
    if (!result) {
      throw std::logic_error("canonicalize: linear extension is not a legal history");
    }
    return std::move(*result);
  }

  bool equivalent(History const& a, History const& b) {
    if (a.system() != b.system() || a.start() != b.start() || a.size() != b.size()) {
      return false;
    }
    return canonicalize(a) == canonicalize(b);
  }

}  // namespace cannon
