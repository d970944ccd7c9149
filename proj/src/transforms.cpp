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

#include "cannon/transforms.hpp"

#include <algorithm>
#include <map>

namespace cannon {

  Symbol DecoratedSymbol::symbol() const {
    return decorate(base, decoration);
  }

  Symbol decorate(Symbol base, Decoration d) {
    switch (d) {
      case Decoration::plain:
        return base;
      case Decoration::tilde:
        return Symbol("~" + base.name());
      case Decoration::caret_left:
        return Symbol("^" + base.name());
      case Decoration::caret_right:
        return Symbol(base.name() + "^");
      case Decoration::caret_both:
        return Symbol("^" + base.name() + "^");
    }
    return base;
  }

  namespace {
    bool decoratable(Grammar const& g, Symbol s) {
      return g.nonterminals().contains(s) && s != g.start();
    }

    // Fresh symbols must not collide with anything already in the grammar.
    Symbol fresh(std::set<Symbol> const& taken, Symbol s) {
      if (taken.contains(s)) {
        throw InputError("decorated symbol " + s.name()
                         + " already names a symbol of the input");
      }
      return s;
    }

    std::set<Symbol> all_symbols(Grammar const& g) {
      std::set<Symbol> out = g.nonterminals();
      out.insert(g.terminals().begin(), g.terminals().end());
      return out;
    }
  }  // namespace

  Word caret_left(Grammar const& g, WordView w) {
    Word out(w.begin(), w.end());
    if (!out.empty() && decoratable(g, out.front())) {
      out.front() = decorate(out.front(), Decoration::caret_left);
    }
    return out;
  }

  Word caret_right(Grammar const& g, WordView w) {
    Word out(w.begin(), w.end());
    if (!out.empty() && decoratable(g, out.back())) {
      out.back() = decorate(out.back(), Decoration::caret_right);
    }
    return out;
  }

  Word caret_both(Grammar const& g, WordView w) {
    if (w.size() == 1) {
      Word out(w.begin(), w.end());
      if (decoratable(g, out.front())) {
        out.front() = decorate(out.front(), Decoration::caret_both);
      }
      return out;
    }
    return caret_right(g, caret_left(g, w));
  }

  Grammar eliminate_terminals(Grammar const& g) {
    require_valid(g);
    auto                     taken = all_symbols(g);
    std::map<Symbol, Symbol> twin;
    for (Symbol x : g.terminals()) {
      twin.emplace(x, fresh(taken, decorate(x, Decoration::tilde)));
    }
    auto tilde = [&](Symbol s) {
      auto it = twin.find(s);
      return it == twin.end() ? s : it->second;
    };

    std::vector<Production> out;
    for (auto const& p : g.productions()) {
      Word lhs;
      std::transform(p.lhs.begin(), p.lhs.end(), std::back_inserter(lhs), tilde);

      std::vector<std::size_t> spots;
      for (std::size_t i = 0; i < p.rhs.size(); ++i) {
        if (g.is_terminal(p.rhs[i])) {
          spots.push_back(i);
        }
      }
      // Every subset of the terminal occurrences, as a bit mask.
      for (std::size_t mask = 0; mask < (std::size_t{1} << spots.size()); ++mask) {
        Word rhs = p.rhs;
        for (std::size_t k = 0; k < spots.size(); ++k) {
          if (mask & (std::size_t{1} << k)) {
            rhs[spots[k]] = twin.at(rhs[spots[k]]);
          }
        }
        out.push_back({lhs, std::move(rhs), p.anchor});
      }
    }
    auto nonterminals = g.nonterminals();
    for (auto const& [x, t] : twin) {
      nonterminals.insert(t);
    }
    return Grammar(std::move(nonterminals), g.terminals(), g.start(), std::move(out),
                   g.flavor());
  }

  Grammar deanchor(Grammar const& g) {
    Grammar const base  = eliminate_terminals(g);
    auto          taken = all_symbols(base);

    auto nonterminals = base.nonterminals();
    for (Symbol n : base.nonterminals()) {
      if (n == base.start()) {
        continue;
      }
      for (Decoration d :
           {Decoration::caret_left, Decoration::caret_right, Decoration::caret_both}) {
        nonterminals.insert(fresh(taken, decorate(n, d)));
      }
    }

    std::vector<Production> out;
    for (auto const& p : base.productions()) {
      if (base.is_start_production(p)) {
        out.push_back({p.lhs, caret_both(base, p.rhs), AnchorMode::none});
        continue;
      }
      auto left  = [&] {
        out.push_back({caret_left(base, p.lhs), caret_left(base, p.rhs), AnchorMode::none});
      };
      auto right = [&] {
        out.push_back(
            {caret_right(base, p.lhs), caret_right(base, p.rhs), AnchorMode::none});
      };
      auto both  = [&] {
        out.push_back({caret_both(base, p.lhs), caret_both(base, p.rhs), AnchorMode::none});
      };
      switch (p.anchor) {
        case AnchorMode::none:
          out.push_back({p.lhs, p.rhs, AnchorMode::none});
          left();
          right();
          both();
          break;
        case AnchorMode::left:
          left();
          both();
          break;
        case AnchorMode::right:
          right();
          both();
          break;
        case AnchorMode::both:
          both();
          break;
      }
    }
    return Grammar(std::move(nonterminals), base.terminals(), base.start(), std::move(out),
                   Flavor::standard);
  }

  NcaSystem gcsg_to_nca(Grammar const& g) {
    require_valid(g);
    if (g.flavor() != Flavor::standard) {
      throw InputError("gcsg_to_nca: expected a standard grammar; de-anchor it first");
    }
    if (!g.derives_empty()) {
      throw InputError("gcsg_to_nca: the grammar must have the production "
                       + g.start().name() + " -> _");
    }
    return reversed_system(g);
  }

  Grammar nca_to_extended_gcsg(NcaSystem const& sys) {
    require_valid(sys);
    auto const& working = sys.alphabet().working;

    std::string name = "S";
    while (working.contains(Symbol(name))) {
      name += "'";
    }
    Symbol start(name);

    std::set<Symbol> nonterminals{start};
    for (Symbol s : working) {
      if (!sys.alphabet().is_terminal(s)) {
        nonterminals.insert(s);
      }
    }

    std::vector<Production> out{{{start}, {}, AnchorMode::none}};
    for (Rule const& r : sys.rules()) {
      if (!r.rhs.empty()) {
        out.push_back({r.rhs, r.lhs, r.anchor});
        continue;
      }
      auto const& v = r.lhs;
      for (Symbol x : working) {
        Word xv{x};
        xv.insert(xv.end(), v.begin(), v.end());
        Word vx = v;
        vx.push_back(x);
        switch (r.anchor) {
          case AnchorMode::none:
            out.push_back({{x}, xv, AnchorMode::none});
            out.push_back({{x}, vx, AnchorMode::none});
            break;
          case AnchorMode::left:
            out.push_back({{x}, vx, AnchorMode::left});
            break;
          case AnchorMode::right:
            out.push_back({{x}, xv, AnchorMode::right});
            break;
          case AnchorMode::both:
            break;
        }
      }
      out.push_back({{start}, v, AnchorMode::none});
    }
    return Grammar(std::move(nonterminals), sys.alphabet().terminals, start, std::move(out),
                   Flavor::extended);
  }

  Grammar nca_to_gcsg(NcaSystem const& sys) {
    return deanchor(nca_to_extended_gcsg(sys));
  }

  std::set<Symbol> reachable_symbols(Grammar const& g) {
    std::set<Symbol> reached{g.start()};
    bool             grew = true;
    while (grew) {
      grew = false;
      for (auto const& p : g.productions()) {
        bool fires = std::all_of(p.lhs.begin(), p.lhs.end(),
                                 [&](Symbol s) { return reached.contains(s); });
        if (!fires) {
          continue;
        }
        for (Symbol s : p.rhs) {
          grew = reached.insert(s).second || grew;
        }
      }
    }
    return reached;
  }

}  // namespace cannon
