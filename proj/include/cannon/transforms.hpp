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

// Language-preserving conversions between grammars and NCAs:
//
//   eliminate_terminals   grammar -> grammar whose left-hand sides are all
//                         nonterminal (terminal x gets a twin ~x)
//   deanchor              extended grammar -> standard grammar, using the
//                         end-marked copies ^A, A^ and ^A^ of nonterminals
//   gcsg_to_nca           standard grammar deriving _ -> NCA
//   nca_to_gcsg           NCA -> extended grammar -> standard grammar

#ifndef CANNON_TRANSFORMS_HPP_
#define CANNON_TRANSFORMS_HPP_

#include <set>

#include "cannon/core.hpp"
#include "cannon/grammar.hpp"
#include "cannon/nca.hpp"

namespace cannon {

  enum class Decoration { plain, tilde, caret_left, caret_right, caret_both };

  struct DecoratedSymbol {
    Symbol     base;
    Decoration decoration = Decoration::plain;

    // `~x`, `^x`, `x^` or `^x^`.
    Symbol symbol() const;
  };

  Symbol decorate(Symbol base, Decoration d);

  // Words with the first / last / both end symbols replaced by their marked
  // copies when those are nonterminals other than the start symbol.  A
  // single nonterminal under caret_both becomes ^x^.
  Word caret_left(Grammar const& g, WordView w);
  Word caret_right(Grammar const& g, WordView w);
  Word caret_both(Grammar const& g, WordView w);

  Grammar eliminate_terminals(Grammar const& g);
  Grammar deanchor(Grammar const& g);

  // Requires a valid standard grammar with start -> _.
  NcaSystem gcsg_to_nca(Grammar const& g);

  Grammar nca_to_extended_gcsg(NcaSystem const& sys);
  Grammar nca_to_gcsg(NcaSystem const& sys);

  // Symbols that can occur in some sentential form, by a fixpoint over
  // productions whose left-hand symbols are all reachable.
  std::set<Symbol> reachable_symbols(Grammar const& g);

}  // namespace cannon

#endif  // CANNON_TRANSFORMS_HPP_
