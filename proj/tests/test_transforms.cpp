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

#include <algorithm>

#include "catch_amalgamated.hpp"
#include "cannon/search.hpp"
#include "cannon/transforms.hpp"
#include "oracles.hpp"

namespace cannon {
  using oracle::w;

  namespace {
    bool has(Grammar const& g, Production const& p) {
      auto const& ps = g.productions();
      return std::find(ps.begin(), ps.end(), p) != ps.end();
    }

    std::vector<Production> with_lhs(Grammar const& g, Word const& lhs) {
      std::vector<Production> out;
      for (auto const& p : g.productions()) {
        if (p.lhs == lhs) {
          out.push_back(p);
        }
      }
      return out;
    }

    Language language(System const& sys, std::size_t n) {
      if (auto const* nca = std::get_if<NcaSystem>(&sys)) {
        return enumerate_language(*nca, n);
      }
      return generate_language(std::get<Grammar>(sys), n);
    }
  }  // namespace

  TEST_CASE("decorated symbol names", "[transforms]") {
    Symbol x("x");
    REQUIRE(decorate(x, Decoration::plain) == x);
    REQUIRE(decorate(x, Decoration::tilde).name() == "~x");
    REQUIRE(decorate(x, Decoration::caret_left).name() == "^x");
    REQUIRE(decorate(x, Decoration::caret_right).name() == "x^");
    REQUIRE(decorate(x, Decoration::caret_both).name() == "^x^");
    REQUIRE((DecoratedSymbol{x, Decoration::tilde}.symbol().name() == "~x"));
  }

  TEST_CASE("caret maps decorate only non-start nonterminals", "[transforms]") {
    auto g = oracle::load_grammar("left.egcsg");
    REQUIRE(caret_left(g, w("Z a Z")) == w("^Z a Z"));
    REQUIRE(caret_right(g, w("Z a Z")) == w("Z a Z^"));
    REQUIRE(caret_both(g, w("Z a Z")) == w("^Z a Z^"));
    REQUIRE(caret_both(g, w("Z")) == w("^Z^"));
    REQUIRE(caret_both(g, w("a b")) == w("a b"));
    REQUIRE(caret_left(g, w("S")) == w("S"));
    REQUIRE(caret_both(g, Word{}).empty());
  }

  TEST_CASE("eliminate_terminals", "[transforms]") {
    Symbol  S("S"), T("T");
    Grammar g({S, T}, {Symbol("a"), Symbol("b")}, S,
              {{w("S"), Word{}}, {w("S"), w("T")}, {w("T"), w("a b")}});
    auto out = eliminate_terminals(g);
    REQUIRE(validate(out).empty());
    auto ts = with_lhs(out, w("T"));
    REQUIRE(ts.size() == 4);
    for (auto const* rhs : {"a b", "~a b", "a ~b", "~a ~b"}) {
      REQUIRE(has(out, {w("T"), w(rhs)}));
    }
    REQUIRE(out.nonterminals().contains(Symbol("~a")));
    REQUIRE(generate_language(out, 6) == generate_language(g, 6));

    Grammar h({S, T}, {Symbol("a"), Symbol("b"), Symbol("c")}, S,
              {{w("S"), Word{}}, {w("S"), w("a b")}, {w("a b"), w("a b c")}},
              Flavor::standard);
    auto hout = eliminate_terminals(h);
    REQUIRE(validate(hout).empty());
    REQUIRE(with_lhs(hout, w("~a ~b")).size() == 8);
    REQUIRE(with_lhs(hout, w("a b")).empty());
    for (auto const& p : hout.productions()) {
      for (Symbol s : p.lhs) {
        REQUIRE(hout.nonterminals().contains(s));
      }
    }
    REQUIRE(generate_language(hout, 6) == generate_language(h, 6));

    // No terminals anywhere: only the unused twins are added.
    Grammar bare({S, T}, {Symbol("a")}, S, {{w("S"), Word{}}});
    auto    bout = eliminate_terminals(bare);
    REQUIRE(bout.productions() == bare.productions());
    REQUIRE(bout.nonterminals() == std::set<Symbol>{S, T, Symbol("~a")});
  }

  TEST_CASE("deanchor", "[transforms]") {
    Symbol  S("S"), A("A");
    Grammar g({S, A}, {Symbol("a"), Symbol("b")}, S,
              {{w("S"), Word{}}, {w("S"), w("A")}, {w("A"), w("a b"), AnchorMode::left}},
              Flavor::extended);
    auto out = deanchor(g);
    REQUIRE(out.flavor() == Flavor::standard);
    REQUIRE(validate(out).empty());
    REQUIRE(has(out, {w("^A"), w("a b")}));
    REQUIRE(has(out, {w("^A^"), w("a b")}));
    REQUIRE_FALSE(has(out, {w("A"), w("a b")}));
    REQUIRE_FALSE(has(out, {w("A^"), w("a b")}));
    REQUIRE(has(out, {w("S"), w("^A^")}));
    REQUIRE(generate_language(out, 4) == generate_language(g, 4));

    auto x = deanchor(nca_to_extended_gcsg(oracle::load_nca("xanchor.nca")));
    REQUIRE(generate_language(x, 4) == Language{Word{}, w("x")});

    auto anbn = oracle::load_grammar("anbn.gcsg");
    REQUIRE(generate_language(deanchor(anbn), 6) == generate_language(anbn, 6));
    REQUIRE(serialize(deanchor(anbn)).find("^T^") != std::string::npos);
  }

  TEST_CASE("deanchor output carries no anchors", "[transforms]") {
    for (auto const* name : {"left.egcsg", "right.egcsg", "both.egcsg", "anbn.gcsg"}) {
      auto out = deanchor(oracle::load_grammar(name));
      for (auto const& p : out.productions()) {
        REQUIRE(p.anchor == AnchorMode::none);
      }
    }
  }

  TEST_CASE("symbol accounting for deanchor", "[transforms]") {
    // Each nonterminal other than the start gets three caret copies, and so
    // does each tilde twin.
    for (auto const* name : {"left.egcsg", "right.egcsg", "both.egcsg", "anbn.gcsg", "dyck.gcsg"}) {
      auto        g     = oracle::load_grammar(name);
      auto        out   = deanchor(g);
      std::size_t n_in  = g.nonterminals().size();
      std::size_t x     = g.terminals().size();
      std::size_t n_out = out.nonterminals().size();
      INFO(name);
      REQUIRE(n_out == 4 * (n_in + x) - 3);
      REQUIRE(n_out <= 4 * n_in + 4 * x);
    }
  }

  TEST_CASE("gcsg_to_nca", "[transforms]") {
    auto anbn = oracle::load_grammar("anbn.gcsg");
    auto sys  = gcsg_to_nca(anbn);
    REQUIRE(validate(sys).empty());
    std::vector<Rule> expected{{w("a b"), w("T")},
                               {w("a T b"), w("T")},
                               {w("a b"), Word{}, AnchorMode::both},
                               {w("a T b"), Word{}, AnchorMode::both}};
    auto              rules = sys.rules();
    REQUIRE(std::is_permutation(rules.begin(), rules.end(), expected.begin(), expected.end()));
    REQUIRE(enumerate_language(sys, 6) == generate_language(anbn, 6));
    REQUIRE(enumerate_language(sys, 6)
            == Language{Word{}, w("a b"), w("a a b b"), w("a a a b b b")});
    for (auto const& r : sys.rules()) {
      REQUIRE(r.rhs.size() < r.lhs.size());
    }

    Symbol  S("S");
    Grammar x({S}, {Symbol("x")}, S, {{w("S"), Word{}}, {w("S"), w("x")}});
    auto    xs = gcsg_to_nca(x);
    REQUIRE(xs.rules() == std::vector<Rule>{{w("x"), Word{}, AnchorMode::both}});

    Grammar no_empty({S}, {Symbol("x")}, S, {{w("S"), w("x")}});
    REQUIRE_THROWS_AS(gcsg_to_nca(no_empty), InputError);
    REQUIRE_THROWS_AS(gcsg_to_nca(oracle::load_grammar("left.egcsg")), InputError);
  }

  TEST_CASE("nca_to_gcsg", "[transforms]") {
    auto xe = nca_to_extended_gcsg(oracle::load_nca("xanchor.nca"));
    REQUIRE(xe.productions()
            == std::vector<Production>{{w("S"), Word{}}, {w("S"), w("x")}});
    REQUIRE(generate_language(nca_to_gcsg(oracle::load_nca("xanchor.nca")), 4)
            == Language{Word{}, w("x")});

    auto ab  = oracle::load_nca("ab.nca");
    auto abe = nca_to_extended_gcsg(ab);
    REQUIRE(has(abe, {w("S"), w("a b")}));
    REQUIRE(has(abe, {w("a"), w("a a b")}));
    REQUIRE(has(abe, {w("a"), w("a b a")}));
    REQUIRE(has(abe, {w("b"), w("b a b")}));
    REQUIRE(has(abe, {w("b"), w("a b b")}));
    REQUIRE(validate(abe).empty());
    auto abg = nca_to_gcsg(ab);
    REQUIRE(validate(abg).empty());
    REQUIRE(generate_language(abg, 4)
            == Language{Word{}, w("a b"), w("a a b b"), w("a b a b")});
    REQUIRE(generate_language(abg, 4) == enumerate_language(ab, 4));
  }

  TEST_CASE("anchored rules become anchored productions", "[transforms]") {
    Alphabet  alpha{{Symbol("a"), Symbol("b")}, {Symbol("a"), Symbol("b")}};
    NcaSystem left(alpha, {{w("a b"), Word{}, AnchorMode::left}});
    auto      g = nca_to_extended_gcsg(left);
    REQUIRE(has(g, {w("a"), w("a b a"), AnchorMode::left}));
    REQUIRE_FALSE(has(g, {w("a"), w("a a b")}));
    REQUIRE(generate_language(nca_to_gcsg(left), 6) == enumerate_language(left, 6));

    NcaSystem right(alpha, {{w("a b"), Word{}, AnchorMode::right}});
    auto      gr = nca_to_extended_gcsg(right);
    REQUIRE(has(gr, {w("a"), w("a a b"), AnchorMode::right}));
    REQUIRE(generate_language(nca_to_gcsg(right), 6) == enumerate_language(right, 6));
  }

  TEST_CASE("free group round trip", "[transforms]") {
    auto fg1  = oracle::load_nca("fg1.nca");
    auto back = gcsg_to_nca(nca_to_gcsg(fg1));
    REQUIRE(validate(back).empty());
    REQUIRE(enumerate_language(back, 6) == enumerate_language(fg1, 6));
  }

  TEST_CASE("transforms preserve languages on every fixture", "[transforms][property]") {
    for (auto const* name : {"anbn.gcsg", "dyck.gcsg", "left.egcsg", "right.egcsg", "both.egcsg"}) {
      INFO(name);
      auto        g    = oracle::load_grammar(name);
      std::size_t n    = g.terminals().size() == 2 ? 8 : 6;
      auto        lang = generate_language(g, n);

      auto noterm = eliminate_terminals(g);
      REQUIRE(validate(noterm).empty());
      REQUIRE(generate_language(noterm, n) == lang);

      auto standard = deanchor(g);
      REQUIRE(validate(standard).empty());
      REQUIRE(generate_language(standard, n) == lang);

      auto sys = gcsg_to_nca(standard);
      REQUIRE(validate(sys).empty());
      REQUIRE(enumerate_language(sys, n) == lang);
    }
    for (auto const* name : {"ab.nca", "fg1.nca", "anbn.nca", "xanchor.nca", "xfree.nca"}) {
      INFO(name);
      auto        sys  = oracle::load_nca(name);
      std::size_t n    = sys.alphabet().terminals.size() <= 2 ? 6 : 4;
      auto        lang = enumerate_language(sys, n);
      auto        ext  = nca_to_extended_gcsg(sys);
      REQUIRE(validate(ext).empty());
      REQUIRE(generate_language(ext, n) == lang);
      auto standard = nca_to_gcsg(sys);
      REQUIRE(validate(standard).empty());
      REQUIRE(language(standard, n) == lang);
    }
  }

  TEST_CASE("reachable_symbols", "[transforms]") {
    auto g   = oracle::load_grammar("anbn.gcsg");
    auto out = deanchor(g);
    auto r   = reachable_symbols(out);
    REQUIRE(r.contains(Symbol("S")));
    REQUIRE(r.contains(Symbol("T")));
    REQUIRE(r.contains(Symbol("^~a")));
    // Nothing rewrites to a lone T, so its both-ends copy is never used.
    REQUIRE_FALSE(r.contains(Symbol("^T^")));
  }

}  // namespace cannon
