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

// Text formats.  A system file is line oriented; `#` starts a comment.
//
//   kind: nca                      kind: gcsg        (or egcsg)
//   terminals: a b                 terminals: a b
//   alphabet: a b T                nonterminals: S T
//   rules:                         start: S
//   a b -> T                       productions:
//   a T b -> _ @both               S -> _
//                                  T -> a T b
//
// Symbols are whitespace separated, `_` is the empty word, and a rule may
// end in @left, @right or @both.
//
// A trace has one line per step, `t | word | rule#k @pos`, closed by
// `n | word | end`.  A step written `t | word | -` leaves the word unchanged
// and is dropped when read back.

#ifndef CANNON_IO_HPP_
#define CANNON_IO_HPP_

#include <string>
#include <string_view>
#include <variant>

#include "cannon/core.hpp"
#include "cannon/grammar.hpp"
#include "cannon/history.hpp"
#include "cannon/nca.hpp"

namespace cannon {

  class ParseError : public InputError {
   public:
    ParseError(std::size_t line, std::size_t column, std::string const& what);

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

  using System = std::variant<NcaSystem, Grammar>;

  enum class SystemKind { nca, gcsg, egcsg };

  SystemKind       kind_of(System const& sys);
  std::string_view to_string(SystemKind k) noexcept;

  // Syntax only; throws ParseError.
  System parse_system_unchecked(std::string_view text);

  // Syntax plus the matching validator; validation failures are thrown as
  // InputError carrying every violation.
  System parse_system(std::string_view text);

  System load_system(std::string const& path);

  std::vector<Violation> validate(System const& sys);

  std::string serialize(NcaSystem const& sys);
  std::string serialize(Grammar const& g);
  std::string serialize(System const& sys);

  std::string format_trace(History const& h);
  History     parse_trace(NcaSystem const& sys, std::string_view text);

  // Rows of letters with their intervals and generations, each followed by
  // the substitution line applied to it.
  std::string render_diagram(History const& h);

  std::string to_string(Rational const& q);
  std::string to_string(Interval const& i);

}  // namespace cannon

#endif  // CANNON_IO_HPP_
