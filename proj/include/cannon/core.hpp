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

#ifndef CANNON_CORE_HPP_
#define CANNON_CORE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cannon {

  // Thrown for malformed symbol names, words outside an alphabet and
  // similar caller mistakes.
  class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // A named letter.  Names are interned process-wide, so copies are a single
  // integer and equality/hashing never touch the string.  Ordering compares
  // names, which keeps every std::set<Symbol> in a stable printable order.
  class Symbol {
   public:
    explicit Symbol(std::string_view name);

    std::string const& name() const;
    std::uint32_t      id() const noexcept {
      return _id;
    }

    friend bool operator==(Symbol a, Symbol b) noexcept {
      return a._id == b._id;
    }
    friend std::strong_ordering operator<=>(Symbol a, Symbol b);

    // True when `name` can name a symbol: non-empty, no whitespace, not one
    // of the reserved tokens of the text formats (`_`, `->`, `|`, leading
    // `@` or `#`, trailing `:`).
    static bool is_valid_name(std::string_view name) noexcept;

   private:
    std::uint32_t _id;
  };

  using Word     = std::vector<Symbol>;
  using WordView = std::span<Symbol const>;

  // Token used for the empty word in all text I/O.
  inline constexpr std::string_view EMPTY_WORD_TOKEN = "_";

  // Parses whitespace-separated symbol names; `_` (alone) is the empty word.
  Word        parse_word(std::string_view text);
  std::string to_string(WordView w);
  std::string to_string(Symbol s);

  struct WordHash {
    std::size_t operator()(WordView w) const noexcept;
    std::size_t operator()(Word const& w) const noexcept {
      return (*this)(WordView(w));
    }
  };

  // Shortlex: shorter words first, then lexicographic by symbol name.
  bool shortlex_less(WordView a, WordView b);

  struct Alphabet {
    std::set<Symbol> terminals;
    std::set<Symbol> working;

    bool operator==(Alphabet const&) const = default;

    bool is_terminal(Symbol s) const {
      return terminals.contains(s);
    }
    bool contains(Symbol s) const {
      return working.contains(s);
    }
  };

  enum class AnchorMode : std::uint8_t { none, left, right, both };

  std::string_view to_string(AnchorMode a) noexcept;

  bool anchored_left(AnchorMode a) noexcept;
  bool anchored_right(AnchorMode a) noexcept;

  // True when `needle` sitting at `pos` in a word of length `haystack_len`
  // satisfies the anchor constraint (match itself not checked).
  bool anchor_allows(AnchorMode    a,
                     std::size_t   pos,
                     std::size_t   needle_len,
                     std::size_t   haystack_len) noexcept;

  // All start positions of `needle` in `haystack` that satisfy `anchor`,
  // ascending, overlaps included.  `needle` must be non-empty.
  std::vector<std::size_t> occurrences(WordView   haystack,
                                       WordView   needle,
                                       AnchorMode anchor);

  // `w` with w[at, at + remove_len) replaced by `insert`.
  Word splice(WordView w, std::size_t at, std::size_t remove_len, WordView insert);

  std::ostream& operator<<(std::ostream& os, Symbol s);
  std::ostream& operator<<(std::ostream& os, AnchorMode a);

}  // namespace cannon

template <>
struct std::hash<cannon::Symbol> {
  std::size_t operator()(cannon::Symbol s) const noexcept {
    return std::hash<std::uint32_t>{}(s.id());
  }
};

#endif  // CANNON_CORE_HPP_
