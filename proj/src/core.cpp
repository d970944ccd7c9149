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

#include "cannon/core.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace cannon {

  namespace {
    class SymbolTable {
     public:
      std::uint32_t intern(std::string_view name) {
        {
          std::shared_lock lock(_mutex);
          if (auto it = _ids.find(std::string(name)); it != _ids.end()) {
            return it->second;
          }
        }
        std::unique_lock lock(_mutex);
        auto [it, inserted]
            = _ids.emplace(std::string(name), static_cast<std::uint32_t>(_names.size()));
        if (inserted) {
          _names.emplace_back(name);
        }
        return it->second;
      }

      std::string const& name(std::uint32_t id) const {
        std::shared_lock lock(_mutex);
        return _names[id];
      }

     private:
      mutable std::shared_mutex                      _mutex;
      std::deque<std::string>                        _names;
      std::unordered_map<std::string, std::uint32_t> _ids;
    };

    SymbolTable& table() {
      static SymbolTable t;
      return t;
    }
  }  // namespace

  Symbol::Symbol(std::string_view name) {
    if (!is_valid_name(name)) {
      throw InputError("invalid symbol name '" + std::string(name) + "'");
    }
    _id = table().intern(name);
  }

  std::string const& Symbol::name() const {
    return table().name(_id);
  }

  std::strong_ordering operator<=>(Symbol a, Symbol b) {
    if (a._id == b._id) {
      return std::strong_ordering::equal;
    }
    return a.name() <=> b.name();
  }

  bool Symbol::is_valid_name(std::string_view name) noexcept {
    if (name.empty() || name == EMPTY_WORD_TOKEN || name == "->" || name == "|"
        || name.front() == '@' || name.front() == '#' || name.back() == ':') {
      return false;
    }
    return std::none_of(name.begin(), name.end(), [](char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    });
  }

  Word parse_word(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string        tok;
    Word               result;
    bool               saw_empty = false;
    while (in >> tok) {
      if (tok == EMPTY_WORD_TOKEN) {
        saw_empty = true;
        continue;
      }
      result.emplace_back(tok);
    }
    if (saw_empty && !result.empty()) {
      throw InputError("'_' denotes the empty word and cannot be mixed with symbols");
    }
    return result;
  }

  std::string to_string(WordView w) {
    if (w.empty()) {
      return std::string(EMPTY_WORD_TOKEN);
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += w[i].name();
    }
    return out;
  }

  std::string to_string(Symbol s) {
    return s.name();
  }

  std::size_t WordHash::operator()(WordView w) const noexcept {
    // FNV-1a over the symbol ids.
    std::uint64_t h = 1469598103934665603ULL;
    for (Symbol s : w) {
      h ^= s.id() + 0x9e3779b9U;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ w.size());
  }

  bool shortlex_less(WordView a, WordView b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }

  std::string_view to_string(AnchorMode a) noexcept {
    switch (a) {
      case AnchorMode::none:
        return "none";
      case AnchorMode::left:
        return "left";
      case AnchorMode::right:
        return "right";
      case AnchorMode::both:
        return "both";
    }
    return "?";
  }

  bool anchored_left(AnchorMode a) noexcept {
    return a == AnchorMode::left || a == AnchorMode::both;
  }

  bool anchored_right(AnchorMode a) noexcept {
    return a == AnchorMode::right || a == AnchorMode::both;
  }

  bool anchor_allows(AnchorMode  a,
                     std::size_t pos,
                     std::size_t needle_len,
                     std::size_t haystack_len) noexcept {
    if (anchored_left(a) && pos != 0) {
      return false;
    }
    if (anchored_right(a) && pos + needle_len != haystack_len) {
      return false;
    }
    return true;
  }

  std::vector<std::size_t> occurrences(WordView   haystack,
                                       WordView   needle,
                                       AnchorMode anchor) {
    if (needle.empty()) {
      throw InputError("occurrences: needle must be non-empty");
    }
    std::vector<std::size_t> result;
    if (needle.size() > haystack.size()) {
      return result;
    }
    std::size_t first = 0;
    std::size_t last  = haystack.size() - needle.size();
    if (anchored_left(anchor)) {
      last = 0;
    }
    if (anchored_right(anchor)) {
      first = haystack.size() - needle.size();
    }
    for (std::size_t i = first; i <= last; ++i) {
      if (std::equal(needle.begin(), needle.end(), haystack.begin() + i)) {
        result.push_back(i);
      }
    }
    return result;
  }

  Word splice(WordView w, std::size_t at, std::size_t remove_len, WordView insert) {
    if (at > w.size() || remove_len > w.size() - at) {
      throw std::out_of_range("splice: range [" + std::to_string(at) + ", "
                              + std::to_string(at + remove_len)
                              + ") exceeds word length "
                              + std::to_string(w.size()));
    }
    Word result;
    result.reserve(w.size() - remove_len + insert.size());
    result.insert(result.end(), w.begin(), w.begin() + at);
    result.insert(result.end(), insert.begin(), insert.end());
    result.insert(result.end(), w.begin() + at + remove_len, w.end());
    return result;
  }

  std::ostream& operator<<(std::ostream& os, Symbol s) {
    return os << s.name();
  }

  std::ostream& operator<<(std::ostream& os, AnchorMode a) {
    return os << to_string(a);
  }

}  // namespace cannon
