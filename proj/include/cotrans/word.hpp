#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace cotrans {

// One letter of a word: a generator index and an exponent sign (+1 or -1).
struct Letter {
  int gen = 0;
  int sign = 1;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// A word over the generators of a presentation, spelled left to right.
// The empty word is the group unit e.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  bool empty() const { return letters.empty(); }
  std::size_t length() const { return letters.size(); }

  friend auto operator<=>(const Word&, const Word&) = default;
};

inline Word unit_word() { return Word{}; }

inline Word single_letter(int gen, int sign = 1) {
  return Word{{Letter{gen, sign}}};
}

inline Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.letters.insert(out.letters.end(), v.letters.begin(), v.letters.end());
  return out;
}

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& l : w.letters) {
      h ^= static_cast<std::size_t>(l.gen) * 2u + (l.sign > 0 ? 1u : 0u);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Orders by length first, then lexicographically: the order used for
// deterministic enumeration of balls and samples.
struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.letters < b.letters;
  }
};

}  // namespace cotrans
