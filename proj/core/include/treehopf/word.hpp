#pragma once

#include <compare>
#include <vector>

#include "treehopf/semigroup.hpp"

namespace treehopf {

/// A word over the semigroup alphabet; the empty word is the unit.
struct Word {
  std::vector<SemigroupElement> letters;

  Word() = default;
  explicit Word(std::vector<SemigroupElement> ls) : letters(std::move(ls)) {}

  int length() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }

  /// Concatenation.
  Word operator+(const Word& o) const {
    Word w = *this;
    w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
    return w;
  }
  Word append(const SemigroupElement& l) const {
    Word w = *this;
    w.letters.push_back(l);
    return w;
  }

  auto operator<=>(const Word&) const = default;
};

}  // namespace treehopf
