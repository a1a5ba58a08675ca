#include "treehopf/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace treehopf {

namespace {

// Forests with n vertices whose trees are all <= bound in the canonical
// order (multisets are generated as non-increasing sequences).
std::vector<std::vector<Tree>> forests_bounded(int n, const Tree* bound,
                                               const std::vector<std::string>& alphabet) {
  if (n == 0) return {{}};
  std::vector<std::vector<Tree>> out;
  for (int k = 1; k <= n; ++k) {
    for (const Tree& t : enumerate_trees(k, alphabet)) {
      if (bound && *bound < t) continue;
      for (auto rest : forests_bounded(n - k, &t, alphabet)) {
        rest.push_back(t);
        out.push_back(std::move(rest));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Tree> enumerate_trees(int n, const std::vector<std::string>& alphabet) {
  if (n < 1) throw std::invalid_argument("enumerate_trees: n must be >= 1");
  if (alphabet.empty()) throw std::invalid_argument("enumerate_trees: empty alphabet");
  std::vector<Tree> out;
  for (const auto& letter : alphabet) {
    for (auto& children : forests_bounded(n - 1, nullptr, alphabet)) {
      out.emplace_back(SemigroupElement(letter), std::move(children));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Forest> enumerate_forests(int n, const std::vector<std::string>& alphabet) {
  if (n < 0) throw std::invalid_argument("enumerate_forests: n must be >= 0");
  std::vector<Forest> out;
  for (auto& trees : forests_bounded(n, nullptr, alphabet)) out.emplace_back(std::move(trees));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tree> enumerate_trees_up_to(int n, const std::vector<std::string>& alphabet) {
  std::vector<Tree> out;
  for (int k = 1; k <= n; ++k) {
    auto ts = enumerate_trees(k, alphabet);
    out.insert(out.end(), ts.begin(), ts.end());
  }
  return out;
}

std::vector<Forest> enumerate_forests_up_to(int n, const std::vector<std::string>& alphabet) {
  std::vector<Forest> out;
  for (int k = 0; k <= n; ++k) {
    auto fs = enumerate_forests(k, alphabet);
    out.insert(out.end(), fs.begin(), fs.end());
  }
  return out;
}

std::vector<Word> enumerate_words(int length, const std::vector<std::string>& alphabet) {
  if (length < 0) throw std::invalid_argument("enumerate_words: negative length");
  std::vector<Word> out{Word{}};
  for (int i = 0; i < length; ++i) {
    std::vector<Word> next;
    for (const Word& w : out) {
      for (const auto& letter : alphabet) next.push_back(w.append(SemigroupElement(letter)));
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace treehopf
