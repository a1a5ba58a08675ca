#pragma once

#include <compare>
#include <vector>

#include "treehopf/tree.hpp"
#include "treehopf/word.hpp"

namespace treehopf {

/// Basis of H_BCK (x) H_BCK.
struct TensorFF {
  Forest left, right;
  auto operator<=>(const TensorFF&) const = default;
};

/// Basis of H_+ (x) H_BCK with a tree on the right (codomain of the
/// substitution coproduct, which is linear on the right).
struct TensorFT {
  Forest left;
  Tree right;
  auto operator<=>(const TensorFT&) const = default;
};

/// A tensor word whose letters are trees (codomain of the Hairer-Kelly map).
struct TensorWord {
  std::vector<Tree> letters;
  auto operator<=>(const TensorWord&) const = default;

  bool empty() const { return letters.empty(); }
  TensorWord append(const Tree& t) const {
    TensorWord w = *this;
    w.letters.push_back(t);
    return w;
  }
};

/// Word-coproduct leg pair.
struct TensorWW {
  Word left, right;
  auto operator<=>(const TensorWW&) const = default;
};

// Triple tensors used by the coassociativity sweeps.
struct TensorFFF {
  Forest a, b, c;
  auto operator<=>(const TensorFFF&) const = default;
};
struct TensorFFT {
  Forest a, b;
  Tree c;
  auto operator<=>(const TensorFFT&) const = default;
};
struct TensorWWW {
  Word a, b, c;
  auto operator<=>(const TensorWWW&) const = default;
};

}  // namespace treehopf
