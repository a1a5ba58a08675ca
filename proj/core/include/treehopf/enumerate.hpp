#pragma once

#include <string>
#include <vector>

#include "treehopf/tree.hpp"
#include "treehopf/word.hpp"

namespace treehopf {

/// All canonical trees with exactly n vertices decorated from the base
/// alphabet, in canonical order and without duplicates. Requires n >= 1.
std::vector<Tree> enumerate_trees(int n, const std::vector<std::string>& alphabet);

/// All forests with exactly n total vertices (n = 0 gives the unit forest).
std::vector<Forest> enumerate_forests(int n, const std::vector<std::string>& alphabet);

/// Trees (resp. forests) of every size from 1 (resp. 0) to n inclusive.
std::vector<Tree> enumerate_trees_up_to(int n, const std::vector<std::string>& alphabet);
std::vector<Forest> enumerate_forests_up_to(int n, const std::vector<std::string>& alphabet);

/// All words of the given exact length over the alphabet.
std::vector<Word> enumerate_words(int length, const std::vector<std::string>& alphabet);

}  // namespace treehopf
