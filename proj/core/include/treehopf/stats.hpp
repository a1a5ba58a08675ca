#pragma once

#include "treehopf/rational.hpp"
#include "treehopf/tree.hpp"

namespace treehopf {

/// Combinatorial statistics of a tree. Invariant: cm = |t|! / (t! sigma).
struct TreeStats {
  int vertices = 0;
  int edges = 0;
  Int factorial;  // tree factorial t!
  Int sigma;      // |Aut(t)|
  Rat cm;         // Connes-Moscovici coefficient
};

TreeStats tree_stats(const Tree& t);

Int tree_factorial(const Tree& t);
Int tree_sigma(const Tree& t);
Rat tree_cm(const Tree& t);

/// Full automorphism count of a forest: product of tree sigmas times the
/// multiplicity factorials of repeated identical trees. This is the
/// normalisation under which the Grossman-Larson / BCK duality holds.
Int forest_sigma(const Forest& f);

/// Tree factorial extended multiplicatively to forests.
Int forest_factorial(const Forest& f);

/// Independent oracle: counts automorphisms by exhausting vertex
/// permutations of the (labelled) forest. Intended for small inputs.
Int forest_sigma_bruteforce(const Forest& f);

/// Number of linear extensions of the root-to-leaf partial order, by
/// exhaustive enumeration. Refuses trees with more than 10 vertices.
Int linear_extension_count(const Tree& t);

}  // namespace treehopf
