#pragma once

#include <compare>
#include <vector>

#include "treehopf/semigroup.hpp"

namespace treehopf {

class Forest;

/// A decorated non-planar rooted tree in canonical form.
///
/// Children are kept sorted under the total order on trees (vertex count,
/// then root decoration, then recursive child comparison), so structural
/// equality of canonical forms is multiset equality of children and
/// comparison is O(size).
class Tree {
 public:
  explicit Tree(SemigroupElement root, std::vector<Tree> children = {});

  const SemigroupElement& root() const { return root_; }
  const std::vector<Tree>& children() const { return children_; }
  int vertex_count() const { return vertices_; }
  int edge_count() const { return vertices_ - 1; }
  bool is_leaf() const { return children_.empty(); }

  std::strong_ordering operator<=>(const Tree& o) const;
  bool operator==(const Tree& o) const;

 private:
  SemigroupElement root_;
  std::vector<Tree> children_;
  int vertices_;
};

/// A multiset of trees; the empty forest is the unit of the forest product.
class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<Tree> trees);
  explicit Forest(Tree t);
  static Forest unit() { return Forest(); }

  const std::vector<Tree>& trees() const { return trees_; }
  bool is_unit() const { return trees_.empty(); }
  int tree_count() const { return static_cast<int>(trees_.size()); }
  int vertex_count() const { return vertices_; }
  int edge_count() const;

  /// Commutative forest product: multiset union.
  Forest operator*(const Forest& o) const;
  Forest operator*(const Tree& t) const;

  std::strong_ordering operator<=>(const Forest& o) const;
  bool operator==(const Forest& o) const { return trees_ == o.trees_; }

 private:
  std::vector<Tree> trees_;  // sorted
  int vertices_ = 0;
};

/// Grafts every tree of `f` onto a fresh root decorated by `i`.
Tree b_plus(const SemigroupElement& i, const Forest& f);
inline Tree single_vertex(const SemigroupElement& i) { return Tree(i); }

/// Removes the root: the forest of its children. Inverse of b_plus.
Forest b_minus(const Tree& t);

}  // namespace treehopf
