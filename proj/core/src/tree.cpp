#include "treehopf/tree.hpp"

#include <algorithm>
#include <numeric>

namespace treehopf {

Tree::Tree(SemigroupElement root, std::vector<Tree> children)
    : root_(std::move(root)), children_(std::move(children)) {
  std::sort(children_.begin(), children_.end());
  vertices_ = 1;
  for (const Tree& c : children_) vertices_ += c.vertices_;
}

std::strong_ordering Tree::operator<=>(const Tree& o) const {
  if (auto c = vertices_ <=> o.vertices_; c != 0) return c;
  if (auto c = root_ <=> o.root_; c != 0) return c;
  return children_ <=> o.children_;
}

bool Tree::operator==(const Tree& o) const {
  return vertices_ == o.vertices_ && root_ == o.root_ && children_ == o.children_;
}

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
  std::sort(trees_.begin(), trees_.end());
  vertices_ = 0;
  for (const Tree& t : trees_) vertices_ += t.vertex_count();
}

Forest::Forest(Tree t) : vertices_(t.vertex_count()) { trees_.push_back(std::move(t)); }

int Forest::edge_count() const { return vertices_ - tree_count(); }

Forest Forest::operator*(const Forest& o) const {
  std::vector<Tree> ts = trees_;
  ts.insert(ts.end(), o.trees_.begin(), o.trees_.end());
  return Forest(std::move(ts));
}

Forest Forest::operator*(const Tree& t) const {
  std::vector<Tree> ts = trees_;
  ts.push_back(t);
  return Forest(std::move(ts));
}

std::strong_ordering Forest::operator<=>(const Forest& o) const {
  if (auto c = vertices_ <=> o.vertices_; c != 0) return c;
  return trees_ <=> o.trees_;
}

Tree b_plus(const SemigroupElement& i, const Forest& f) {
  return Tree(i, f.trees());
}

Forest b_minus(const Tree& t) {
  return Forest(t.children());
}

}  // namespace treehopf
