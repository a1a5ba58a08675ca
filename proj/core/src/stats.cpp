#include "treehopf/stats.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace treehopf {

Int tree_factorial(const Tree& t) {
  Int f = t.vertex_count();
  for (const Tree& c : t.children()) f *= tree_factorial(c);
  return f;
}

Int tree_sigma(const Tree& t) {
  // Group children into classes of identical canonical subtrees:
  // sigma = prod over classes of sigma(child)^m * m!.
  Int s = 1;
  const auto& ch = t.children();
  std::size_t i = 0;
  while (i < ch.size()) {
    std::size_t j = i;
    while (j < ch.size() && ch[j] == ch[i]) ++j;
    const unsigned m = static_cast<unsigned>(j - i);
    Int cs = tree_sigma(ch[i]);
    for (unsigned k = 0; k < m; ++k) s *= cs;
    s *= int_factorial(m);
    i = j;
  }
  return s;
}

Rat tree_cm(const Tree& t) {
  Rat cm(int_factorial(static_cast<unsigned>(t.vertex_count())));
  cm /= Rat(tree_factorial(t) * tree_sigma(t));
  cm.canonicalize();
  return cm;
}

TreeStats tree_stats(const Tree& t) {
  TreeStats st;
  st.vertices = t.vertex_count();
  st.edges = t.edge_count();
  st.factorial = tree_factorial(t);
  st.sigma = tree_sigma(t);
  st.cm = tree_cm(t);
  return st;
}

Int forest_sigma(const Forest& f) {
  Int s = 1;
  const auto& ts = f.trees();
  std::size_t i = 0;
  while (i < ts.size()) {
    std::size_t j = i;
    while (j < ts.size() && ts[j] == ts[i]) ++j;
    const unsigned m = static_cast<unsigned>(j - i);
    Int cs = tree_sigma(ts[i]);
    for (unsigned k = 0; k < m; ++k) s *= cs;
    s *= int_factorial(m);
    i = j;
  }
  return s;
}

Int forest_factorial(const Forest& f) {
  Int r = 1;
  for (const Tree& t : f.trees()) r *= tree_factorial(t);
  return r;
}

namespace {

// Flat labelled representation: parent index per vertex (-1 for roots).
struct FlatForest {
  std::vector<int> parent;
  std::vector<SemigroupElement> label;
};

void flatten_tree(const Tree& t, int parent, FlatForest& out) {
  const int me = static_cast<int>(out.parent.size());
  out.parent.push_back(parent);
  out.label.push_back(t.root());
  for (const Tree& c : t.children()) flatten_tree(c, me, out);
}

FlatForest flatten(const Forest& f) {
  FlatForest ff;
  for (const Tree& t : f.trees()) flatten_tree(t, -1, ff);
  return ff;
}

}  // namespace

Int forest_sigma_bruteforce(const Forest& f) {
  const FlatForest ff = flatten(f);
  const int n = static_cast<int>(ff.parent.size());
  if (n == 0) return 1;
  if (n > 8) throw std::invalid_argument("forest_sigma_bruteforce: too many vertices");
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  Int count = 0;
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (!(ff.label[v] == ff.label[perm[v]])) ok = false;
      const int p = ff.parent[v];
      const int q = ff.parent[perm[v]];
      if (p == -1) {
        if (q != -1) ok = false;
      } else {
        if (q == -1 || perm[p] != q) ok = false;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

namespace {

Int count_extensions(std::vector<int>& indegree, const std::vector<std::vector<int>>& children,
                     std::vector<bool>& placed, int remaining) {
  if (remaining == 0) return 1;
  Int total = 0;
  const int n = static_cast<int>(indegree.size());
  for (int v = 0; v < n; ++v) {
    if (placed[v] || indegree[v] != 0) continue;
    placed[v] = true;
    for (int c : children[v]) --indegree[c];
    total += count_extensions(indegree, children, placed, remaining - 1);
    for (int c : children[v]) ++indegree[c];
    placed[v] = false;
  }
  return total;
}

}  // namespace

Int linear_extension_count(const Tree& t) {
  if (t.vertex_count() > 10) {
    throw std::invalid_argument("linear_extension_count: refusing trees with more than 10 vertices");
  }
  FlatForest ff;
  flatten_tree(t, -1, ff);
  const int n = static_cast<int>(ff.parent.size());
  std::vector<std::vector<int>> children(n);
  std::vector<int> indegree(n, 0);
  for (int v = 0; v < n; ++v) {
    if (ff.parent[v] >= 0) {
      children[ff.parent[v]].push_back(v);
      ++indegree[v];
    }
  }
  std::vector<bool> placed(n, false);
  return count_extensions(indegree, children, placed, n);
}

}  // namespace treehopf
