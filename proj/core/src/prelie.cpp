#include "treehopf/prelie.hpp"

#include <stdexcept>

#include "treehopf/textio.hpp"

namespace treehopf {

namespace {

// Tree with t1 attached as a new child of the root.
Tree attach_at_root(const Tree& t1, const Tree& t2) {
  std::vector<Tree> ch = t2.children();
  ch.push_back(t1);
  return Tree(t2.root(), std::move(ch));
}

void graft_all_vertices(const Tree& t1, const Tree& t2, LinComb<Tree>& out) {
  out.add(attach_at_root(t1, t2), Rat(1));
  const auto& ch = t2.children();
  for (std::size_t i = 0; i < ch.size(); ++i) {
    LinComb<Tree> sub;
    graft_all_vertices(t1, ch[i], sub);
    for (const auto& [s, c] : sub.terms()) {
      std::vector<Tree> nch = ch;
      nch[i] = s;
      out.add(Tree(t2.root(), std::move(nch)), c);
    }
  }
}

// Leibniz action of a tree on a forest: graft tau onto each component in turn.
LinComb<Forest> tree_graft_forest(const Tree& tau, const Forest& f) {
  LinComb<Forest> out;
  const auto& ts = f.trees();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    LinComb<Tree> g = graft(tau, ts[i]);
    for (const auto& [s, c] : g.terms()) {
      std::vector<Tree> nts = ts;
      nts[i] = s;
      out.add(Forest(std::move(nts)), c);
    }
  }
  return out;
}

}  // namespace

LinComb<Tree> graft(const Tree& t1, const Tree& t2) {
  LinComb<Tree> out;
  graft_all_vertices(t1, t2, out);
  return out;
}

LinComb<Tree> graft(const LinComb<Tree>& a, const LinComb<Tree>& b) {
  return bilinear(a, b, [](const Tree& x, const Tree& y) { return graft(x, y); });
}

LinComb<Tree> forest_graft(const Forest& f, const Tree& t) {
  if (f.is_unit()) return LinComb<Tree>(t);
  // (tau F') |> t = tau |> (F' |> t) - (tau |> F') |> t
  const Tree& tau = f.trees().front();
  Forest rest(std::vector<Tree>(f.trees().begin() + 1, f.trees().end()));
  LinComb<Tree> first = graft(LinComb<Tree>(tau), forest_graft(rest, t));
  LinComb<Forest> action = tree_graft_forest(tau, rest);
  LinComb<Tree> second = forest_graft(action, LinComb<Tree>(t));
  return first - second;
}

LinComb<Tree> forest_graft(const LinComb<Forest>& f, const LinComb<Tree>& t) {
  return bilinear(f, t, [](const Forest& x, const Tree& y) { return forest_graft(x, y); });
}

LinComb<Tree> forest_graft_direct(const Forest& f, const Tree& t) {
  // Attach each component of f at an independently chosen vertex of t.
  struct Builder {
    static Tree build(const Tree& node, int& next_index,
                      const std::vector<std::vector<const Tree*>>& attach) {
      const int me = next_index++;
      std::vector<Tree> ch;
      for (const Tree& c : node.children()) ch.push_back(build(c, next_index, attach));
      for (const Tree* extra : attach[me]) ch.push_back(*extra);
      return Tree(node.root(), std::move(ch));
    }
  };
  const int n = t.vertex_count();
  const auto& comps = f.trees();
  const std::size_t k = comps.size();
  LinComb<Tree> out;
  std::vector<int> choice(k, 0);
  while (true) {
    std::vector<std::vector<const Tree*>> attach(n);
    for (std::size_t i = 0; i < k; ++i) attach[choice[i]].push_back(&comps[i]);
    int idx = 0;
    out.add(Builder::build(t, idx, attach), Rat(1));
    std::size_t pos = 0;
    while (pos < k && ++choice[pos] == n) choice[pos++] = 0;
    if (pos == k) break;
  }
  return out;
}

LinComb<Tree> left_power(const LinComb<Tree>& a, const LinComb<Tree>& b, int n) {
  if (n < 0) throw std::invalid_argument("left_power: negative exponent");
  LinComb<Tree> acc = b;
  for (int i = 0; i < n; ++i) acc = graft(a, acc);
  return acc;
}

namespace {

// Never produced by the tree grammar, so it cannot collide with user input.
const SemigroupElement& aux_root() {
  static const SemigroupElement aux{std::string(1, '\x01')};
  return aux;
}

}  // namespace

LinComb<Forest> gl_product(const Forest& f, const Forest& g) {
  Tree carrier = b_plus(aux_root(), g);
  LinComb<Tree> grafted = forest_graft(f, carrier);
  return grafted.map_basis([](const Tree& t) { return b_minus(t); });
}

LinComb<Forest> gl_product(const LinComb<Forest>& f, const LinComb<Forest>& g) {
  return bilinear(f, g, [](const Forest& x, const Forest& y) { return gl_product(x, y); });
}

LinComb<Tree> prelie_extend(const GeneratorAssignment& g, const Tree& t) {
  if (!t.root().is_base()) {
    throw std::invalid_argument("prelie_extend: compound decoration " + to_text(t.root()));
  }
  auto it = g.find(t.root().base());
  if (it == g.end()) {
    throw std::invalid_argument("prelie_extend: unassigned letter " + t.root().base());
  }
  if (t.is_leaf()) return it->second;
  // psi(B^i_+(F)) = psi(F) |> psi(._i), with psi applied treewise to F.
  LinComb<Forest> image_forest(Forest::unit());
  for (const Tree& c : t.children()) {
    LinComb<Tree> ci = prelie_extend(g, c);
    image_forest = bilinear(image_forest, ci, [](const Forest& f, const Tree& s) {
      return LinComb<Forest>(f * s);
    });
  }
  return forest_graft(image_forest, it->second);
}

LinComb<Tree> prelie_extend(const GeneratorAssignment& g, const LinComb<Tree>& x) {
  return x.apply([&](const Tree& t) { return prelie_extend(g, t); });
}

LinComb<Tree> prelie_extend_truncated(const GeneratorAssignment& g, const Tree& t,
                                      int max_vertices) {
  if (!t.root().is_base()) {
    throw std::invalid_argument("prelie_extend: compound decoration " + to_text(t.root()));
  }
  auto it = g.find(t.root().base());
  if (it == g.end()) {
    throw std::invalid_argument("prelie_extend: unassigned letter " + t.root().base());
  }
  auto truncate = [max_vertices](const LinComb<Tree>& x) {
    LinComb<Tree> out;
    for (const auto& [s, c] : x.terms()) {
      if (s.vertex_count() <= max_vertices) out.add(s, c);
    }
    return out;
  };
  if (t.is_leaf()) return truncate(it->second);
  LinComb<Forest> image_forest(Forest::unit());
  for (const Tree& c : t.children()) {
    // the root's image contributes at least one more vertex
    LinComb<Tree> ci = prelie_extend_truncated(g, c, max_vertices - 1);
    image_forest = bilinear(image_forest, ci, [&](const Forest& f, const Tree& s) {
      LinComb<Forest> acc;
      if (f.vertex_count() + s.vertex_count() <= max_vertices - 1) acc.add(f * s, Rat(1));
      return acc;
    });
  }
  return truncate(forest_graft(image_forest, truncate(it->second)));
}

}  // namespace treehopf
