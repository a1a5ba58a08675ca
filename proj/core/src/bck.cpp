#include "treehopf/bck.hpp"

#include <stdexcept>

#include "treehopf/stats.hpp"

namespace treehopf {

LinComb<TensorFF> bck_coproduct(const Tree& t) {
  LinComb<TensorFF> out;
  out.add(TensorFF{Forest(t), Forest::unit()}, Rat(1));
  // (id (x) B^i_+) applied to the coproduct of the child forest.
  LinComb<TensorFF> inner = bck_coproduct(b_minus(t));
  for (const auto& [term, c] : inner.terms()) {
    out.add(TensorFF{term.left, Forest(b_plus(t.root(), term.right))}, c);
  }
  return out;
}

LinComb<TensorFF> bck_coproduct(const Forest& f) {
  LinComb<TensorFF> out(TensorFF{Forest::unit(), Forest::unit()});
  for (const Tree& t : f.trees()) {
    out = bilinear(out, bck_coproduct(t), [](const TensorFF& a, const TensorFF& b) {
      return LinComb<TensorFF>(TensorFF{a.left * b.left, a.right * b.right});
    });
  }
  return out;
}

namespace {

struct FlatTree {
  std::vector<int> parent;                // -1 for the root (vertex 0)
  std::vector<SemigroupElement> label;
  std::vector<std::vector<int>> children; // by vertex, in canonical order
};

int flatten(const Tree& t, int parent, FlatTree& out) {
  const int me = static_cast<int>(out.parent.size());
  out.parent.push_back(parent);
  out.label.push_back(t.root());
  out.children.emplace_back();
  for (const Tree& c : t.children()) {
    const int ci = flatten(c, me, out);
    out.children[me].push_back(ci);
  }
  return me;
}

Tree rebuild(const FlatTree& ft, int v, const std::vector<bool>& cut) {
  std::vector<Tree> ch;
  for (int c : ft.children[v]) {
    if (!cut[c]) ch.push_back(rebuild(ft, c, cut));
  }
  return Tree(ft.label[v], std::move(ch));
}

Tree subtree_at(const FlatTree& ft, int v) {
  std::vector<Tree> ch;
  for (int c : ft.children[v]) ch.push_back(subtree_at(ft, c));
  return Tree(ft.label[v], std::move(ch));
}

}  // namespace

LinComb<TensorFF> bck_coproduct_cuts(const Tree& t) {
  FlatTree ft;
  flatten(t, -1, ft);
  const int n = static_cast<int>(ft.parent.size());
  if (n > 26) {
    throw std::invalid_argument("bck_coproduct_cuts: edge-subset enumeration refuses trees this large");
  }
  LinComb<TensorFF> out;
  out.add(TensorFF{Forest(t), Forest::unit()}, Rat(1));
  // Cut sets are subsets of edges (identified with their child vertex) such
  // that no cut edge is an ancestor of another.
  const int edges = n - 1;
  for (unsigned mask = 0; mask < (1u << edges); ++mask) {
    std::vector<bool> cut(n, false);
    for (int e = 0; e < edges; ++e) {
      if (mask & (1u << e)) cut[e + 1] = true;  // vertex e+1 in preorder
    }
    bool admissible = true;
    for (int v = 1; v < n && admissible; ++v) {
      if (!cut[v]) continue;
      for (int a = ft.parent[v]; a > 0; a = ft.parent[a]) {
        if (cut[a]) {
          admissible = false;
          break;
        }
      }
    }
    if (!admissible) continue;
    std::vector<Tree> severed;
    for (int v = 1; v < n; ++v) {
      if (cut[v]) severed.push_back(subtree_at(ft, v));
    }
    out.add(TensorFF{Forest(std::move(severed)), Forest(rebuild(ft, 0, cut))}, Rat(1));
  }
  return out;
}

Rat pairing(const Forest& f, const Forest& g) {
  if (f == g) return Rat(forest_sigma(f));
  return Rat(0);
}

BckFunctional BckFunctional::character(std::function<Rat(const Tree&)> tree_value,
                                       std::optional<int> degree_bound) {
  auto v = [tv = std::move(tree_value)](const Forest& f) {
    Rat r(1);
    for (const Tree& t : f.trees()) r *= tv(t);
    return r;
  };
  return BckFunctional(Kind::Character, std::move(v), degree_bound);
}

BckFunctional BckFunctional::infinitesimal(std::function<Rat(const Tree&)> tree_value,
                                           std::optional<int> degree_bound) {
  auto v = [tv = std::move(tree_value)](const Forest& f) {
    if (f.tree_count() != 1) return Rat(0);
    return tv(f.trees().front());
  };
  return BckFunctional(Kind::Infinitesimal, std::move(v), degree_bound);
}

BckFunctional BckFunctional::general(std::function<Rat(const Forest&)> forest_value,
                                     std::optional<int> degree_bound) {
  return BckFunctional(Kind::General, std::move(forest_value), degree_bound);
}

BckFunctional BckFunctional::counit() {
  return character([](const Tree&) { return Rat(0); });
}

BckFunctional BckFunctional::dual(const Forest& f) {
  Rat s = pairing(f, f);
  auto kind = f.tree_count() == 1 ? Kind::Infinitesimal : Kind::General;
  auto v = [f, s](const Forest& g) { return f == g ? s : Rat(0); };
  return BckFunctional(kind, std::move(v), std::nullopt);
}

Rat BckFunctional::operator()(const Forest& f) const {
  if (degree_bound_ && f.vertex_count() > *degree_bound_) {
    throw std::out_of_range("BckFunctional: evaluation beyond the degree bound");
  }
  return value_(f);
}

Rat BckFunctional::operator()(const LinComb<Forest>& x) const {
  Rat r(0);
  for (const auto& [f, c] : x.terms()) r += c * (*this)(f);
  return r;
}

Rat convolve_bck(const BckFunctional& u, const BckFunctional& w, const Forest& f) {
  Rat r(0);
  for (const auto& [term, c] : bck_coproduct(f).terms()) {
    r += c * u(term.left) * w(term.right);
  }
  return r;
}

}  // namespace treehopf
