#include "treehopf/substitution.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "treehopf/stats.hpp"

namespace treehopf {

namespace {

struct FlatTree {
  std::vector<int> parent;  // -1 for the root (vertex 0, preorder)
  std::vector<SemigroupElement> label;
  std::vector<std::vector<int>> children;
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

// Extracted subtree of the block whose top vertex is v: follow kept edges.
Tree block_tree(const FlatTree& ft, int v, const std::vector<bool>& kept) {
  std::vector<Tree> ch;
  for (int c : ft.children[v]) {
    if (kept[c]) ch.push_back(block_tree(ft, c, kept));
  }
  return Tree(ft.label[v], std::move(ch));
}

Tree contract_tree(const FlatTree& ft, int top, const std::vector<std::vector<int>>& block_children,
                   const std::vector<SemigroupElement>& block_label) {
  std::vector<Tree> ch;
  for (int c : block_children[top]) ch.push_back(contract_tree(ft, c, block_children, block_label));
  return Tree(block_label[top], std::move(ch));
}

}  // namespace

LinComb<TensorFT> sub_coproduct(const Tree& t, const Semigroup& sg) {
  FlatTree ft;
  flatten(t, -1, ft);
  const int n = static_cast<int>(ft.parent.size());
  const int edges = n - 1;
  if (edges > 25) {
    throw std::invalid_argument("sub_coproduct: edge-subset enumeration refuses trees this large");
  }
  LinComb<TensorFT> out;
  // Every edge subset S defines a full subforest: kept edges bind vertices
  // into blocks, dropped edges survive in the contraction.
  for (unsigned mask = 0; mask < (1u << edges); ++mask) {
    std::vector<bool> kept(n, false);
    for (int e = 0; e < edges; ++e) {
      if (mask & (1u << e)) kept[e + 1] = true;  // edge identified by its child vertex
    }
    // top of the block containing v
    std::vector<int> top(n);
    for (int v = 0; v < n; ++v) top[v] = kept[v] ? top[ft.parent[v]] : v;

    std::vector<Tree> extracted;
    std::vector<std::vector<int>> block_children(n);
    std::vector<std::vector<SemigroupElement>> block_letters(n);
    for (int v = 0; v < n; ++v) block_letters[top[v]].push_back(ft.label[v]);
    for (int v = 1; v < n; ++v) {
      if (!kept[v]) block_children[top[ft.parent[v]]].push_back(v);
    }
    std::vector<SemigroupElement> block_label;
    block_label.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      if (top[v] == v) {
        extracted.push_back(block_tree(ft, v, kept));
      }
      block_label.push_back(block_letters[v].empty() ? ft.label[v]
                                                     : sg.mul_all(block_letters[v]));
    }
    Tree contracted = contract_tree(ft, 0, block_children, block_label);
    out.add(TensorFT{Forest(std::move(extracted)), std::move(contracted)}, Rat(1));
  }
  return out;
}

LinComb<TensorFF> coaction(const Forest& f, const Semigroup& sg) {
  LinComb<TensorFF> out(TensorFF{Forest::unit(), Forest::unit()});
  for (const Tree& t : f.trees()) {
    LinComb<TensorFT> dp = sub_coproduct(t, sg);
    out = bilinear(out, dp, [](const TensorFF& a, const TensorFT& b) {
      return LinComb<TensorFF>(TensorFF{a.left * b.left, a.right * b.right});
    });
  }
  return out;
}

PlusCharacter PlusCharacter::from_rule(std::function<Rat(const Tree&)> tree_value,
                                       bool unit_on_singletons) {
  return PlusCharacter(std::move(tree_value), unit_on_singletons);
}

PlusCharacter PlusCharacter::from_values(std::map<Tree, Rat> values) {
  bool unit = true;
  for (const auto& [t, v] : values) {
    if (t.vertex_count() == 1 && v != 1) unit = false;
  }
  auto rule = [vals = std::move(values)](const Tree& t) {
    auto it = vals.find(t);
    if (it != vals.end()) return it->second;
    return t.vertex_count() == 1 ? Rat(1) : Rat(0);
  };
  return PlusCharacter(std::move(rule), unit);
}

PlusCharacter PlusCharacter::unit() {
  return PlusCharacter([](const Tree& t) { return t.vertex_count() == 1 ? Rat(1) : Rat(0); },
                       true);
}

PlusCharacter PlusCharacter::inverse_tree_factorial() {
  return PlusCharacter(
      [](const Tree& t) {
        Rat r = Rat(1) / Rat(tree_factorial(t));
        r.canonicalize();
        return r;
      },
      true);
}

Rat PlusCharacter::operator()(const Tree& t) const { return tree_value_(t); }

Rat PlusCharacter::operator()(const Forest& f) const {
  Rat r(1);
  for (const Tree& t : f.trees()) r *= tree_value_(t);
  return r;
}

Rat PlusCharacter::operator()(const LinComb<Forest>& x) const {
  Rat r(0);
  for (const auto& [f, c] : x.terms()) r += c * (*this)(f);
  return r;
}

Rat convolve_plus(const PlusCharacter& u, const PlusCharacter& w, const Tree& t,
                  const Semigroup& sg) {
  Rat r(0);
  for (const auto& [term, c] : sub_coproduct(t, sg).terms()) {
    r += c * u(term.left) * w(term.right);
  }
  return r;
}

Rat convolve_plus_general(const PlusFunctional& u, const PlusFunctional& w, const Forest& f,
                          const Semigroup& sg) {
  Rat r(0);
  for (const auto& [term, c] : coaction(f, sg).terms()) {
    r += c * u(term.left) * w(term.right);
  }
  return r;
}

LinComb<Forest> psi_v(const PlusCharacter& v, const Forest& f, const Semigroup& sg) {
  LinComb<Forest> out;
  for (const auto& [term, c] : coaction(f, sg).terms()) {
    out.add(term.right, c * v(term.left));
  }
  return out;
}

LinComb<Forest> psi_v(const PlusCharacter& v, const LinComb<Forest>& x, const Semigroup& sg) {
  return x.apply([&](const Forest& f) { return psi_v(v, f, sg); });
}

namespace {

struct InverseMemo {
  std::mutex mu;
  std::map<Tree, Rat> values;
};

// Triangular on the edge grading: in (w (*) v)(t) = unit(t), the full edge
// subset contributes w(t) * v(single vertex) = w(t) and every other subset
// only evaluates w on trees with strictly fewer edges.
Rat inverted_value(const PlusCharacter& v, const Semigroup& sg, int max_edges,
                   const std::shared_ptr<InverseMemo>& memo, const Tree& t) {
  if (t.vertex_count() == 1) return Rat(1);
  if (t.edge_count() > max_edges) {
    throw std::out_of_range("inverted character: evaluation beyond the degree bound");
  }
  {
    std::lock_guard<std::mutex> lock(memo->mu);
    auto it = memo->values.find(t);
    if (it != memo->values.end()) return it->second;
  }
  Rat acc(0);
  for (const auto& [term, c] : sub_coproduct(t, sg).terms()) {
    if (term.left == Forest(t)) continue;  // the w(t) term being solved for
    Rat w_left(1);
    for (const Tree& s : term.left.trees()) w_left *= inverted_value(v, sg, max_edges, memo, s);
    acc += c * w_left * v(term.right);
  }
  Rat result = -acc;
  std::lock_guard<std::mutex> lock(memo->mu);
  memo->values.emplace(t, result);
  return result;
}

}  // namespace

PlusCharacter invert_character(const PlusCharacter& v, const Semigroup& sg, int max_edges) {
  if (!v.unit_on_singletons()) {
    throw std::invalid_argument("invert_character: v(single vertex) must be 1");
  }
  auto memo = std::make_shared<InverseMemo>();
  auto rule = [v, sg, max_edges, memo](const Tree& t) {
    return inverted_value(v, sg, max_edges, memo, t);
  };
  return PlusCharacter::from_rule(std::move(rule), true);
}

Rat invert_character_series(const PlusCharacter& v, const Tree& t, const Semigroup& sg) {
  // Geometric-series inverse of v: with pi := id - eta eps, the convolution
  // inverse of id = eta eps + pi is sum over i of (-1)^i pi^{(*) i}. Composed
  // with v the series terminates at the edge count because v (a character
  // with value 1 on singletons) kills edge-free slots of pi.
  PlusFunctional eps = [](const Forest& f) -> Rat {
    return f.edge_count() == 0 ? Rat(1) : Rat(0);
  };
  PlusFunctional u = [v, eps](const Forest& f) -> Rat { return v(f) - eps(f); };
  Forest arg{t};
  Rat total = eps(arg);
  PlusFunctional power = eps;  // u^{(*) 0}
  int sign = -1;
  for (int i = 1; i <= t.edge_count(); ++i) {
    PlusFunctional next = [power, u, sg](const Forest& f) -> Rat {
      return convolve_plus_general(power, u, f, sg);
    };
    total += Rat(sign) * next(arg);
    power = std::move(next);
    sign = -sign;
  }
  return total;
}

}  // namespace treehopf
