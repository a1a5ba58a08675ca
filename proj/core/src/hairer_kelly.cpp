#include "treehopf/hairer_kelly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "treehopf/bck.hpp"
#include "treehopf/enumerate.hpp"
#include "treehopf/prelie.hpp"
#include "treehopf/stats.hpp"
#include "treehopf/substitution.hpp"

namespace treehopf {

namespace {

void require_undecorated(const SemigroupElement& letter, const Tree& t) {
  if (!(t.root() == letter)) {
    throw std::invalid_argument("hairer-kelly: decorated input is unsupported");
  }
  for (const Tree& c : t.children()) require_undecorated(letter, c);
}

SemigroupElement uniform_letter(const Forest& f) {
  if (f.is_unit()) return SemigroupElement("o");
  const SemigroupElement letter = f.trees().front().root();
  if (!letter.is_base()) throw std::invalid_argument("hairer-kelly: decorated input is unsupported");
  for (const Tree& t : f.trees()) require_undecorated(letter, t);
  return letter;
}

// |s|!/s!, the number of linear extensions of s; depends only on the shape.
Rat cm_sigma(const Tree& s) {
  Rat r(int_factorial(static_cast<unsigned>(s.vertex_count())));
  r /= Rat(tree_factorial(s));
  r.canonicalize();
  return r;
}

}  // namespace

LinComb<TensorWord> shuffle_tensor_words(const TensorWord& a, const TensorWord& b) {
  if (a.empty()) return LinComb<TensorWord>(b);
  if (b.empty()) return LinComb<TensorWord>(a);
  TensorWord at{std::vector<Tree>(a.letters.begin() + 1, a.letters.end())};
  TensorWord bt{std::vector<Tree>(b.letters.begin() + 1, b.letters.end())};
  LinComb<TensorWord> out;
  for (const auto& [w, c] : shuffle_tensor_words(at, b).terms()) {
    TensorWord r{{a.letters.front()}};
    r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.end());
    out.add(r, c);
  }
  for (const auto& [w, c] : shuffle_tensor_words(a, bt).terms()) {
    TensorWord r{{b.letters.front()}};
    r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.end());
    out.add(r, c);
  }
  return out;
}

LinComb<TensorWord> shuffle_tensor_words(const LinComb<TensorWord>& a,
                                         const LinComb<TensorWord>& b) {
  return bilinear(a, b,
                  [](const TensorWord& x, const TensorWord& y) { return shuffle_tensor_words(x, y); });
}

LinComb<TensorWord> hk_psi(const Tree& t) {
  require_undecorated(t.root(), t);
  // Coproduct terms with a nonunit right leg; for tree input the right leg
  // is always a tree, which becomes the appended letter.
  LinComb<TensorWord> out;
  for (const auto& [term, c] : bck_coproduct(t).terms()) {
    if (term.right.is_unit()) continue;
    if (term.right.tree_count() != 1) {
      throw std::logic_error("hk_psi: non-tree right coproduct leg");
    }
    const Tree& letter = term.right.trees().front();
    LinComb<TensorWord> left = hk_psi(term.left);
    for (const auto& [w, cw] : left.terms()) out.add(w.append(letter), c * cw);
  }
  return out;
}

LinComb<TensorWord> hk_psi(const Forest& f) {
  uniform_letter(f);
  LinComb<TensorWord> out{TensorWord{}};
  for (const Tree& t : f.trees()) out = shuffle_tensor_words(out, hk_psi(t));
  return out;
}

Forest project_forest(const TensorWord& w) { return Forest(w.letters); }

LinComb<Forest> project_forest(const LinComb<TensorWord>& x) {
  return x.map_basis([](const TensorWord& w) { return project_forest(w); });
}

LinComb<Forest> hk_psi_tilde(const Tree& t) {
  require_undecorated(t.root(), t);
  const Semigroup sg = Semigroup::idempotent(t.root().base());
  LinComb<Forest> out;
  for (const auto& [term, c] : sub_coproduct(t, sg).terms()) {
    out.add(term.left, c * cm_sigma(term.right));
  }
  return out;
}

LinComb<Forest> hk_psi_tilde(const Forest& f) {
  uniform_letter(f);
  // Symmetrisation of the shuffle: tensor words of lengths (k, m) land on
  // the same forest with a binomial weight, and a word's length equals the
  // component count of its projected forest.
  LinComb<Forest> acc{Forest::unit()};
  for (const Tree& t : f.trees()) {
    acc = bilinear(acc, hk_psi_tilde(t), [](const Forest& a, const Forest& g) {
      const unsigned k = static_cast<unsigned>(a.tree_count());
      const unsigned m = static_cast<unsigned>(g.tree_count());
      Rat binom(int_factorial(k + m));
      binom /= Rat(int_factorial(k) * int_factorial(m));
      binom.canonicalize();
      return LinComb<Forest>(a * g, binom);
    });
  }
  return acc;
}

namespace {

using InvMemo = std::map<Tree, LinComb<Forest>>;

LinComb<Forest> psi_tilde_inv_forest(const Forest& f, InvMemo& memo);

LinComb<Forest> psi_tilde_inv_tree(const Tree& t, InvMemo& memo) {
  if (auto it = memo.find(t); it != memo.end()) return it->second;
  const Semigroup sg = Semigroup::idempotent(t.root().base());
  LinComb<Forest> out{Forest(t)};
  for (const auto& [term, c] : sub_coproduct(t, sg).terms()) {
    if (term.right.vertex_count() == 1) continue;  // reduced: drop the full contraction
    LinComb<Forest> inner = psi_tilde_inv_forest(term.left, memo);
    inner *= c * cm_sigma(term.right);
    out -= inner;
  }
  memo.emplace(t, out);
  return out;
}

LinComb<Forest> psi_tilde_inv_forest(const Forest& f, InvMemo& memo) {
  LinComb<Forest> out{Forest::unit()};
  for (const Tree& t : f.trees()) {
    out = bilinear(out, psi_tilde_inv_tree(t, memo),
                   [](const Forest& a, const Forest& b) { return LinComb<Forest>(a * b); });
  }
  const unsigned n = static_cast<unsigned>(f.tree_count());
  Rat w = Rat(1) / Rat(int_factorial(n));
  w.canonicalize();
  out *= w;
  return out;
}

}  // namespace

LinComb<Forest> hk_psi_tilde_inv(const Forest& f) {
  uniform_letter(f);
  InvMemo memo;
  return psi_tilde_inv_forest(f, memo);
}

LinComb<Forest> hk_psi_tilde_inv(const LinComb<Forest>& x) {
  InvMemo memo;
  LinComb<Forest> out;
  for (const auto& [f, c] : x.terms()) {
    uniform_letter(f);
    LinComb<Forest> img = psi_tilde_inv_forest(f, memo);
    img *= c;
    out += img;
  }
  return out;
}

LinComb<TensorFF> hk_flow_identity_residual(int N) {
  if (N < 1) throw std::invalid_argument("hk_flow_identity_residual: need N >= 1");
  const std::vector<std::string> alphabet{"o"};
  LinComb<TensorFF> residual;
  InvMemo memo;
  for (int n = 1; n <= N; ++n) {
    for (const Forest& f : enumerate_forests(n, alphabet)) {
      Rat inv_aut = Rat(1) / Rat(forest_sigma(f));
      inv_aut.canonicalize();
      residual.add(TensorFF{f, f}, inv_aut);

      Rat inv_sigmas(1);
      for (const Tree& t : f.trees()) inv_sigmas /= Rat(tree_sigma(t));
      inv_sigmas.canonicalize();
      LinComb<Forest> inv_image = psi_tilde_inv_forest(f, memo);

      std::vector<Tree> order = f.trees();  // sorted: canonical first permutation
      do {
        LinComb<Forest> gl{Forest(order.front())};
        for (std::size_t k = 1; k < order.size(); ++k) {
          gl = gl_product(gl, LinComb<Forest>(Forest(order[k])));
        }
        for (const auto& [lf, lc] : gl.terms()) {
          for (const auto& [rf, rc] : inv_image.terms()) {
            residual.add(TensorFF{lf, rf}, -inv_sigmas * lc * rc);
          }
        }
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
  return residual;
}

}  // namespace treehopf
