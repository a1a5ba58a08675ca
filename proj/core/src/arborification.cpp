#include "treehopf/arborification.hpp"

#include <stdexcept>

#include "treehopf/enumerate.hpp"
#include "treehopf/stats.hpp"

namespace treehopf {

namespace {

LinComb<Word> append_letter(const LinComb<Word>& x, const SemigroupElement& i) {
  return x.map_basis([&](const Word& w) { return w.append(i); });
}

}  // namespace

LinComb<Word> arborify(const Tree& t) {
  return append_letter(arborify(b_minus(t)), t.root());
}

LinComb<Word> arborify(const Forest& f) {
  LinComb<Word> out{Word{}};
  for (const Tree& t : f.trees()) out = shuffle(out, arborify(t));
  return out;
}

LinComb<Word> arborify(const LinComb<Forest>& x) {
  return x.apply([](const Forest& f) { return arborify(f); });
}

LinComb<Word> contract_arborify(const Tree& t, const Semigroup& sg) {
  return append_letter(contract_arborify(b_minus(t), sg), t.root());
}

LinComb<Word> contract_arborify(const Forest& f, const Semigroup& sg) {
  LinComb<Word> out{Word{}};
  for (const Tree& t : f.trees()) out = quasi_shuffle(out, contract_arborify(t, sg), sg);
  return out;
}

LinComb<Word> contract_arborify(const LinComb<Forest>& x, const Semigroup& sg) {
  return x.apply([&](const Forest& f) { return contract_arborify(f, sg); });
}

PlusCharacter inv_tree_factorial_char() { return PlusCharacter::inverse_tree_factorial(); }

LinComb<Forest> arbo_hoffman_exp(const Forest& f, const Semigroup& sg) {
  return psi_v(inv_tree_factorial_char(), f, sg);
}

LinComb<Forest> arbo_hoffman_exp(const LinComb<Forest>& x, const Semigroup& sg) {
  return psi_v(inv_tree_factorial_char(), x, sg);
}

LinComb<Tree> arbo_hoffman_adjoint(const SemigroupElement& target,
                                   const std::vector<std::string>& alphabet,
                                   const Semigroup& sg, int max_vertices) {
  if (max_vertices < 1) throw std::invalid_argument("arbo_hoffman_adjoint: need max_vertices >= 1");
  LinComb<Tree> out;
  for (const Tree& t : enumerate_trees_up_to(max_vertices, alphabet)) {
    std::vector<SemigroupElement> letters;
    letters.reserve(static_cast<std::size_t>(t.vertex_count()));
    struct Collect {
      static void run(const Tree& s, std::vector<SemigroupElement>& ls) {
        ls.push_back(s.root());
        for (const Tree& c : s.children()) run(c, ls);
      }
    };
    Collect::run(t, letters);
    if (!(sg.mul_all(letters) == target)) continue;
    Rat w = tree_cm(t) / Rat(int_factorial(static_cast<unsigned>(t.vertex_count())));
    w.canonicalize();
    out.add(t, w);
  }
  return out;
}

std::map<std::string, LinComb<Tree>> marcus_modified_field(int n_max) {
  if (n_max < 1) throw std::invalid_argument("marcus_modified_field: need n_max >= 1");
  std::map<std::string, LinComb<Tree>> out;
  const LinComb<Tree> diffusion{Tree(SemigroupElement("1"))};
  out["0"] = LinComb<Tree>{Tree(SemigroupElement("0"))};
  for (int n = 1; n <= n_max; ++n) {
    LinComb<Tree> term = left_power(diffusion, diffusion, n - 1);
    Rat w = Rat(1) / Rat(int_factorial(static_cast<unsigned>(n)));
    w.canonicalize();
    term *= w;
    out[std::to_string(n)] = std::move(term);
  }
  return out;
}

LinComb<TensorFF> flow_adjoint_residual(const std::function<Rat(const Tree&)>& a, int N) {
  if (N < 1) throw std::invalid_argument("flow_adjoint_residual: need N >= 1");
  const std::vector<std::string> alphabet{"o"};
  const Semigroup sg = Semigroup::idempotent("o");

  GeneratorAssignment g;
  LinComb<Tree> gen;
  for (const Tree& t : enumerate_trees_up_to(N, alphabet)) {
    Rat c = a(t) / Rat(tree_sigma(t));
    c.canonicalize();
    gen.add(t, c);
  }
  g["o"] = std::move(gen);

  PlusCharacter a_char = PlusCharacter::from_rule(a, /*unit_on_singletons=*/false);

  LinComb<TensorFF> residual;
  for (const Tree& t : enumerate_trees_up_to(N, alphabet)) {
    Rat inv_sigma = Rat(1) / Rat(tree_sigma(t));
    inv_sigma.canonicalize();
    // graded-consistent truncation: terms of g(t) beyond N dropped
    LinComb<Tree> image = prelie_extend_truncated(g, t, N);
    for (const auto& [s, c] : image.terms()) {
      residual.add(TensorFF{Forest(s), Forest(t)}, inv_sigma * c);
    }
    for (const auto& [f, c] : psi_v(a_char, Forest(t), sg).terms()) {
      residual.add(TensorFF{Forest(t), f}, -inv_sigma * c);
    }
  }
  return residual;
}

}  // namespace treehopf
