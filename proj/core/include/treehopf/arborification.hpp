#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "treehopf/lincomb.hpp"
#include "treehopf/prelie.hpp"
#include "treehopf/qshuffle.hpp"
#include "treehopf/substitution.hpp"
#include "treehopf/tensors.hpp"

namespace treehopf {

/// Arborification: the Hopf morphism onto the shuffle algebra,
/// a(B^i_+(F)) = (a(tau_1) sh ... sh a(tau_n)) i. Multiplicative from the
/// forest product to the shuffle product.
LinComb<Word> arborify(const Tree& t);
LinComb<Word> arborify(const Forest& f);
LinComb<Word> arborify(const LinComb<Forest>& x);

/// Contracting arborification: same recursion with the quasi-shuffle.
LinComb<Word> contract_arborify(const Tree& t, const Semigroup& sg);
LinComb<Word> contract_arborify(const Forest& f, const Semigroup& sg);
LinComb<Word> contract_arborify(const LinComb<Forest>& x, const Semigroup& sg);

/// The inverse tree factorial character v(t) = 1/t!.
PlusCharacter inv_tree_factorial_char();

/// The arborified Hoffman exponential: Psi_v with v = 1/t!.
LinComb<Forest> arbo_hoffman_exp(const Forest& f, const Semigroup& sg);
LinComb<Forest> arbo_hoffman_exp(const LinComb<Forest>& x, const Semigroup& sg);

/// Adjoint of the arborified Hoffman exponential on a single vertex:
/// sum over trees tau with at most max_vertices vertices, decorated from the
/// base alphabet, whose decorations bracket-multiply to target, weighted by
/// cm(tau)/|tau|!.
LinComb<Tree> arbo_hoffman_adjoint(const SemigroupElement& target,
                                   const std::vector<std::string>& alphabet,
                                   const Semigroup& sg, int max_vertices);

/// The Marcus canonical extension as a generator assignment over the
/// quadratic-variation alphabet: letter n (n >= 1) receives the coefficient
/// of d[Z]^(n), namely (1/n!) L^{n-1} of the diffusion letter grafted onto
/// itself; the drift letter "0" maps to its own single vertex.
std::map<std::string, LinComb<Tree>> marcus_modified_field(int n_max);

/// Residual of the adjoint/flow identity of the substitution machinery:
/// sum over trees with at most N vertices of (1/sigma(tau)) [g(tau) (x) tau
/// - tau (x) Psi_a(tau)], with g the pre-Lie morphism generated by
/// g(vertex) = sum a(tau)/sigma(tau) tau and terms of left degree beyond N
/// dropped on both sides. Undecorated (single idempotent letter). Expected
/// to vanish identically.
LinComb<TensorFF> flow_adjoint_residual(const std::function<Rat(const Tree&)>& a, int N);

}  // namespace treehopf
