#pragma once

#include <map>
#include <string>

#include "treehopf/lincomb.hpp"
#include "treehopf/tree.hpp"

namespace treehopf {

/// Grafting pre-Lie product: sum over all vertices v of t2 of the tree
/// obtained by attaching t1's root as a new child of v. Canonical-form
/// collisions merge into integer coefficients.
LinComb<Tree> graft(const Tree& t1, const Tree& t2);
LinComb<Tree> graft(const LinComb<Tree>& a, const LinComb<Tree>& b);

/// Oudom-Guin extension of grafting to a forest acting on a tree, by the
/// subtraction recursion (tau F) |> t = tau |> (F |> t) - (tau |> F) |> t.
LinComb<Tree> forest_graft(const Forest& f, const Tree& t);
LinComb<Tree> forest_graft(const LinComb<Forest>& f, const LinComb<Tree>& t);

/// Independent enumerator: grafts each tree of f onto an independently
/// chosen vertex of t. Test oracle for the subtraction recursion.
LinComb<Tree> forest_graft_direct(const Forest& f, const Tree& t);

/// n-fold left grafting L^n_a(b); L^0 = id.
LinComb<Tree> left_power(const LinComb<Tree>& a, const LinComb<Tree>& b, int n);

/// Grossman-Larson product F * G = B_-(F |> B_+(G)), computed with a
/// reserved auxiliary root decoration that never occurs in user input.
LinComb<Forest> gl_product(const Forest& f, const Forest& g);
LinComb<Forest> gl_product(const LinComb<Forest>& f, const LinComb<Forest>& g);

/// Images of the generators under a pre-Lie morphism out of the free
/// pre-Lie algebra: base letter -> image of the single vertex.
using GeneratorAssignment = std::map<std::string, LinComb<Tree>>;

/// The unique pre-Lie morphism extending g, evaluated on t via
/// psi(B^i_+(F)) = psi(F) |> psi(single vertex i). Throws if a letter of t
/// has no assigned image.
LinComb<Tree> prelie_extend(const GeneratorAssignment& g, const Tree& t);
LinComb<Tree> prelie_extend(const GeneratorAssignment& g, const LinComb<Tree>& x);

/// Same morphism with every image term beyond max_vertices dropped. Exact on
/// the terms it keeps, since grafting never removes vertices.
LinComb<Tree> prelie_extend_truncated(const GeneratorAssignment& g, const Tree& t,
                                      int max_vertices);

}  // namespace treehopf
