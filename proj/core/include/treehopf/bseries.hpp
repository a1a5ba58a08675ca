#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "treehopf/polynomial.hpp"
#include "treehopf/tree.hpp"

namespace treehopf {

/// Exact directional-derivative pre-Lie product of vector fields:
/// (f |> g)^i = sum_j f^j d g^i / d x_j.
PolyVectorField field_prelie(const PolyVectorField& f, const PolyVectorField& g);

using FieldAssignment = std::map<std::string, PolyVectorField>;

/// Elementary differential of the decorated tree t for the per-letter
/// fields: the pre-Lie morphism extending the single-vertex values.
PolyVectorField elementary_differential(const FieldAssignment& fields, const Tree& t);

/// Tree-indexed B-series coefficients; the empty forest always counts as 1.
using TreeFunctional = std::function<Rat(const Tree&)>;

/// Exact Taylor coefficient vectors of B(a, f) at y0 through order N: entry
/// k holds the coefficient vector of h^k. Trees are enumerated over the
/// assignment's letters.
std::vector<std::vector<Rat>> bseries_truncated(const TreeFunctional& a,
                                                const FieldAssignment& fields, int N,
                                                const std::vector<Rat>& y0);

/// The modified field of the substitution law, for a single-letter
/// assignment: sum over trees of h^(|t|-1) (a(t)/sigma(t)) F_f[t], carried
/// in the reserved h slot of the polynomial ring. Requires a(single) = 1.
PolyVectorField substitute_field(const TreeFunctional& a, const FieldAssignment& fields, int N);

/// Largest absolute difference of the h^k coefficient vectors, k <= N, of
/// B(b, (1/h) B(a, f)) and B(a (*) b, f) at y0. Exactly zero when the
/// substitution law holds.
Rat substitution_law_residual(const TreeFunctional& a, const TreeFunctional& b,
                              const FieldAssignment& fields, int N, const std::vector<Rat>& y0);

}  // namespace treehopf
