#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "treehopf/lincomb.hpp"
#include "treehopf/semigroup.hpp"
#include "treehopf/tensors.hpp"
#include "treehopf/tree.hpp"

namespace treehopf {

/// Extraction/contraction coproduct: sum over all full subforests (edge
/// subsets) of extracted forest (x) contracted tree. Contracted vertices are
/// decorated by the semigroup product of their block's decorations. Graded
/// by the number of edges.
LinComb<TensorFT> sub_coproduct(const Tree& t, const Semigroup& sg);

/// Coaction of H_+ on H_BCK: the coproduct applied treewise and multiplied
/// legwise; Phi(1) = 1 (x) 1 in the decorated setting used here.
LinComb<TensorFF> coaction(const Forest& f, const Semigroup& sg);

/// A linear functional on H_+ described by its values on trees, extended
/// multiplicatively to forests. Characters of H_+ in the sense used by the
/// endomorphisms Psi_v carry v(single vertex) = 1 for every decoration.
class PlusCharacter {
 public:
  static PlusCharacter from_rule(std::function<Rat(const Tree&)> tree_value,
                                 bool unit_on_singletons);
  /// Explicit values on listed trees; single vertices default to 1, all
  /// other trees to 0.
  static PlusCharacter from_values(std::map<Tree, Rat> values);
  /// Z_. : 1 on single-vertex trees, 0 on trees with edges. The unit of the
  /// convolution on H_+ characters.
  static PlusCharacter unit();
  /// v(t) = 1/t!, the inverse tree factorial character.
  static PlusCharacter inverse_tree_factorial();

  bool unit_on_singletons() const { return unit_on_singletons_; }
  Rat operator()(const Tree& t) const;
  Rat operator()(const Forest& f) const;  // multiplicative extension
  Rat operator()(const LinComb<Forest>& x) const;

 private:
  PlusCharacter(std::function<Rat(const Tree&)> v, bool unit)
      : tree_value_(std::move(v)), unit_on_singletons_(unit) {}
  std::function<Rat(const Tree&)> tree_value_;
  bool unit_on_singletons_;
};

/// Convolution on functionals of H_+ evaluated on a tree:
/// (u (*) w)(t) = sum u(extracted) w(contracted) over the coproduct.
Rat convolve_plus(const PlusCharacter& u, const PlusCharacter& w, const Tree& t,
                  const Semigroup& sg);

/// General (not necessarily multiplicative) functionals on H_+, needed by
/// the pseudo-antipode series. Convolution extends to forest arguments
/// through the multiplicative extension of the coproduct.
using PlusFunctional = std::function<Rat(const Forest&)>;
Rat convolve_plus_general(const PlusFunctional& u, const PlusFunctional& w, const Forest& f,
                          const Semigroup& sg);

/// The H_BCK endomorphism Psi_v = (v (x) id) o Phi. For characters v this is
/// a bialgebra endomorphism, an automorphism when v is invertible.
LinComb<Forest> psi_v(const PlusCharacter& v, const Forest& f, const Semigroup& sg);
LinComb<Forest> psi_v(const PlusCharacter& v, const LinComb<Forest>& x, const Semigroup& sg);

/// Convolution inverse of a character with v(single vertex) = 1, computed by
/// triangular recursion on the edge grading. Evaluating the result on a tree
/// with more than `max_edges` edges is an error.
PlusCharacter invert_character(const PlusCharacter& v, const Semigroup& sg, int max_edges);

/// Oracle for invert_character: v o alpha with the pseudo-antipode
/// alpha = sum over i of (id - unit o counit)^{(*) i}.
Rat invert_character_series(const PlusCharacter& v, const Tree& t, const Semigroup& sg);

}  // namespace treehopf
