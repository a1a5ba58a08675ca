#pragma once

#include "treehopf/lincomb.hpp"
#include "treehopf/tensors.hpp"
#include "treehopf/tree.hpp"

namespace treehopf {

// The Hairer-Kelly machinery works with undecorated trees: every vertex must
// carry the same base letter. Decorated input raises std::invalid_argument.

/// Hairer-Kelly map into tensor words over trees, by the recursion
/// psi = (psi (x) gamma) o Delta_BCK with gamma the augmentation projector.
/// Multiplicative from the forest product to the shuffle of tensor words.
LinComb<TensorWord> hk_psi(const Tree& t);
LinComb<TensorWord> hk_psi(const Forest& f);

/// Shuffle product of tensor words (letters are trees).
LinComb<TensorWord> shuffle_tensor_words(const TensorWord& a, const TensorWord& b);
LinComb<TensorWord> shuffle_tensor_words(const LinComb<TensorWord>& a,
                                         const LinComb<TensorWord>& b);

/// Forgets the letter order: the multiset of letters.
Forest project_forest(const TensorWord& w);
LinComb<Forest> project_forest(const LinComb<TensorWord>& x);

/// Symmetrised Hairer-Kelly map. On a tree this is the substitution-coaction
/// formula sum over full subforests of F (x) weight |s|!/s! on the
/// contraction shape s; on forests it agrees with project_forest o hk_psi.
LinComb<Forest> hk_psi_tilde(const Tree& t);
LinComb<Forest> hk_psi_tilde(const Forest& f);

/// Inverse of the symmetrised map: on trees the twisted-antipode recursion
/// over the reduced substitution coproduct, on basis forests the
/// (1/n!)-weighted product of component inverses.
LinComb<Forest> hk_psi_tilde_inv(const Forest& f);
LinComb<Forest> hk_psi_tilde_inv(const LinComb<Forest>& x);

/// Combinatorial core of the Hairer-Kelly flow identity, truncated at N
/// total vertices:
///   sum over forests F of (1/|Aut(F)|) [ F (x) F ]
///   minus sum over ordered sequences (tau_1, ..., tau_n) of trees of
///   (1/(sigma(tau_1)...sigma(tau_n))) (tau_1 * ... * tau_n) (x)
///   psi-tilde-inverse(tau_1 ... tau_n),
/// with * the Grossman-Larson product. Expected to vanish identically.
LinComb<TensorFF> hk_flow_identity_residual(int N);

}  // namespace treehopf
