#pragma once

#include <functional>
#include <optional>

#include "treehopf/lincomb.hpp"
#include "treehopf/tensors.hpp"
#include "treehopf/tree.hpp"

namespace treehopf {

/// Butcher-Connes-Kreimer coproduct, by the recursion
/// Delta(B^i_+(F)) = tau (x) 1 + (id (x) B^i_+) Delta(F), multiplicative on
/// forests, Delta(1) = 1 (x) 1.
LinComb<TensorFF> bck_coproduct(const Forest& f);
LinComb<TensorFF> bck_coproduct(const Tree& t);

/// Independent oracle: admissible-cut enumeration over edge subsets with the
/// rooted part on the right.
LinComb<TensorFF> bck_coproduct_cuts(const Tree& t);

/// sigma-normalised dual pairing: <d_F, G> = sigma(F) if F == G, else 0.
Rat pairing(const Forest& f, const Forest& g);

/// A linear functional on H_BCK, finitely described.
///
/// Characters are multiplicative with value 1 on the empty forest;
/// infinitesimal characters vanish on the empty forest and on nontrivial
/// products. An optional degree bound makes evaluation beyond it an error
/// rather than a silent zero.
class BckFunctional {
 public:
  enum class Kind { Character, Infinitesimal, General };

  /// Character from tree values (default 0 for trees not in the rule's view).
  static BckFunctional character(std::function<Rat(const Tree&)> tree_value,
                                 std::optional<int> degree_bound = std::nullopt);
  /// Infinitesimal character from tree values.
  static BckFunctional infinitesimal(std::function<Rat(const Tree&)> tree_value,
                                     std::optional<int> degree_bound = std::nullopt);
  /// Arbitrary functional from forest values.
  static BckFunctional general(std::function<Rat(const Forest&)> forest_value,
                               std::optional<int> degree_bound = std::nullopt);

  /// The counit: 1 on the empty forest, 0 elsewhere.
  static BckFunctional counit();
  /// The normalised dual basis element d_F: sigma(F) on F, 0 elsewhere.
  static BckFunctional dual(const Forest& f);

  Kind kind() const { return kind_; }
  Rat operator()(const Forest& f) const;
  Rat operator()(const Tree& t) const { return (*this)(Forest(t)); }
  Rat operator()(const LinComb<Forest>& x) const;

 private:
  BckFunctional(Kind k, std::function<Rat(const Forest&)> v, std::optional<int> bound)
      : kind_(k), value_(std::move(v)), degree_bound_(bound) {}
  Kind kind_;
  std::function<Rat(const Forest&)> value_;
  std::optional<int> degree_bound_;
};

/// Convolution on the dual of H_BCK: (u * w)(F) = sum u(F1) w(F2) over the
/// coproduct of F.
Rat convolve_bck(const BckFunctional& u, const BckFunctional& w, const Forest& f);

}  // namespace treehopf
