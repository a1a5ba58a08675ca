#include "doctest.h"

#include "treehopf/enumerate.hpp"
#include "treehopf/stats.hpp"
#include "treehopf/substitution.hpp"
#include "treehopf/textio.hpp"

using namespace treehopf;

namespace {
const Semigroup kFree = Semigroup::free();

TensorFT ft(const char* l, const char* r) { return TensorFT{parse_forest(l), parse_tree(r)}; }
}  // namespace

TEST_CASE("substitution coproduct displays") {
  CHECK(sub_coproduct(parse_tree("i"), kFree) == LinComb<TensorFT>(ft("i", "i")));

  SUBCASE("two-ladder, root i, leaf j") {
    LinComb<TensorFT> expected;
    expected.add(ft("i(j)", "[i j]"), Rat(1));
    expected.add(ft("i j", "i(j)"), Rat(1));
    CHECK(sub_coproduct(parse_tree("i(j)"), kFree) == expected);
  }

  SUBCASE("cherry, root i3, leaves i1 i2") {
    LinComb<TensorFT> expected;
    expected.add(ft("i3(i1,i2)", "[i1 i2 i3]"), Rat(1));
    expected.add(ft("i1 i2 i3", "i3(i1,i2)"), Rat(1));
    expected.add(ft("i3(i1) i2", "[i1 i3](i2)"), Rat(1));
    expected.add(ft("i3(i2) i1", "[i2 i3](i1)"), Rat(1));
    CHECK(sub_coproduct(parse_tree("i3(i1,i2)"), kFree) == expected);
  }

  SUBCASE("edge grading") {
    for (const Tree& t : enumerate_trees_up_to(5, {"a", "b"})) {
      for (const auto& [term, c] : sub_coproduct(t, kFree).terms()) {
        CHECK(term.left.edge_count() + term.right.edge_count() == t.edge_count());
      }
    }
  }
}

TEST_CASE("coaction") {
  CHECK(coaction(Forest::unit(), kFree) ==
        LinComb<TensorFF>(TensorFF{Forest::unit(), Forest::unit()}));
  CHECK(coaction(parse_forest("i"), kFree) ==
        LinComb<TensorFF>(TensorFF{parse_forest("i"), parse_forest("i")}));
  CHECK(coaction(parse_forest("o o"), kFree) ==
        LinComb<TensorFF>(TensorFF{parse_forest("o o"), parse_forest("o o")}));
}

TEST_CASE("convolution on plus characters") {
  PlusCharacter unit = PlusCharacter::unit();
  PlusCharacter invf = PlusCharacter::inverse_tree_factorial();
  for (const Tree& t : enumerate_trees_up_to(4, {"o"})) {
    CHECK(convolve_plus(unit, invf, t, Semigroup::idempotent("o")) == invf(t));
    CHECK(convolve_plus(invf, unit, t, Semigroup::idempotent("o")) == invf(t));
  }
  // both slots 1/t! on the 2-ladder: (1/2)*1 over ladder (x) vertex plus
  // 1*(1/2) over the singleton extraction
  CHECK(convolve_plus(invf, invf, parse_tree("o(o)"), Semigroup::idempotent("o")) == Rat(1));
}

TEST_CASE("psi_v examples") {
  // v(single) = 1, v(ladder with equal decorations) = 1/2, zero otherwise
  auto rung = [](const std::string& top, const std::string& bottom) {
    return b_plus(SemigroupElement(bottom), Forest(Tree(SemigroupElement(top))));
  };
  std::map<Tree, Rat> values;
  for (const std::string l : {"i", "j"}) {
    values[rung(l, l)] = Rat(1, 2);
  }
  PlusCharacter v = PlusCharacter::from_values(values);

  SUBCASE("equal-letter ladder gains the contracted vertex") {
    LinComb<Forest> expected(parse_forest("i(i)"));
    expected.add(parse_forest("[i i]"), Rat(1, 2));
    CHECK(psi_v(v, parse_forest("i(i)"), kFree) == expected);
  }
  SUBCASE("distinct-letter ladder is fixed") {
    CHECK(psi_v(v, parse_forest("i(j)"), kFree) == LinComb<Forest>(parse_forest("i(j)")));
  }
  SUBCASE("cherry with one matching leaf") {
    // root i, leaves i and j: only the [i i] contraction contributes
    LinComb<Forest> expected(parse_forest("i(i,j)"));
    expected.add(parse_forest("[i i](j)"), Rat(1, 2));
    CHECK(psi_v(v, parse_forest("i(i,j)"), kFree) == expected);
  }
  SUBCASE("unit character acts as the identity") {
    PlusCharacter z = PlusCharacter::unit();
    for (const Forest& f : enumerate_forests_up_to(4, {"a", "b"})) {
      CHECK(psi_v(z, f, kFree) == LinComb<Forest>(f));
    }
  }
}

TEST_CASE("character inversion") {
  const Semigroup idem = Semigroup::idempotent("o");

  SUBCASE("unit is self inverse") {
    PlusCharacter z = PlusCharacter::unit();
    PlusCharacter zi = invert_character(z, idem, 4);
    for (const Tree& t : enumerate_trees_up_to(4, {"o"})) CHECK(zi(t) == z(t));
  }

  SUBCASE("inverse of the tree factorial character on the 2-ladder") {
    PlusCharacter v = PlusCharacter::inverse_tree_factorial();
    PlusCharacter w = invert_character(v, idem, 4);
    CHECK(w(parse_tree("o(o)")) == Rat(-1, 2));
  }

  SUBCASE("two-sided inverse and the pseudo-antipode oracle") {
    PlusCharacter v = PlusCharacter::inverse_tree_factorial();
    PlusCharacter w = invert_character(v, idem, 4);
    PlusCharacter unit = PlusCharacter::unit();
    for (const Tree& t : enumerate_trees_up_to(4, {"o"})) {
      CHECK(convolve_plus(w, v, t, idem) == unit(t));
      CHECK(convolve_plus(v, w, t, idem) == unit(t));
      CHECK(w(t) == invert_character_series(v, t, idem));
    }
  }

  SUBCASE("psi of the inverse undoes psi") {
    PlusCharacter v = PlusCharacter::inverse_tree_factorial();
    PlusCharacter w = invert_character(v, kFree, 4);
    for (const Forest& f : enumerate_forests_up_to(4, {"a", "b"})) {
      CHECK(psi_v(w, psi_v(v, f, kFree), kFree) == LinComb<Forest>(f));
    }
  }

  SUBCASE("degree bound and preconditions") {
    PlusCharacter v = PlusCharacter::inverse_tree_factorial();
    PlusCharacter w = invert_character(v, idem, 2);
    CHECK_THROWS_AS(w(parse_tree("o(o(o(o)))")), std::out_of_range);
    PlusCharacter bad = PlusCharacter::from_rule([](const Tree&) { return Rat(2); }, false);
    CHECK_THROWS_AS(invert_character(bad, idem, 3), std::invalid_argument);
  }
}

TEST_CASE("coassociativity of the substitution coproduct") {
  for (const Tree& t : enumerate_trees_up_to(4, {"a", "b"})) {
    LinComb<TensorFT> cp = sub_coproduct(t, kFree);
    LinComb<TensorFFT> lhs, rhs;
    for (const auto& [term, c] : cp.terms()) {
      for (const auto& [inner, ci] : coaction(term.left, kFree).terms()) {
        lhs.add(TensorFFT{inner.left, inner.right, term.right}, c * ci);
      }
      for (const auto& [inner, ci] : sub_coproduct(term.right, kFree).terms()) {
        rhs.add(TensorFFT{term.left, inner.left, inner.right}, c * ci);
      }
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("ladder coproduct matches the composition formula") {
  // leaf a, then b, root c
  Tree ladder = b_plus(SemigroupElement("c"),
                       Forest(b_plus(SemigroupElement("b"), Forest(Tree(SemigroupElement("a"))))));
  LinComb<TensorFT> expected;
  expected.add(ft("c(b(a))", "[a b c]"), Rat(1));
  expected.add(ft("a b c", "c(b(a))"), Rat(1));
  expected.add(ft("b(a) c", "c([a b])"), Rat(1));
  expected.add(ft("c(b) a", "[b c](a)"), Rat(1));
  CHECK(sub_coproduct(ladder, kFree) == expected);
}
