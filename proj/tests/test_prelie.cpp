#include "doctest.h"

#include "treehopf/enumerate.hpp"
#include "treehopf/prelie.hpp"
#include "treehopf/stats.hpp"
#include "treehopf/textio.hpp"

using namespace treehopf;

namespace {
LinComb<Tree> lct(const char* s) { return parse_lincomb_tree(s); }
}  // namespace

TEST_CASE("grafting reproduces the known expansions") {
  CHECK(graft(parse_tree("o"), parse_tree("o")) == lct("1 * o(o)"));
  CHECK(graft(parse_tree("o"), parse_tree("o(o)")) == lct("1 * o(o,o) + 1 * o(o(o))"));
  CHECK(graft(parse_tree("o"), parse_tree("o(o,o)")) == lct("2 * o(o(o),o) + 1 * o(o,o,o)"));
  CHECK(graft(parse_tree("o(o)"), parse_tree("o(o)")) ==
        lct("1 * o(o(o(o))) + 1 * o(o(o),o)"));
}

TEST_CASE("left powers") {
  const LinComb<Tree> dot = lct("1 * o");
  CHECK(left_power(dot, dot, 0) == dot);
  CHECK(left_power(dot, dot, 2) == lct("1 * o(o,o) + 1 * o(o(o))"));
  CHECK(left_power(dot, dot, 3) ==
        lct("3 * o(o(o),o) + 1 * o(o,o,o) + 1 * o(o(o(o))) + 1 * o(o(o,o))"));
  CHECK_THROWS_AS(left_power(dot, dot, -1), std::invalid_argument);
}

TEST_CASE("forest grafting") {
  CHECK(forest_graft(Forest::unit(), parse_tree("o")) == lct("1 * o"));
  CHECK(forest_graft(parse_forest("o o"), parse_tree("o")) == lct("1 * o(o,o)"));
  CHECK(forest_graft(parse_forest("o"), parse_tree("o(o)")) ==
        lct("1 * o(o,o) + 1 * o(o(o))"));

  SUBCASE("leading identity F |> vertex = B_+(F)") {
    for (const Forest& f : enumerate_forests_up_to(5, {"a", "b"})) {
      SemigroupElement i("i");
      CHECK(forest_graft(f, Tree(i)) == LinComb<Tree>(b_plus(i, f)));
    }
  }

  SUBCASE("subtraction recursion agrees with the direct enumerator") {
    for (const Forest& f : enumerate_forests_up_to(3, {"o"})) {
      for (const Tree& t : enumerate_trees_up_to(4, {"o"})) {
        CHECK(forest_graft(f, t) == forest_graft_direct(f, t));
      }
    }
    for (const Forest& f : enumerate_forests_up_to(3, {"a", "b"})) {
      for (const Tree& t : enumerate_trees_up_to(3, {"a", "b"})) {
        CHECK(forest_graft(f, t) == forest_graft_direct(f, t));
      }
    }
  }
}

TEST_CASE("grossman-larson product") {
  CHECK(gl_product(parse_forest("i"), parse_forest("j")) ==
        parse_lincomb_forest("1 * i·j + 1 * j(i)"));
  CHECK(gl_product(Forest::unit(), parse_forest("o(o) o")) ==
        parse_lincomb_forest("1 * o·o(o)"));
  // tau1 * tau2 = tau1 tau2 + tau1 |> tau2 on trees
  for (const Tree& t1 : enumerate_trees_up_to(3, {"o"})) {
    for (const Tree& t2 : enumerate_trees_up_to(3, {"o"})) {
      LinComb<Forest> expected(Forest(t1) * t2);
      expected += graft(t1, t2).map_basis([](const Tree& t) { return Forest(t); });
      CHECK(gl_product(Forest(t1), Forest(t2)) == expected);
    }
  }
}

TEST_CASE("pre-Lie morphism extension") {
  SUBCASE("identity assignment") {
    GeneratorAssignment g;
    g["o"] = lct("1 * o");
    for (const Tree& t : enumerate_trees_up_to(5, {"o"})) {
      CHECK(prelie_extend(g, t) == LinComb<Tree>(t));
    }
  }
  SUBCASE("ladder image") {
    GeneratorAssignment g;
    g["o"] = lct("1 * o(o)");
    CHECK(prelie_extend(g, parse_tree("o(o)")) == lct("1 * o(o(o(o))) + 1 * o(o(o),o)"));
  }
  SUBCASE("scaling homogeneity") {
    GeneratorAssignment g;
    g["o"] = lct("2 * o");
    for (const Tree& t : enumerate_trees_up_to(4, {"o"})) {
      Rat scale(1);
      for (int k = 0; k < t.vertex_count(); ++k) scale *= 2;
      LinComb<Tree> expected(t, scale);
      CHECK(prelie_extend(g, t) == expected);
    }
  }
  SUBCASE("unassigned letter is an error") {
    GeneratorAssignment g;
    g["o"] = lct("1 * o");
    CHECK_THROWS_AS(prelie_extend(g, parse_tree("x")), std::invalid_argument);
  }
}

TEST_CASE("left pre-Lie identity on small triples") {
  auto trees = enumerate_trees_up_to(3, {"o"});
  for (const Tree& x : trees) {
    for (const Tree& y : trees) {
      for (const Tree& z : trees) {
        if (x.vertex_count() + y.vertex_count() + z.vertex_count() > 6) continue;
        LinComb<Tree> lx(x), ly(y), lz(z);
        CHECK(graft(graft(lx, ly), lz) - graft(lx, graft(ly, lz)) ==
              graft(graft(ly, lx), lz) - graft(ly, graft(lx, lz)));
      }
    }
  }
}

TEST_CASE("iterated grafting expands with cm weights") {
  const LinComb<Tree> dot = lct("1 * o");
  for (int n = 1; n <= 6; ++n) {
    LinComb<Tree> expected;
    for (const Tree& t : enumerate_trees(n, {"o"})) expected.add(t, tree_cm(t));
    CHECK(left_power(dot, dot, n - 1) == expected);
  }
}
