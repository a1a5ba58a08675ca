// Acceptance suite: exact golden values transcribed from the source
// material plus the property sweeps, one pass/fail line per criterion.
// Exit code 0 iff every criterion passes within its runtime budget.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

#include "treehopf/arborification.hpp"
#include "treehopf/bck.hpp"
#include "treehopf/bseries.hpp"
#include "treehopf/enumerate.hpp"
#include "treehopf/hairer_kelly.hpp"
#include "treehopf/prelie.hpp"
#include "treehopf/qshuffle.hpp"
#include "treehopf/stats.hpp"
#include "treehopf/substitution.hpp"
#include "treehopf/textio.hpp"

using namespace treehopf;

namespace {

using Maybe = std::optional<std::string>;

const Semigroup kFree = Semigroup::free();
const std::vector<std::string> kTwo{"a", "b"};
const std::vector<std::string> kUndec{"o"};

struct Rng {
  std::mt19937 eng{20250810};
  Rat rat(int max_num = 3, int max_den = 3) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    Rat r(num(eng), den(eng));
    r.canonicalize();
    return r;
  }
};

template <class T>
Maybe expect_eq(const T& got, const T& want, const std::string& what) {
  if (got == want) return std::nullopt;
  return what + ": got " + to_text(got) + ", want " + to_text(want);
}

Maybe expect_rat(const Rat& got, const Rat& want, const std::string& what) {
  if (got == want) return std::nullopt;
  return what + ": got " + rat_str(got) + ", want " + rat_str(want);
}

// ------------------------------------------------------------ criterion 1 --

Maybe criterion_golden() {
  // tree factorial / symmetry factor of the two 4-vertex shapes
  if (tree_factorial(parse_tree("o(o(o,o))")) != 12) return "factorial of o(o(o,o))";
  if (tree_sigma(parse_tree("o(o(o,o))")) != 2) return "sigma of o(o(o,o))";
  if (tree_factorial(parse_tree("o(o(o),o)")) != 8) return "factorial of o(o(o),o)";
  if (tree_sigma(parse_tree("o(o(o),o)")) != 1) return "sigma of o(o(o),o)";

  // Connes-Moscovici table
  const std::pair<const char*, int> cm_table[] = {
      {"o", 1}, {"o(o)", 1}, {"o(o,o)", 1}, {"o(o(o,o))", 1}, {"o(o(o),o)", 3}};
  for (const auto& [text, value] : cm_table) {
    if (auto bad = expect_rat(tree_cm(parse_tree(text)), Rat(value), std::string("cm of ") + text))
      return bad;
  }

  // iterated left grafting
  const LinComb<Tree> dot{parse_tree("o")};
  if (auto bad = expect_eq(left_power(dot, dot, 2),
                           parse_lincomb_tree("1 * o(o,o) + 1 * o(o(o))"), "L^2"))
    return bad;
  if (auto bad = expect_eq(
          left_power(dot, dot, 3),
          parse_lincomb_tree("3 * o(o(o),o) + 1 * o(o,o,o) + 1 * o(o(o(o))) + 1 * o(o(o,o))"),
          "L^3"))
    return bad;

  // Grossman-Larson product of two single vertices
  if (auto bad = expect_eq(gl_product(parse_forest("i"), parse_forest("j")),
                           parse_lincomb_forest("1 * i·j + 1 * j(i)"), "GL product"))
    return bad;

  // substitution coproduct displays
  {
    LinComb<TensorFT> want(TensorFT{parse_forest("i"), parse_tree("i")});
    if (auto bad = expect_eq(sub_coproduct(parse_tree("i"), kFree), want, "sub coproduct, vertex"))
      return bad;
  }
  {
    LinComb<TensorFT> want;
    want.add(TensorFT{parse_forest("i(j)"), parse_tree("[i j]")}, Rat(1));
    want.add(TensorFT{parse_forest("i j"), parse_tree("i(j)")}, Rat(1));
    if (auto bad = expect_eq(sub_coproduct(parse_tree("i(j)"), kFree), want,
                             "sub coproduct, 2-ladder"))
      return bad;
  }
  {
    LinComb<TensorFT> want;
    want.add(TensorFT{parse_forest("i3(i1,i2)"), parse_tree("[i1 i2 i3]")}, Rat(1));
    want.add(TensorFT{parse_forest("i1 i2 i3"), parse_tree("i3(i1,i2)")}, Rat(1));
    want.add(TensorFT{parse_forest("i3(i1) i2"), parse_tree("[i1 i3](i2)")}, Rat(1));
    want.add(TensorFT{parse_forest("i3(i2) i1"), parse_tree("[i2 i3](i1)")}, Rat(1));
    if (auto bad = expect_eq(sub_coproduct(parse_tree("i3(i1,i2)"), kFree), want,
                             "sub coproduct, cherry"))
      return bad;
  }

  // Psi_v for the delta_ij character: 1 on vertices, 1/2 on equal-letter
  // 2-ladders, 0 otherwise
  {
    std::map<Tree, Rat> values;
    values[parse_tree("i(i)")] = Rat(1, 2);
    values[parse_tree("j(j)")] = Rat(1, 2);
    PlusCharacter v = PlusCharacter::from_values(values);
    LinComb<Forest> want(parse_forest("i(i)"));
    want.add(parse_forest("[i i]"), Rat(1, 2));
    if (auto bad = expect_eq(psi_v(v, parse_forest("i(i)"), kFree), want, "Psi_v on equal ladder"))
      return bad;
    if (auto bad = expect_eq(psi_v(v, parse_forest("i(j)"), kFree),
                             LinComb<Forest>(parse_forest("i(j)")), "Psi_v on mixed ladder"))
      return bad;
    LinComb<Forest> want_cherry(parse_forest("i(i,j)"));
    want_cherry.add(parse_forest("[i i](j)"), Rat(1, 2));
    if (auto bad = expect_eq(psi_v(v, parse_forest("i(i,j)"), kFree), want_cherry,
                             "Psi_v on cherry"))
      return bad;
  }

  // Hoffman exponential and logarithm at lengths 1..3
  if (auto bad = expect_eq(hoffman_exp(parse_word("a"), kFree), parse_lincomb_word("1 * a"),
                           "exp_H length 1"))
    return bad;
  if (auto bad = expect_eq(hoffman_log(parse_word("a"), kFree), parse_lincomb_word("1 * a"),
                           "log_H length 1"))
    return bad;
  if (auto bad = expect_eq(hoffman_exp(parse_word("a.b"), kFree),
                           parse_lincomb_word("1 * a.b + 1/2 * [a b]"), "exp_H length 2"))
    return bad;
  if (auto bad = expect_eq(hoffman_log(parse_word("a.b"), kFree),
                           parse_lincomb_word("1 * a.b + -1/2 * [a b]"), "log_H length 2"))
    return bad;
  if (auto bad = expect_eq(
          hoffman_exp(parse_word("a.b.c"), kFree),
          parse_lincomb_word("1 * a.b.c + 1/2 * [a b].c + 1/2 * a.[b c] + 1/6 * [a b c]"),
          "exp_H length 3"))
    return bad;
  if (auto bad = expect_eq(
          hoffman_log(parse_word("a.b.c"), kFree),
          parse_lincomb_word("1 * a.b.c + -1/2 * [a b].c + -1/2 * a.[b c] + 1/3 * [a b c]"),
          "log_H length 3"))
    return bad;

  // arborified Hoffman exponential of the cherry, and its contracting
  // arborification (the pinned worked example)
  {
    LinComb<Forest> want;
    want.add(parse_forest("[i1 i2 i3]"), Rat(1, 3));
    want.add(parse_forest("i3(i1,i2)"), Rat(1));
    want.add(parse_forest("[i1 i3](i2)"), Rat(1, 2));
    want.add(parse_forest("[i2 i3](i1)"), Rat(1, 2));
    LinComb<Forest> got = arbo_hoffman_exp(parse_forest("i3(i1,i2)"), kFree);
    if (auto bad = expect_eq(got, want, "arborified exp_H of the cherry")) return bad;
    LinComb<Word> golden = parse_lincomb_word(
        "1/3 * [i1 i2 i3] + 1 * i1.i2.i3 + 1 * i2.i1.i3 + 1 * [i1 i2].i3 + "
        "1/2 * i2.[i1 i3] + 1/2 * i1.[i2 i3]");
    if (auto bad = expect_eq(contract_arborify(got, kFree), golden,
                             "contracted arborification of the cherry image"))
      return bad;
  }

  // Hairer-Kelly displays
  {
    LinComb<TensorWord> want;
    want.add(TensorWord{{parse_tree("o(o(o))")}}, Rat(1));
    want.add(TensorWord{{parse_tree("o(o)"), parse_tree("o")}}, Rat(1));
    want.add(TensorWord{{parse_tree("o"), parse_tree("o"), parse_tree("o")}}, Rat(1));
    want.add(TensorWord{{parse_tree("o"), parse_tree("o(o)")}}, Rat(1));
    if (auto bad = expect_eq(hk_psi(parse_tree("o(o(o))")), want, "psi of the 3-ladder"))
      return bad;
  }
  {
    LinComb<TensorWord> want;
    want.add(TensorWord{{parse_tree("o(o,o)")}}, Rat(1));
    want.add(TensorWord{{parse_tree("o"), parse_tree("o"), parse_tree("o")}}, Rat(2));
    want.add(TensorWord{{parse_tree("o"), parse_tree("o(o)")}}, Rat(2));
    if (auto bad = expect_eq(hk_psi(parse_tree("o(o,o)")), want, "psi of the cherry")) return bad;
  }
  {
    LinComb<Forest> want;
    want.add(parse_forest("o(o,o)"), Rat(1));
    want.add(parse_forest("o o o"), Rat(2));
    want.add(parse_forest("o o(o)"), Rat(2));
    if (auto bad = expect_eq(hk_psi_tilde(parse_tree("o(o,o)")), want,
                             "symmetrised psi of the cherry"))
      return bad;
  }
  return std::nullopt;
}

// ------------------------------------------------------------ criterion 2 --

Maybe criterion_arbo_hoffman_diagram() {
  for (const Tree& t : enumerate_trees_up_to(5, kTwo)) {
    if (!(contract_arborify(arbo_hoffman_exp(Forest(t), kFree), kFree) ==
          hoffman_exp(arborify(t), kFree))) {
      return "diagram fails at " + to_text(t);
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------ criterion 3 --

Maybe criterion_bialgebra_axioms() {
  // BCK coassociativity and counit on decorated forests
  for (const Forest& f : enumerate_forests_up_to(5, kTwo)) {
    LinComb<TensorFF> cp = bck_coproduct(f);
    LinComb<TensorFFF> lhs, rhs;
    LinComb<Forest> left_counit, right_counit;
    for (const auto& [term, c] : cp.terms()) {
      for (const auto& [inner, ci] : bck_coproduct(term.left).terms()) {
        lhs.add(TensorFFF{inner.left, inner.right, term.right}, c * ci);
      }
      for (const auto& [inner, ci] : bck_coproduct(term.right).terms()) {
        rhs.add(TensorFFF{term.left, inner.left, inner.right}, c * ci);
      }
      if (term.left.is_unit()) left_counit.add(term.right, c);
      if (term.right.is_unit()) right_counit.add(term.left, c);
    }
    if (!(lhs == rhs)) return "BCK coassociativity at " + to_text(f);
    if (!(left_counit == LinComb<Forest>(f)) || !(right_counit == LinComb<Forest>(f))) {
      return "BCK counit at " + to_text(f);
    }
  }
  // substitution coproduct coassociativity and counit laws on decorated trees
  for (const Tree& t : enumerate_trees_up_to(5, kTwo)) {
    LinComb<TensorFT> cp = sub_coproduct(t, kFree);
    LinComb<TensorFFT> lhs, rhs;
    LinComb<Tree> left_counit;
    LinComb<Forest> right_counit;
    for (const auto& [term, c] : cp.terms()) {
      for (const auto& [inner, ci] : coaction(term.left, kFree).terms()) {
        lhs.add(TensorFFT{inner.left, inner.right, term.right}, c * ci);
      }
      for (const auto& [inner, ci] : sub_coproduct(term.right, kFree).terms()) {
        rhs.add(TensorFFT{term.left, inner.left, inner.right}, c * ci);
      }
      if (term.left.edge_count() == 0) left_counit.add(term.right, c);
      if (term.right.vertex_count() == 1) right_counit.add(term.left, c);
    }
    if (!(lhs == rhs)) return "sub coassociativity at " + to_text(t);
    if (!(left_counit == LinComb<Tree>(t)) || !(right_counit == LinComb<Forest>(Forest(t)))) {
      return "sub counit at " + to_text(t);
    }
  }
  // quasi-shuffle bialgebra compatibility up to total length 5
  auto deconcat_lc = [](const LinComb<Word>& x) {
    LinComb<TensorWW> out;
    for (const auto& [w, c] : x.terms()) {
      for (const auto& [l, r] : deconcat(w)) out.add(TensorWW{l, r}, c);
    }
    return out;
  };
  for (int lu = 0; lu <= 5; ++lu) {
    for (const Word& u : enumerate_words(lu, kTwo)) {
      for (int lv = 0; lu + lv <= 5; ++lv) {
        for (const Word& v : enumerate_words(lv, kTwo)) {
          LinComb<TensorWW> lhs = deconcat_lc(quasi_shuffle(u, v, kFree));
          LinComb<TensorWW> rhs;
          for (const auto& [du, cu] : deconcat_lc(LinComb<Word>(u)).terms()) {
            for (const auto& [dv, cv] : deconcat_lc(LinComb<Word>(v)).terms()) {
              rhs += (cu * cv) * bilinear(quasi_shuffle(du.left, dv.left, kFree),
                                          quasi_shuffle(du.right, dv.right, kFree),
                                          [](const Word& a, const Word& b) {
                                            return LinComb<TensorWW>(TensorWW{a, b});
                                          });
            }
          }
          if (!(lhs == rhs)) {
            return "quasi-shuffle compatibility at " + to_text(u) + " ; " + to_text(v);
          }
        }
      }
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------ criterion 4 --

Maybe criterion_inverse_pairs(Rng& rng) {
  for (int l = 0; l <= 6; ++l) {
    for (const Word& w : enumerate_words(l, kTwo)) {
      if (!(hoffman_log(hoffman_exp(w, kFree), kFree) == LinComb<Word>(w))) {
        return "exp/log inverse at " + to_text(w);
      }
      if (!(hoffman_exp(hoffman_log(w, kFree), kFree) == LinComb<Word>(w))) {
        return "log/exp inverse at " + to_text(w);
      }
    }
  }
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rat> fc{Rat(1)}, gc{Rat(1)};
    for (int n = 2; n <= 5; ++n) {
      fc.push_back(rng.rat());
      gc.push_back(rng.rat());
    }
    PowerSeries f = PowerSeries::from_coeffs(fc);
    PowerSeries g = PowerSeries::from_coeffs(gc);
    PowerSeries fog = f.compose(g);
    for (int l = 0; l <= 5; ++l) {
      for (const Word& w : enumerate_words(l, kTwo)) {
        if (!(psi_series(f, psi_series(g, w, kFree), kFree) == psi_series(fog, w, kFree))) {
          return "psi composition, trial " + std::to_string(trial) + " at " + to_text(w);
        }
      }
    }
  }
  {
    std::map<Tree, Rat> values;
    for (int n = 2; n <= 4; ++n) {
      for (const Tree& t : enumerate_trees(n, kTwo)) values[t] = rng.rat();
    }
    const PlusCharacter chars[2] = {PlusCharacter::inverse_tree_factorial(),
                                    PlusCharacter::from_values(std::move(values))};
    for (const PlusCharacter& v : chars) {
      PlusCharacter w = invert_character(v, kFree, 4);
      for (const Forest& f : enumerate_forests_up_to(4, kTwo)) {
        if (!(psi_v(w, psi_v(v, f, kFree), kFree) == LinComb<Forest>(f))) {
          return "Psi inverse pair at " + to_text(f);
        }
      }
    }
  }
  for (const Forest& f : enumerate_forests_up_to(5, kUndec)) {
    LinComb<Forest> there = hk_psi_tilde_inv(f);
    LinComb<Forest> back;
    for (const auto& [g, c] : there.terms()) back += c * hk_psi_tilde(g);
    if (!(back == LinComb<Forest>(f))) return "psi-tilde inverse at " + to_text(f);
    if (!(hk_psi_tilde_inv(hk_psi_tilde(f)) == LinComb<Forest>(f))) {
      return "psi-tilde left inverse at " + to_text(f);
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------ criterion 5 --

Maybe criterion_duality(Rng& rng) {
  auto duality = [](int max_total, const std::vector<std::string>& alphabet) -> Maybe {
    auto forests = enumerate_forests_up_to(max_total, alphabet);
    for (const Forest& f : forests) {
      if (f.is_unit()) continue;
      for (const Forest& g : forests) {
        if (g.is_unit()) continue;
        const int total = f.vertex_count() + g.vertex_count();
        if (total > max_total) continue;
        LinComb<Forest> fg = gl_product(f, g);
        BckFunctional df = BckFunctional::dual(f);
        BckFunctional dg = BckFunctional::dual(g);
        for (const Forest& h : enumerate_forests(total, alphabet)) {
          Rat lhs(0);
          for (const auto& [k, c] : fg.terms()) lhs += c * pairing(k, h);
          if (lhs != convolve_bck(df, dg, h)) {
            return "duality at " + to_text(f) + " ; " + to_text(g) + " ; " + to_text(h);
          }
        }
      }
    }
    return std::nullopt;
  };
  if (auto bad = duality(5, kUndec)) return bad;
  if (auto bad = duality(4, kTwo)) return bad;

  auto unit_values = [](const Tree& t) { return t.vertex_count() == 1 ? Rat(1) : Rat(0); };
  auto invf = [](const Tree& t) {
    Rat r = Rat(1) / Rat(tree_factorial(t));
    r.canonicalize();
    return r;
  };
  for (int n = 1; n <= 4; ++n) {
    if (!flow_adjoint_residual(unit_values, n).is_zero()) {
      return "flow adjoint, unit character, N = " + std::to_string(n);
    }
    if (!flow_adjoint_residual(invf, n).is_zero()) {
      return "flow adjoint, 1/t!, N = " + std::to_string(n);
    }
  }
  for (int trial = 0; trial < 10; ++trial) {
    std::map<Tree, Rat> values;
    for (const Tree& t : enumerate_trees_up_to(4, kUndec)) {
      values[t] = t.vertex_count() == 1 ? Rat(1) : rng.rat();
    }
    auto a = [values](const Tree& t) {
      auto it = values.find(t);
      return it == values.end() ? Rat(0) : it->second;
    };
    for (int n = 1; n <= 4; ++n) {
      if (!flow_adjoint_residual(a, n).is_zero()) {
        return "flow adjoint, random trial " + std::to_string(trial) + ", N = " + std::to_string(n);
      }
    }
  }
  for (int n = 1; n <= 4; ++n) {
    if (!hk_flow_identity_residual(n).is_zero()) {
      return "hk flow identity, N = " + std::to_string(n);
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------ criterion 6 --

Maybe criterion_oracles() {
  for (int n = 1; n <= 7; ++n) {
    for (const Tree& t : enumerate_trees(n, kUndec)) {
      if (linear_extension_count(t) * tree_factorial(t) != int_factorial(static_cast<unsigned>(n))) {
        return "linear extensions at " + to_text(t);
      }
    }
  }
  for (const Forest& f : enumerate_forests_up_to(3, kUndec)) {
    for (const Tree& t : enumerate_trees_up_to(4, kUndec)) {
      if (!(forest_graft(f, t) == forest_graft_direct(f, t))) {
        return "forest graft oracle at " + to_text(f) + " |> " + to_text(t);
      }
    }
  }
  const LinComb<Tree> dot{parse_tree("o")};
  for (int n = 1; n <= 7; ++n) {
    LinComb<Tree> want;
    for (const Tree& t : enumerate_trees(n, kUndec)) want.add(t, tree_cm(t));
    if (!(left_power(dot, dot, n - 1) == want)) return "cm-weighted expansion at n = " + std::to_string(n);
  }
  return std::nullopt;
}

// ------------------------------------------------------------ criterion 7 --

Maybe criterion_marcus() {
  auto field = marcus_modified_field(5);
  {
    LinComb<Tree> want(parse_tree("1(1)"), Rat(1, 2));
    if (!(field.at("2") == want)) return "canonical extension at n = 2";
  }
  {
    LinComb<Tree> want;
    want.add(parse_tree("1(1,1)"), Rat(1, 6));
    want.add(parse_tree("1(1(1))"), Rat(1, 6));
    if (!(field.at("3") == want)) return "canonical extension at n = 3";
  }
  const Semigroup additive = Semigroup::additive();
  for (int n = 1; n <= 5; ++n) {
    if (!(arbo_hoffman_adjoint(SemigroupElement(std::to_string(n)), {"1"}, additive, n) ==
          field.at(std::to_string(n)))) {
      return "adjoint mismatch at n = " + std::to_string(n);
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------ criterion 8 --

Maybe criterion_substitution_law(Rng& rng) {
  auto invf = [](const Tree& t) {
    Rat r = Rat(1) / Rat(tree_factorial(t));
    r.canonicalize();
    return r;
  };
  const FieldAssignment square{{"o", parse_field("x1^2", 1)}};
  const FieldAssignment quad2{{"o", parse_field("x2^2 + x1*x2; x1^2 - 2*x2", 2)}};

  if (substitution_law_residual(invf, invf, square, 4, {Rat(1)}) != 0) {
    return "substitution law for (1/t!, 1/t!) on y^2";
  }
  if (substitution_law_residual(invf, invf, quad2, 4, {Rat(1), Rat(1, 2)}) != 0) {
    return "substitution law for (1/t!, 1/t!) on the 2-d field";
  }
  for (int trial = 0; trial < 10; ++trial) {
    std::map<Tree, Rat> av, bv;
    for (const Tree& t : enumerate_trees_up_to(4, kUndec)) {
      av[t] = t.vertex_count() == 1 ? Rat(1) : rng.rat();
      bv[t] = rng.rat();
    }
    auto a = [av](const Tree& t) { return av.count(t) ? av.at(t) : Rat(0); };
    auto b = [bv](const Tree& t) { return bv.count(t) ? bv.at(t) : Rat(0); };
    if (substitution_law_residual(a, b, square, 4, {Rat(1)}) != 0) {
      return "substitution law, random trial " + std::to_string(trial) + " on y^2";
    }
    if (substitution_law_residual(a, b, quad2, 4, {Rat(1), Rat(-1, 3)}) != 0) {
      return "substitution law, random trial " + std::to_string(trial) + " on the 2-d field";
    }
  }
  auto exp_series = bseries_truncated(invf, {{"o", parse_field("x1", 1)}}, 4, {Rat(1)});
  for (int k = 0; k <= 4; ++k) {
    Rat want = Rat(1) / Rat(int_factorial(static_cast<unsigned>(k)));
    want.canonicalize();
    if (exp_series[static_cast<std::size_t>(k)][0] != want) {
      return "exp flow coefficient at order " + std::to_string(k);
    }
  }
  auto geo_series = bseries_truncated(invf, square, 4, {Rat(1)});
  for (int k = 0; k <= 4; ++k) {
    if (geo_series[static_cast<std::size_t>(k)][0] != 1) {
      return "geometric flow coefficient at order " + std::to_string(k);
    }
  }
  return std::nullopt;
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Maybe()> body;
};

}  // namespace

int main() {
  Rng rng;
  const std::vector<Criterion> criteria{
      {1, "golden values", 1.0, [] { return criterion_golden(); }},
      {2, "arborified Hoffman diagram sweep (decorated trees to 5 vertices)", 60.0,
       [] { return criterion_arbo_hoffman_diagram(); }},
      {3, "Hopf/bialgebra axioms", 30.0, [] { return criterion_bialgebra_axioms(); }},
      {4, "inverse pairs", 30.0, [&] { return criterion_inverse_pairs(rng); }},
      {5, "duality suite", 60.0, [&] { return criterion_duality(rng); }},
      {6, "oracle equivalences", 30.0, [] { return criterion_oracles(); }},
      {7, "Marcus / Ito-Stratonovich", 5.0, [] { return criterion_marcus(); }},
      {8, "B-series substitution law", 10.0, [&] { return criterion_substitution_law(rng); }},
  };

  bool all_ok = true;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Maybe failure;
    try {
      failure = c.body();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    if (!failure && secs <= c.budget_seconds) {
      line << "PASS";
    } else {
      line << "FAIL";
      all_ok = false;
    }
    line << " criterion " << c.id << " (" << c.name << ") [" << secs << " s, budget "
         << c.budget_seconds << " s]";
    if (failure) line << ": " << *failure;
    if (!failure && secs > c.budget_seconds) line << ": over the runtime budget";
    std::cout << line.str() << "\n";
  }
  return all_ok ? 0 : 1;
}
