#include "treehopf/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

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

namespace treehopf {

namespace {

using Maybe = std::optional<std::string>;

struct Runner {
  const VerifyOptions& opt;
  VerifyReport& rep;

  void check(const std::string& name, const std::function<Maybe()>& body) {
    ++rep.checks_run;
#ifdef TREEHOPF_VERIFY_TRACE
    auto t0 = std::chrono::steady_clock::now();
#endif
    Maybe cex = body();
#ifdef TREEHOPF_VERIFY_TRACE
    std::fprintf(stderr, "  [%s] %.2fs\n", name.c_str(),
                 std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
#endif
    if (cex) rep.failures.push_back({name, *cex});
  }
};

struct Rng {
  std::mt19937 eng;
  explicit Rng(unsigned seed) : eng(seed) {}

  Rat rat(int max_num = 3, int max_den = 3) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    Rat r(num(eng), den(eng));
    r.canonicalize();
    return r;
  }
};

const std::vector<std::string> kUndec{"o"};

PlusCharacter random_character(Rng& rng, int max_vertices,
                               const std::vector<std::string>& alphabet) {
  std::map<Tree, Rat> values;
  for (int n = 2; n <= max_vertices; ++n) {
    for (const Tree& t : enumerate_trees(n, alphabet)) values[t] = rng.rat();
  }
  return PlusCharacter::from_values(std::move(values));
}

// ---------------------------------------------------------------- prelie --

Maybe check_prelie_identity(const VerifyOptions& opt) {
  auto trees = enumerate_trees_up_to(opt.undecorated_vertices - 2, kUndec);
  for (const Tree& x : trees) {
    for (const Tree& y : trees) {
      for (const Tree& z : trees) {
        if (x.vertex_count() + y.vertex_count() + z.vertex_count() > opt.undecorated_vertices) {
          continue;
        }
        LinComb<Tree> lx(x), ly(y), lz(z);
        LinComb<Tree> lhs = graft(graft(lx, ly), lz) - graft(lx, graft(ly, lz));
        LinComb<Tree> rhs = graft(graft(ly, lx), lz) - graft(ly, graft(lx, lz));
        if (!(lhs == rhs)) {
          return to_text(x) + " ; " + to_text(y) + " ; " + to_text(z);
        }
      }
    }
  }
  return std::nullopt;
}

Maybe check_gl_associative(const VerifyOptions& opt) {
  const int bound = std::min(opt.undecorated_vertices - 1, 6);
  auto forests = enumerate_forests_up_to(bound, kUndec);
  for (const Forest& f : forests) {
    for (const Forest& g : forests) {
      for (const Forest& h : forests) {
        if (f.vertex_count() + g.vertex_count() + h.vertex_count() > bound) continue;
        LinComb<Forest> lf(f), lg(g), lh(h);
        if (!(gl_product(gl_product(lf, lg), lh) == gl_product(lf, gl_product(lg, lh)))) {
          return to_text(f) + " ; " + to_text(g) + " ; " + to_text(h);
        }
      }
    }
  }
  return std::nullopt;
}

Maybe check_gl_unit(const VerifyOptions&) {
  for (const Forest& f : enumerate_forests_up_to(4, kUndec)) {
    LinComb<Forest> lf(f);
    if (!(gl_product(Forest::unit(), f) == lf) || !(gl_product(f, Forest::unit()) == lf)) {
      return to_text(f);
    }
  }
  return std::nullopt;
}

Maybe check_forest_graft_bplus(const VerifyOptions& opt) {
  for (const Forest& f : enumerate_forests_up_to(opt.decorated_vertices - 1, opt.alphabet)) {
    for (const auto& letter : opt.alphabet) {
      Tree target{SemigroupElement(letter)};
      LinComb<Tree> expected(b_plus(SemigroupElement(letter), f));
      if (!(forest_graft(f, target) == expected)) {
        return to_text(f) + " |> " + letter;
      }
    }
  }
  return std::nullopt;
}

Maybe check_forest_graft_oracle(const VerifyOptions&) {
  for (const Forest& f : enumerate_forests_up_to(3, kUndec)) {
    for (const Tree& t : enumerate_trees_up_to(4, kUndec)) {
      if (!(forest_graft(f, t) == forest_graft_direct(f, t))) {
        return to_text(f) + " |> " + to_text(t);
      }
    }
  }
  return std::nullopt;
}

Maybe check_prelie_extend_morphism(const VerifyOptions& opt, Rng& rng) {
  // g is supported on three letters; the argument trees range over two of
  // them. All pairs up to total 5 are swept, pairs of total 6 are sampled.
  const std::vector<std::string> letters{"a", "b", "c"};
  GeneratorAssignment g;
  auto image_trees = enumerate_trees_up_to(2, letters);
  std::uniform_int_distribution<std::size_t> pick(0, image_trees.size() - 1);
  {
    LinComb<Tree> img;  // one two-term image, two one-term images
    img.add(image_trees[pick(rng.eng)], rng.rat());
    img.add(image_trees[pick(rng.eng)], rng.rat());
    g["a"] = std::move(img);
    g["b"] = LinComb<Tree>(image_trees[pick(rng.eng)], rng.rat());
    g["c"] = LinComb<Tree>(image_trees[pick(rng.eng)], rng.rat());
  }
  std::map<Tree, LinComb<Tree>> cache;
  auto extend = [&](const Tree& t) -> const LinComb<Tree>& {
    auto it = cache.find(t);
    if (it == cache.end()) it = cache.emplace(t, prelie_extend(g, t)).first;
    return it->second;
  };
  auto pair_ok = [&](const Tree& x, const Tree& y) {
    LinComb<Tree> lhs;
    for (const auto& [u, c] : graft(x, y).terms()) {
      LinComb<Tree> img = extend(u);
      img *= c;
      lhs += img;
    }
    return lhs == graft(extend(x), extend(y));
  };
  const int bound = std::min(opt.decorated_vertices + 1, 6);
  auto trees = enumerate_trees_up_to(bound - 1, {"a", "b"});
  for (const Tree& x : trees) {
    for (const Tree& y : trees) {
      if (x.vertex_count() + y.vertex_count() > bound - 1) continue;
      if (!pair_ok(x, y)) return to_text(x) + " ; " + to_text(y);
    }
  }
  for (int kx = 1; kx < bound; ++kx) {
    auto xs = enumerate_trees(kx, {"a", "b"});
    auto ys = enumerate_trees(bound - kx, {"a", "b"});
    std::uniform_int_distribution<std::size_t> px(0, xs.size() - 1), py(0, ys.size() - 1);
    for (int trial = 0; trial < 10; ++trial) {
      const Tree& x = xs[px(rng.eng)];
      const Tree& y = ys[py(rng.eng)];
      if (!pair_ok(x, y)) return to_text(x) + " ; " + to_text(y);
    }
  }
  return std::nullopt;
}

Maybe check_cm_expansion(const VerifyOptions& opt) {
  const LinComb<Tree> dot{Tree(SemigroupElement("o"))};
  for (int n = 1; n <= opt.undecorated_vertices; ++n) {
    LinComb<Tree> lhs = left_power(dot, dot, n - 1);
    LinComb<Tree> rhs;
    for (const Tree& t : enumerate_trees(n, kUndec)) rhs.add(t, tree_cm(t));
    if (!(lhs == rhs)) return "n = " + std::to_string(n);
  }
  return std::nullopt;
}

// ------------------------------------------------------------------- bck --

Maybe check_bck_coassoc(const VerifyOptions& opt) {
  for (const Forest& f : enumerate_forests_up_to(opt.decorated_vertices, opt.alphabet)) {
    LinComb<TensorFF> cp = bck_coproduct(f);
    LinComb<TensorFFF> lhs, rhs;
    for (const auto& [term, c] : cp.terms()) {
      for (const auto& [inner, ci] : bck_coproduct(term.left).terms()) {
        lhs.add(TensorFFF{inner.left, inner.right, term.right}, c * ci);
      }
      for (const auto& [inner, ci] : bck_coproduct(term.right).terms()) {
        rhs.add(TensorFFF{term.left, inner.left, inner.right}, c * ci);
      }
    }
    if (!(lhs == rhs)) return to_text(f);
  }
  return std::nullopt;
}

Maybe check_bck_counit(const VerifyOptions& opt) {
  BckFunctional eps = BckFunctional::counit();
  for (const Forest& f : enumerate_forests_up_to(opt.decorated_vertices, opt.alphabet)) {
    LinComb<Forest> left_side, right_side;
    for (const auto& [term, c] : bck_coproduct(f).terms()) {
      left_side.add(term.right, c * eps(term.left));
      right_side.add(term.left, c * eps(term.right));
    }
    if (!(left_side == LinComb<Forest>(f)) || !(right_side == LinComb<Forest>(f))) {
      return to_text(f);
    }
  }
  return std::nullopt;
}

Maybe check_bck_grading(const VerifyOptions& opt) {
  for (const Forest& f : enumerate_forests_up_to(opt.decorated_vertices, opt.alphabet)) {
    for (const auto& [term, c] : bck_coproduct(f).terms()) {
      if (term.left.vertex_count() + term.right.vertex_count() != f.vertex_count()) {
        return to_text(f);
      }
    }
  }
  return std::nullopt;
}

Maybe check_bck_cut_oracle(const VerifyOptions& opt) {
  for (const Tree& t : enumerate_trees_up_to(opt.decorated_vertices, opt.alphabet)) {
    if (!(bck_coproduct(t) == bck_coproduct_cuts(t))) return to_text(t);
  }
  return std::nullopt;
}

Maybe check_bck_primitivity(const VerifyOptions& opt) {
  for (const Tree& t : enumerate_trees_up_to(opt.decorated_vertices, opt.alphabet)) {
    LinComb<TensorFF> reduced = bck_coproduct(t);
    reduced.add(TensorFF{Forest(t), Forest::unit()}, Rat(-1));
    reduced.add(TensorFF{Forest::unit(), Forest(t)}, Rat(-1));
    for (const auto& [term, c] : reduced.terms()) {
      if (term.left.is_unit() || term.right.is_unit()) return to_text(t);
    }
  }
  return std::nullopt;
}

Maybe gl_bck_duality(int max_total, const std::vector<std::string>& alphabet) {
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
        Rat rhs = convolve_bck(df, dg, h);
        if (lhs != rhs) return to_text(f) + " ; " + to_text(g) + " ; " + to_text(h);
      }
    }
  }
  return std::nullopt;
}

Maybe check_bck_lie_bracket(const VerifyOptions&) {
  auto trees = enumerate_trees_up_to(4, kUndec);
  for (const Tree& t1 : trees) {
    for (const Tree& t2 : trees) {
      const int total = t1.vertex_count() + t2.vertex_count();
      if (total > 5) continue;
      LinComb<Tree> bracket = graft(t1, t2);
      bracket -= graft(t2, t1);
      BckFunctional d1 = BckFunctional::dual(Forest(t1));
      BckFunctional d2 = BckFunctional::dual(Forest(t2));
      for (const Forest& h : enumerate_forests(total, kUndec)) {
        Rat lhs = convolve_bck(d1, d2, h) - convolve_bck(d2, d1, h);
        Rat rhs(0);
        for (const auto& [s, c] : bracket.terms()) rhs += c * pairing(Forest(s), h);
        if (lhs != rhs) return to_text(t1) + " ; " + to_text(t2) + " ; " + to_text(h);
      }
    }
  }
  return std::nullopt;
}

// -------------------------------------------------------------- qshuffle --

Maybe check_qsh_comm_assoc(const VerifyOptions& opt) {
  const Semigroup sg = Semigroup::free();
  const int bound = opt.word_length;
  for (int lu = 0; lu <= bound; ++lu) {
    for (const Word& u : enumerate_words(lu, opt.alphabet)) {
      for (int lv = 0; lu + lv <= bound; ++lv) {
        for (const Word& v : enumerate_words(lv, opt.alphabet)) {
          if (!(quasi_shuffle(u, v, sg) == quasi_shuffle(v, u, sg))) {
            return to_text(u) + " ; " + to_text(v);
          }
          for (int lw = 1; lu + lv + lw <= bound; ++lw) {
            for (const Word& w : enumerate_words(lw, opt.alphabet)) {
              LinComb<Word> lw1 = quasi_shuffle(quasi_shuffle(u, v, sg), LinComb<Word>(w), sg);
              LinComb<Word> lw2 = quasi_shuffle(LinComb<Word>(u), quasi_shuffle(v, w, sg), sg);
              if (!(lw1 == lw2)) {
                return to_text(u) + " ; " + to_text(v) + " ; " + to_text(w);
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

LinComb<TensorWW> deconcat_lc(const LinComb<Word>& x) {
  LinComb<TensorWW> out;
  for (const auto& [w, c] : x.terms()) {
    for (const auto& [l, r] : deconcat(w)) out.add(TensorWW{l, r}, c);
  }
  return out;
}

Maybe check_qsh_bialgebra(const VerifyOptions& opt) {
  const Semigroup sg = Semigroup::free();
  const int bound = std::min(opt.word_length, 5);
  for (int lu = 0; lu <= bound; ++lu) {
    for (const Word& u : enumerate_words(lu, opt.alphabet)) {
      for (int lv = 0; lu + lv <= bound; ++lv) {
        for (const Word& v : enumerate_words(lv, opt.alphabet)) {
          LinComb<TensorWW> lhs = deconcat_lc(quasi_shuffle(u, v, sg));
          LinComb<TensorWW> rhs;
          for (const auto& [du, cu] : deconcat_lc(LinComb<Word>(u)).terms()) {
            for (const auto& [dv, cv] : deconcat_lc(LinComb<Word>(v)).terms()) {
              rhs += (cu * cv) *
                     bilinear(quasi_shuffle(du.left, dv.left, sg), quasi_shuffle(du.right, dv.right, sg),
                              [](const Word& a, const Word& b) {
                                return LinComb<TensorWW>(TensorWW{a, b});
                              });
            }
          }
          if (!(lhs == rhs)) return to_text(u) + " ; " + to_text(v);
        }
      }
    }
  }
  return std::nullopt;
}

Maybe check_psi_composition(const VerifyOptions& opt, Rng& rng) {
  const Semigroup sg = Semigroup::free();
  const int len = std::min(opt.word_length, 5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rat> fc{Rat(1)}, gc{Rat(1)};
    for (int n = 2; n <= len; ++n) {
      fc.push_back(rng.rat());
      gc.push_back(rng.rat());
    }
    PowerSeries f = PowerSeries::from_coeffs(fc);
    PowerSeries g = PowerSeries::from_coeffs(gc);
    PowerSeries fog = f.compose(g);
    for (int l = 0; l <= len; ++l) {
      for (const Word& w : enumerate_words(l, opt.alphabet)) {
        if (!(psi_series(f, psi_series(g, w, sg), sg) == psi_series(fog, w, sg))) {
          return "trial " + std::to_string(trial) + " ; " + to_text(w);
        }
      }
    }
  }
  return std::nullopt;
}

Maybe check_hoffman_inverse(const VerifyOptions& opt) {
  const Semigroup sg = Semigroup::free();
  for (int l = 0; l <= opt.word_length; ++l) {
    for (const Word& w : enumerate_words(l, opt.alphabet)) {
      if (!(hoffman_log(hoffman_exp(w, sg), sg) == LinComb<Word>(w))) return to_text(w);
      if (!(hoffman_exp(hoffman_log(w, sg), sg) == LinComb<Word>(w))) return to_text(w);
    }
  }
  return std::nullopt;
}

Maybe check_hoffman_hopf(const VerifyOptions& opt) {
  const Semigroup sg = Semigroup::free();
  const int bound = std::min(opt.word_length, 5);
  for (int lu = 0; lu <= bound; ++lu) {
    for (const Word& u : enumerate_words(lu, opt.alphabet)) {
      for (int lv = 0; lu + lv <= bound; ++lv) {
        for (const Word& v : enumerate_words(lv, opt.alphabet)) {
          LinComb<Word> lhs = hoffman_exp(shuffle(u, v), sg);
          LinComb<Word> rhs = quasi_shuffle(hoffman_exp(u, sg), hoffman_exp(v, sg), sg);
          if (!(lhs == rhs)) return to_text(u) + " ; " + to_text(v);
        }
      }
      // deconcatenation intertwining, legwise
      LinComb<TensorWW> lhs = deconcat_lc(hoffman_exp(u, sg));
      LinComb<TensorWW> rhs;
      for (const auto& [l, r] : deconcat(u)) {
        rhs += bilinear(hoffman_exp(l, sg), hoffman_exp(r, sg),
                        [](const Word& a, const Word& b) { return LinComb<TensorWW>(TensorWW{a, b}); });
      }
      if (!(lhs == rhs)) return to_text(u);
    }
  }
  return std::nullopt;
}

Maybe check_r_operator(const VerifyOptions& opt) {
  const int bound = std::min(opt.word_length, 5);
  for (int l = 0; l <= bound; ++l) {
    for (const Word& w : enumerate_words(l, opt.alphabet)) {
      for (const auto& letter : opt.alphabet) {
        const SemigroupElement i{letter};
        const Word wi = w.append(i);
        LinComb<TensorWW> lhs = deconcat_lc(LinComb<Word>(wi));
        LinComb<TensorWW> rhs(TensorWW{wi, Word{}});
        for (const auto& [pre, suf] : deconcat(w)) rhs.add(TensorWW{pre, suf.append(i)}, Rat(1));
        if (!(lhs == rhs)) return to_text(wi);
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------- substitution --

Maybe check_sub_coassoc(const VerifyOptions& opt) {
  const Semigroup sg = Semigroup::free();
  for (const Tree& t : enumerate_trees_up_to(opt.decorated_vertices, opt.alphabet)) {
    LinComb<TensorFT> cp = sub_coproduct(t, sg);
    LinComb<TensorFFT> lhs, rhs;
    for (const auto& [term, c] : cp.terms()) {
      for (const auto& [inner, ci] : coaction(term.left, sg).terms()) {
        lhs.add(TensorFFT{inner.left, inner.right, term.right}, c * ci);
      }
      for (const auto& [inner, ci] : sub_coproduct(term.right, sg).terms()) {
        rhs.add(TensorFFT{term.left, inner.left, inner.right}, c * ci);
      }
    }
    if (!(lhs == rhs)) return to_text(t);
  }
  return std::nullopt;
}

Maybe check_sub_edge_grading(const VerifyOptions& opt) {
  const Semigroup sg = Semigroup::free();
  for (const Tree& t : enumerate_trees_up_to(opt.decorated_vertices, opt.alphabet)) {
    for (const auto& [term, c] : sub_coproduct(t, sg).terms()) {
      if (term.left.edge_count() + term.right.edge_count() != t.edge_count()) return to_text(t);
    }
  }
  return std::nullopt;
}

Tree make_ladder(const std::vector<SemigroupElement>& leaf_to_root) {
  Tree t(leaf_to_root.front());
  for (std::size_t k = 1; k < leaf_to_root.size(); ++k) {
    t = b_plus(leaf_to_root[k], Forest(t));
  }
  return t;
}

Maybe check_ladder_formula(const VerifyOptions& opt) {
  const Semigroup sg = Semigroup::free();
  const int bound = std::min(opt.decorated_vertices, 5);
  for (int l = 1; l <= bound; ++l) {
    for (const Word& w : enumerate_words(l, opt.alphabet)) {
      const auto& seq = w.letters;  // leaf to root
      Tree ladder = make_ladder(seq);
      LinComb<TensorFT> expected;
      for (const Composition& I : compositions(l)) {
        std::vector<Tree> blocks;
        std::vector<SemigroupElement> contracted;
        std::size_t pos = 0;
        for (int part : I.parts) {
          std::vector<SemigroupElement> blk(seq.begin() + static_cast<long>(pos),
                                            seq.begin() + static_cast<long>(pos) + part);
          blocks.push_back(make_ladder(blk));
          contracted.push_back(sg.mul_all(blk));
          pos += static_cast<std::size_t>(part);
        }
        expected.add(TensorFT{Forest(std::move(blocks)), make_ladder(contracted)}, Rat(1));
      }
      if (!(sub_coproduct(ladder, sg) == expected)) return to_text(ladder);
    }
  }
  return std::nullopt;
}

Maybe check_psi_composition_law(const VerifyOptions& opt, Rng& rng) {
  const Semigroup sg = Semigroup::free();
  const int bound = std::min(opt.decorated_vertices - 1, 4);
  PlusCharacter u = random_character(rng, bound, opt.alphabet);
  PlusCharacter v = random_character(rng, bound, opt.alphabet);
  PlusCharacter vu = PlusCharacter::from_rule(
      [u, v, sg](const Tree& t) { return convolve_plus(v, u, t, sg); }, true);
  for (const Forest& f : enumerate_forests_up_to(bound, opt.alphabet)) {
    LinComb<Forest> lhs = psi_v(u, psi_v(v, f, sg), sg);
    LinComb<Forest> rhs = psi_v(vu, f, sg);
    if (!(lhs == rhs)) return to_text(f);
  }
  return std::nullopt;
}

Maybe check_psi_bialgebra_morphism(const VerifyOptions& opt, Rng& rng) {
  const Semigroup sg = Semigroup::free();
  const int bound = std::min(opt.decorated_vertices - 1, 4);
  PlusCharacter v = random_character(rng, bound, opt.alphabet);
  auto forests = enumerate_forests_up_to(bound, opt.alphabet);
  for (const Forest& f : forests) {
    for (const Forest& g : forests) {
      if (f.vertex_count() + g.vertex_count() > bound) continue;
      LinComb<Forest> lhs = psi_v(v, f * g, sg);
      LinComb<Forest> rhs = bilinear(psi_v(v, f, sg), psi_v(v, g, sg),
                                     [](const Forest& a, const Forest& b) {
                                       return LinComb<Forest>(a * b);
                                     });
      if (!(lhs == rhs)) return to_text(f) + " ; " + to_text(g);
    }
    // coproduct compatibility
    LinComb<TensorFF> lhs;
    for (const auto& [img, c] : psi_v(v, f, sg).terms()) {
      lhs += c * bck_coproduct(img);
    }
    LinComb<TensorFF> rhs;
    for (const auto& [term, c] : bck_coproduct(f).terms()) {
      rhs += c * bilinear(psi_v(v, term.left, sg), psi_v(v, term.right, sg),
                          [](const Forest& a, const Forest& b) {
                            return LinComb<TensorFF>(TensorFF{a, b});
                          });
    }
    if (!(lhs == rhs)) return to_text(f);
  }
  return std::nullopt;
}

Maybe check_convolution_identities(const VerifyOptions&, Rng& rng) {
  const Semigroup sg = Semigroup::idempotent("o");
  PlusCharacter v = random_character(rng, 4, kUndec);
  PlusCharacter unit = PlusCharacter::unit();
  for (const Tree& t : enumerate_trees_up_to(4, kUndec)) {
    if (convolve_plus(unit, v, t, sg) != v(t)) return "Z (*) v at " + to_text(t);
    if (convolve_plus(v, unit, t, sg) != v(t)) return "v (*) Z at " + to_text(t);
  }
  return std::nullopt;
}

Maybe check_mixed_convolution(const VerifyOptions&, Rng& rng) {
  const Semigroup sg = Semigroup::idempotent("o");
  PlusCharacter phi = random_character(rng, 4, kUndec);
  std::map<Forest, Rat> bv, cv;
  for (const Forest& f : enumerate_forests_up_to(4, kUndec)) {
    bv[f] = rng.rat();
    cv[f] = rng.rat();
  }
  BckFunctional b = BckFunctional::general([bv](const Forest& f) {
    auto it = bv.find(f);
    return it == bv.end() ? Rat(0) : it->second;
  }, 4);
  BckFunctional c = BckFunctional::general([cv](const Forest& f) {
    auto it = cv.find(f);
    return it == cv.end() ? Rat(0) : it->second;
  }, 4);
  auto coact = [&](const BckFunctional& fn, const Forest& f) {
    Rat r(0);
    for (const auto& [term, w] : coaction(f, sg).terms()) r += w * phi(term.left) * fn(term.right);
    return r;
  };
  BckFunctional phi_b = BckFunctional::general([&](const Forest& f) { return coact(b, f); }, 4);
  BckFunctional phi_c = BckFunctional::general([&](const Forest& f) { return coact(c, f); }, 4);
  for (const Forest& f : enumerate_forests_up_to(4, kUndec)) {
    BckFunctional bc = BckFunctional::general(
        [&](const Forest& g) { return convolve_bck(b, c, g); }, 4);
    Rat lhs = coact(bc, f);
    Rat rhs = convolve_bck(phi_b, phi_c, f);
    if (lhs != rhs) return to_text(f);
  }
  return std::nullopt;
}

Maybe check_character_inverse(const VerifyOptions& opt, Rng& rng) {
  const Semigroup sgs[2] = {Semigroup::idempotent("o"), Semigroup::free()};
  const std::vector<std::string> alphabets[2] = {kUndec, opt.alphabet};
  for (int which = 0; which < 2; ++which) {
    const Semigroup& sg = sgs[which];
    const int bound = 4;
    PlusCharacter candidates[2] = {PlusCharacter::inverse_tree_factorial(),
                                   random_character(rng, bound, alphabets[which])};
    for (const PlusCharacter& v : candidates) {
      PlusCharacter w = invert_character(v, sg, bound);
      PlusCharacter unit = PlusCharacter::unit();
      for (const Tree& t : enumerate_trees_up_to(bound, alphabets[which])) {
        if (convolve_plus(w, v, t, sg) != unit(t)) return "w (*) v at " + to_text(t);
        if (convolve_plus(v, w, t, sg) != unit(t)) return "v (*) w at " + to_text(t);
        if (w(t) != invert_character_series(v, t, sg)) {
          return "pseudo-antipode oracle at " + to_text(t);
        }
      }
      for (const Forest& f : enumerate_forests_up_to(bound, alphabets[which])) {
        if (!(psi_v(w, psi_v(v, f, sg), sg) == LinComb<Forest>(f))) {
          return "Psi inverse at " + to_text(f);
        }
      }
    }
  }
  return std::nullopt;
}

// -------------------------------------------------------------- diagram --

Maybe check_arbo_hoffman_diagram(const VerifyOptions& opt) {
  const Semigroup sg = Semigroup::free();
  for (const Tree& t : enumerate_trees_up_to(opt.decorated_vertices, opt.alphabet)) {
    LinComb<Word> lhs = contract_arborify(arbo_hoffman_exp(Forest(t), sg), sg);
    LinComb<Word> rhs = hoffman_exp(arborify(t), sg);
    if (!(lhs == rhs)) return to_text(t);
  }
  return std::nullopt;
}

Maybe check_arborification_hopf(const VerifyOptions& opt) {
  const Semigroup sg = Semigroup::free();
  const int bound = std::min(opt.decorated_vertices, 5);
  auto forests = enumerate_forests_up_to(bound, opt.alphabet);
  for (const Forest& f : forests) {
    for (const Forest& g : forests) {
      if (f.vertex_count() + g.vertex_count() > bound) continue;
      if (!(arborify(f * g) == shuffle(arborify(f), arborify(g)))) {
        return "a at " + to_text(f) + " ; " + to_text(g);
      }
      if (!(contract_arborify(f * g, sg) ==
            quasi_shuffle(contract_arborify(f, sg), contract_arborify(g, sg), sg))) {
        return "a^c at " + to_text(f) + " ; " + to_text(g);
      }
    }
    // coproduct intertwining for both arborifications
    LinComb<TensorWW> lhs_a = deconcat_lc(arborify(f));
    LinComb<TensorWW> lhs_c = deconcat_lc(contract_arborify(f, sg));
    LinComb<TensorWW> rhs_a, rhs_c;
    for (const auto& [term, c] : bck_coproduct(f).terms()) {
      rhs_a += c * bilinear(arborify(term.left), arborify(term.right),
                            [](const Word& a, const Word& b) {
                              return LinComb<TensorWW>(TensorWW{a, b});
                            });
      rhs_c += c * bilinear(contract_arborify(term.left, sg), contract_arborify(term.right, sg),
                            [](const Word& a, const Word& b) {
                              return LinComb<TensorWW>(TensorWW{a, b});
                            });
    }
    if (!(lhs_a == rhs_a)) return "a coproduct at " + to_text(f);
    if (!(lhs_c == rhs_c)) return "a^c coproduct at " + to_text(f);
  }
  return std::nullopt;
}

// -------------------------------------------------------------- adjoint --

Maybe check_adjoint_generator(const VerifyOptions& opt) {
  const Semigroup sg = Semigroup::idempotent("o");
  const SemigroupElement o("o");
  const LinComb<Tree> dot{Tree(o)};
  const int bound = std::min(opt.undecorated_vertices - 1, 6);
  LinComb<Tree> adjoint = arbo_hoffman_adjoint(o, kUndec, sg, bound);
  for (int n = 1; n <= bound; ++n) {
    LinComb<Tree> degree_part;
    for (const auto& [t, c] : adjoint.terms()) {
      if (t.vertex_count() == n) degree_part.add(t, c);
    }
    degree_part *= Rat(int_factorial(static_cast<unsigned>(n)));
    if (!(degree_part == left_power(dot, dot, n - 1))) return "n = " + std::to_string(n);
  }
  return std::nullopt;
}

Maybe check_flow_adjoint(const VerifyOptions& opt, Rng& rng) {
  const int N = std::min(opt.bseries_order, 4);
  auto unit_values = [](const Tree& t) { return t.vertex_count() == 1 ? Rat(1) : Rat(0); };
  if (!flow_adjoint_residual(unit_values, N).is_zero()) return "a = Z";
  auto inv_fact = [](const Tree& t) {
    Rat r = Rat(1) / Rat(tree_factorial(t));
    r.canonicalize();
    return r;
  };
  if (!flow_adjoint_residual(inv_fact, N).is_zero()) return "a = 1/t!";
  for (int trial = 0; trial < 10; ++trial) {
    std::map<Tree, Rat> values;
    for (const Tree& t : enumerate_trees_up_to(N, kUndec)) {
      values[t] = t.vertex_count() == 1 ? Rat(1) : rng.rat();
    }
    auto a = [values](const Tree& t) {
      auto it = values.find(t);
      return it == values.end() ? Rat(0) : it->second;
    };
    LinComb<TensorFF> residual = flow_adjoint_residual(a, N);
    if (!residual.is_zero()) return "random trial " + std::to_string(trial);
  }
  return std::nullopt;
}

// --------------------------------------------------------------- marcus --

Maybe check_marcus(const VerifyOptions&) {
  auto field = marcus_modified_field(5);
  // Ito-Stratonovich correction at n = 2: (1/2) ladder, diffusion decorated.
  const SemigroupElement one("1");
  Tree ladder2 = b_plus(one, Forest(Tree(one)));
  LinComb<Tree> expected2(ladder2, Rat(1, 2));
  if (!(field.at("2") == expected2)) return "n = 2";
  Tree ladder3 = b_plus(one, Forest(ladder2));
  Tree cherry(one, {Tree(one), Tree(one)});
  LinComb<Tree> expected3;
  expected3.add(ladder3, Rat(1, 6));
  expected3.add(cherry, Rat(1, 6));
  if (!(field.at("3") == expected3)) return "n = 3";

  const Semigroup additive = Semigroup::additive();
  for (int n = 1; n <= 5; ++n) {
    LinComb<Tree> adjoint =
        arbo_hoffman_adjoint(SemigroupElement(std::to_string(n)), {"1"}, additive, n);
    if (!(adjoint == field.at(std::to_string(n)))) return "adjoint mismatch at n = " + std::to_string(n);
  }
  return std::nullopt;
}

// ------------------------------------------------------------------- hk --

Maybe check_hk_projection(const VerifyOptions& opt) {
  for (const Tree& t : enumerate_trees_up_to(opt.decorated_vertices, kUndec)) {
    if (!(project_forest(hk_psi(t)) == hk_psi_tilde(t))) return to_text(t);
  }
  for (const Forest& f : enumerate_forests_up_to(opt.decorated_vertices, kUndec)) {
    if (!(project_forest(hk_psi(f)) == hk_psi_tilde(f))) return to_text(f);
  }
  return std::nullopt;
}

Maybe check_hk_multiplicative(const VerifyOptions&) {
  auto forests = enumerate_forests_up_to(4, kUndec);
  for (const Forest& f : forests) {
    for (const Forest& g : forests) {
      if (f.vertex_count() + g.vertex_count() > 4) continue;
      if (!(hk_psi(f * g) == shuffle_tensor_words(hk_psi(f), hk_psi(g)))) {
        return to_text(f) + " ; " + to_text(g);
      }
    }
  }
  return std::nullopt;
}

Maybe check_hk_inverse(const VerifyOptions& opt) {
  for (const Forest& f : enumerate_forests_up_to(opt.decorated_vertices, kUndec)) {
    LinComb<Forest> there = hk_psi_tilde_inv(f);
    LinComb<Forest> back;
    for (const auto& [g, c] : there.terms()) back += c * hk_psi_tilde(g);
    if (!(back == LinComb<Forest>(f))) return "psi o psi^{-1} at " + to_text(f);
    LinComb<Forest> image = hk_psi_tilde(f);
    if (!(hk_psi_tilde_inv(image) == LinComb<Forest>(f))) return "psi^{-1} o psi at " + to_text(f);
  }
  return std::nullopt;
}

Maybe check_hk_triangular(const VerifyOptions& opt) {
  for (const Tree& t : enumerate_trees_up_to(opt.decorated_vertices, kUndec)) {
    LinComb<Forest> tail = hk_psi_tilde(t);
    tail.add(Forest(t), Rat(-1));
    for (const auto& [g, c] : tail.terms()) {
      if (g.tree_count() <= 1) return to_text(t);
    }
  }
  return std::nullopt;
}

Maybe check_hk_flow(const VerifyOptions& opt) {
  const int N = std::min(opt.bseries_order, 4);
  for (int n = 1; n <= N; ++n) {
    if (!hk_flow_identity_residual(n).is_zero()) return "N = " + std::to_string(n);
  }
  return std::nullopt;
}

// -------------------------------------------------------------- bseries --

FieldAssignment one_d_field(const std::string& spec) {
  return FieldAssignment{{"o", parse_field(spec, 1)}};
}

Maybe check_elementary_prelie(const VerifyOptions&, Rng& rng) {
  // random quadratic 2-d fields
  FieldAssignment fields;
  PolyVectorField f = PolyVectorField::zero(2);
  for (int c = 0; c < 2; ++c) {
    Poly p(3);
    for (unsigned e1 = 0; e1 <= 2; ++e1) {
      for (unsigned e2 = 0; e1 + e2 <= 2; ++e2) {
        p.add_term({e1, e2, 0}, rng.rat(2, 2));
      }
    }
    f.components[static_cast<std::size_t>(c)] = p;
  }
  fields["o"] = f;
  auto trees = enumerate_trees_up_to(4, kUndec);
  for (const Tree& s : trees) {
    for (const Tree& t : trees) {
      if (s.vertex_count() + t.vertex_count() > 5) continue;
      PolyVectorField lhs = PolyVectorField::zero(2);
      for (const auto& [u, c] : graft(s, t).terms()) {
        PolyVectorField d = elementary_differential(fields, u);
        for (int k = 0; k < 2; ++k) {
          lhs.components[static_cast<std::size_t>(k)] += d.components[static_cast<std::size_t>(k)] * c;
        }
      }
      PolyVectorField rhs =
          field_prelie(elementary_differential(fields, s), elementary_differential(fields, t));
      if (!(lhs == rhs)) return to_text(s) + " ; " + to_text(t);
    }
  }
  return std::nullopt;
}

TreeFunctional inv_factorial_functional() {
  return [](const Tree& t) {
    Rat r = Rat(1) / Rat(tree_factorial(t));
    r.canonicalize();
    return r;
  };
}

Maybe check_flow_expansions(const VerifyOptions& opt) {
  const int N = std::min(opt.bseries_order, 4);
  // dy/dt = y from y0 = 1: exact flow e^t, coefficients 1/k!
  auto exp_series = bseries_truncated(inv_factorial_functional(), one_d_field("x1"), N, {Rat(1)});
  for (int k = 0; k <= N; ++k) {
    Rat expected = Rat(1) / Rat(int_factorial(static_cast<unsigned>(k)));
    expected.canonicalize();
    if (exp_series[static_cast<std::size_t>(k)][0] != expected) return "exp at order " + std::to_string(k);
  }
  // dy/dt = y^2 from y0 = 1: exact flow 1/(1-t), all coefficients 1
  auto geo_series = bseries_truncated(inv_factorial_functional(), one_d_field("x1^2"), N, {Rat(1)});
  for (int k = 0; k <= N; ++k) {
    if (geo_series[static_cast<std::size_t>(k)][0] != 1) return "1/(1-t) at order " + std::to_string(k);
  }
  return std::nullopt;
}

Maybe check_bseries_grading(const VerifyOptions& opt, Rng& rng) {
  const int N = std::min(opt.bseries_order, 4);
  std::map<Tree, Rat> base;
  for (const Tree& t : enumerate_trees_up_to(N, kUndec)) base[t] = rng.rat();
  const int pick = 2;  // perturb away from degree `pick` and compare that slot
  auto a1 = [base](const Tree& t) { return base.count(t) ? base.at(t) : Rat(0); };
  auto a2 = [base, pick](const Tree& t) {
    Rat v = base.count(t) ? base.at(t) : Rat(0);
    if (t.vertex_count() != pick) v += 1;
    return v;
  };
  auto fields = one_d_field("1 + x1^2");
  auto s1 = bseries_truncated(a1, fields, N, {Rat(1, 2)});
  auto s2 = bseries_truncated(a2, fields, N, {Rat(1, 2)});
  if (s1[pick] != s2[pick]) return "slot " + std::to_string(pick);
  return std::nullopt;
}

Maybe check_substitution_law(const VerifyOptions& opt, Rng& rng) {
  const int N = std::min(opt.bseries_order, 4);
  auto invf = inv_factorial_functional();
  if (substitution_law_residual(invf, invf, one_d_field("x1^2"), N, {Rat(1)}) != 0) {
    return "(1/t!, 1/t!) on y^2";
  }
  FieldAssignment two_d{{"o", parse_field("x2^2 + x1*x2; x1^2 - 2*x2", 2)}};
  if (substitution_law_residual(invf, invf, two_d, N, {Rat(1), Rat(1, 2)}) != 0) {
    return "(1/t!, 1/t!) on 2-d field";
  }
  for (int trial = 0; trial < 10; ++trial) {
    std::map<Tree, Rat> av, bv;
    for (const Tree& t : enumerate_trees_up_to(N, kUndec)) {
      av[t] = t.vertex_count() == 1 ? Rat(1) : rng.rat();
      bv[t] = rng.rat();
    }
    auto a = [av](const Tree& t) { return av.count(t) ? av.at(t) : Rat(0); };
    auto b = [bv](const Tree& t) { return bv.count(t) ? bv.at(t) : Rat(0); };
    if (substitution_law_residual(a, b, one_d_field("x1^2"), N, {Rat(1)}) != 0) {
      return "random trial " + std::to_string(trial) + " on y^2";
    }
    if (substitution_law_residual(a, b, two_d, N, {Rat(1), Rat(-1, 3)}) != 0) {
      return "random trial " + std::to_string(trial) + " on 2-d field";
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- suites --

void run_suite(const std::string& suite, Runner& r, Rng& rng) {
  const VerifyOptions& opt = r.opt;
  if (suite == "prelie") {
    r.check("left-pre-lie-identity", [&] { return check_prelie_identity(opt); });
    r.check("gl-associative", [&] { return check_gl_associative(opt); });
    r.check("gl-unit", [&] { return check_gl_unit(opt); });
    r.check("forest-graft-bplus", [&] { return check_forest_graft_bplus(opt); });
    r.check("forest-graft-oracle", [&] { return check_forest_graft_oracle(opt); });
    r.check("prelie-extend-morphism", [&] { return check_prelie_extend_morphism(opt, rng); });
    r.check("cm-grafting-expansion", [&] { return check_cm_expansion(opt); });
  } else if (suite == "bck") {
    r.check("bck-coassociativity", [&] { return check_bck_coassoc(opt); });
    r.check("bck-counit", [&] { return check_bck_counit(opt); });
    r.check("bck-grading", [&] { return check_bck_grading(opt); });
    r.check("bck-cut-oracle", [&] { return check_bck_cut_oracle(opt); });
    r.check("bck-primitivity", [&] { return check_bck_primitivity(opt); });
    r.check("gl-bck-duality-undecorated",
            [&] { return gl_bck_duality(opt.decorated_vertices, kUndec); });
    r.check("gl-bck-duality-decorated",
            [&] { return gl_bck_duality(std::min(opt.decorated_vertices - 1, 4), opt.alphabet); });
    r.check("bck-lie-bracket", [&] { return check_bck_lie_bracket(opt); });
  } else if (suite == "qshuffle") {
    r.check("quasi-shuffle-commutative-associative", [&] { return check_qsh_comm_assoc(opt); });
    r.check("quasi-shuffle-bialgebra", [&] { return check_qsh_bialgebra(opt); });
    r.check("psi-f-composition", [&] { return check_psi_composition(opt, rng); });
    r.check("hoffman-exp-log-inverse", [&] { return check_hoffman_inverse(opt); });
    r.check("hoffman-exp-hopf-morphism", [&] { return check_hoffman_hopf(opt); });
    r.check("r-operator-intertwining", [&] { return check_r_operator(opt); });
  } else if (suite == "substitution") {
    r.check("sub-coassociativity", [&] { return check_sub_coassoc(opt); });
    r.check("sub-edge-grading", [&] { return check_sub_edge_grading(opt); });
    r.check("ladder-formula", [&] { return check_ladder_formula(opt); });
    r.check("psi-v-composition-law", [&] { return check_psi_composition_law(opt, rng); });
    r.check("psi-v-bialgebra-morphism", [&] { return check_psi_bialgebra_morphism(opt, rng); });
    r.check("convolution-unit-identities", [&] { return check_convolution_identities(opt, rng); });
    r.check("mixed-convolution-identity", [&] { return check_mixed_convolution(opt, rng); });
    r.check("character-inverse", [&] { return check_character_inverse(opt, rng); });
  } else if (suite == "diagram") {
    r.check("arbo-hoffman-diagram", [&] { return check_arbo_hoffman_diagram(opt); });
    r.check("arborification-hopf-morphism", [&] { return check_arborification_hopf(opt); });
  } else if (suite == "adjoint") {
    r.check("adjoint-generator-consistency", [&] { return check_adjoint_generator(opt); });
    r.check("flow-adjoint-residual", [&] { return check_flow_adjoint(opt, rng); });
  } else if (suite == "marcus") {
    r.check("marcus-canonical-extension", [&] { return check_marcus(opt); });
  } else if (suite == "hk") {
    r.check("hk-projection", [&] { return check_hk_projection(opt); });
    r.check("hk-shuffle-multiplicative", [&] { return check_hk_multiplicative(opt); });
    r.check("hk-psi-tilde-inverse", [&] { return check_hk_inverse(opt); });
    r.check("hk-triangularity", [&] { return check_hk_triangular(opt); });
    r.check("hk-flow-identity", [&] { return check_hk_flow(opt); });
  } else if (suite == "bseries") {
    r.check("elementary-differential-prelie-morphism",
            [&] { return check_elementary_prelie(opt, rng); });
    r.check("closed-form-flows", [&] { return check_flow_expansions(opt); });
    r.check("bseries-grading", [&] { return check_bseries_grading(opt, rng); });
    r.check("substitution-law", [&] { return check_substitution_law(opt, rng); });
  } else {
    throw std::invalid_argument("unknown verify suite: " + suite);
  }
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{
      "prelie", "bck", "qshuffle", "substitution", "diagram",
      "adjoint", "marcus", "hk", "bseries", "all"};
  return names;
}

VerifyReport run_verify(const std::string& suite, const VerifyOptions& opt) {
  VerifyReport rep;
  rep.suite = suite;
  {
    std::ostringstream params;
    params << "decorated<=" << opt.decorated_vertices << " undecorated<=" << opt.undecorated_vertices
           << " words<=" << opt.word_length << " order<=" << opt.bseries_order << " alphabet=";
    for (std::size_t i = 0; i < opt.alphabet.size(); ++i) {
      if (i) params << ",";
      params << opt.alphabet[i];
    }
    params << " seed=" << opt.seed;
    rep.parameters = params.str();
  }
  Runner runner{opt, rep};
  Rng rng(opt.seed);
  const auto t0 = std::chrono::steady_clock::now();
  if (suite == "all") {
    for (const std::string& s : verify_suites()) {
      if (s != "all") run_suite(s, runner, rng);
    }
  } else {
    run_suite(suite, runner, rng);
  }
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace treehopf
