#include "treehopf/bseries.hpp"

#include <stdexcept>

#include "treehopf/enumerate.hpp"
#include "treehopf/stats.hpp"
#include "treehopf/substitution.hpp"

namespace treehopf {

PolyVectorField field_prelie(const PolyVectorField& f, const PolyVectorField& g) {
  if (f.dimension != g.dimension) throw std::invalid_argument("field_prelie: dimension mismatch");
  const int d = f.dimension;
  PolyVectorField out = PolyVectorField::zero(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      out.components[i] += f.components[j] * g.components[i].derivative(j);
    }
  }
  return out;
}

PolyVectorField elementary_differential(const FieldAssignment& fields, const Tree& t) {
  if (!t.root().is_base()) {
    throw std::invalid_argument("elementary_differential: compound decoration");
  }
  auto it = fields.find(t.root().base());
  if (it == fields.end()) {
    throw std::invalid_argument("elementary_differential: no field for letter " + t.root().base());
  }
  const PolyVectorField& f = it->second;
  const int d = f.dimension;
  std::vector<PolyVectorField> kids;
  for (const Tree& c : t.children()) {
    kids.push_back(elementary_differential(fields, c));
    if (kids.back().dimension != d) {
      throw std::invalid_argument("elementary_differential: dimension mismatch");
    }
  }
  if (kids.empty()) return f;
  // n-th derivative of the root field contracted with the child differentials
  const std::size_t n = kids.size();
  PolyVectorField out = PolyVectorField::zero(d);
  std::vector<int> j(n, 0);
  while (true) {
    for (int c = 0; c < d; ++c) {
      Poly term = f.components[static_cast<std::size_t>(c)];
      for (std::size_t k = 0; k < n; ++k) term = term.derivative(j[k]);
      if (term.is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) {
        term = term * kids[k].components[static_cast<std::size_t>(j[k])];
      }
      out.components[static_cast<std::size_t>(c)] += term;
    }
    std::size_t pos = 0;
    while (pos < n && ++j[pos] == d) j[pos++] = 0;
    if (pos == n) break;
  }
  return out;
}

namespace {

std::vector<std::string> assignment_alphabet(const FieldAssignment& fields) {
  std::vector<std::string> alphabet;
  for (const auto& [letter, field] : fields) alphabet.push_back(letter);
  if (alphabet.empty()) throw std::invalid_argument("empty field assignment");
  return alphabet;
}

int assignment_dimension(const FieldAssignment& fields) {
  int d = fields.begin()->second.dimension;
  for (const auto& [letter, field] : fields) {
    if (field.dimension != d) throw std::invalid_argument("inconsistent field dimensions");
  }
  return d;
}

}  // namespace

std::vector<std::vector<Rat>> bseries_truncated(const TreeFunctional& a,
                                                const FieldAssignment& fields, int N,
                                                const std::vector<Rat>& y0) {
  const int d = assignment_dimension(fields);
  if (static_cast<int>(y0.size()) != d) throw std::invalid_argument("bseries: wrong y0 size");
  std::vector<std::vector<Rat>> out(static_cast<std::size_t>(N) + 1,
                                    std::vector<Rat>(static_cast<std::size_t>(d), Rat(0)));
  out[0] = y0;  // the empty-forest term, a(1) = 1
  const auto alphabet = assignment_alphabet(fields);
  for (int n = 1; n <= N; ++n) {
    for (const Tree& t : enumerate_trees(n, alphabet)) {
      Rat coeff = a(t) / Rat(tree_sigma(t));
      coeff.canonicalize();
      if (coeff == 0) continue;
      PolyVectorField diff = elementary_differential(fields, t);
      for (int c = 0; c < d; ++c) {
        for (const auto& [h_extra, value] : diff.components[static_cast<std::size_t>(c)].eval_leaving_last(y0)) {
          const int slot = n + static_cast<int>(h_extra);
          if (slot > N) continue;
          out[static_cast<std::size_t>(slot)][static_cast<std::size_t>(c)] += coeff * value;
        }
      }
    }
  }
  return out;
}

PolyVectorField substitute_field(const TreeFunctional& a, const FieldAssignment& fields, int N) {
  if (fields.size() != 1) {
    throw std::invalid_argument("substitute_field: single-letter assignments only");
  }
  const auto& [letter, f] = *fields.begin();
  if (a(Tree(SemigroupElement(letter))) != 1) {
    throw std::invalid_argument("substitute_field: a(single vertex) must be 1");
  }
  const int d = f.dimension;
  PolyVectorField out = PolyVectorField::zero(d);
  for (int n = 1; n <= N; ++n) {
    for (const Tree& t : enumerate_trees(n, {letter})) {
      Rat coeff = a(t) / Rat(tree_sigma(t));
      coeff.canonicalize();
      if (coeff == 0) continue;
      PolyVectorField diff = elementary_differential(fields, t);
      for (int c = 0; c < d; ++c) {
        auto& comp = out.components[static_cast<std::size_t>(c)];
        comp += diff.components[static_cast<std::size_t>(c)].shift(d, static_cast<unsigned>(n - 1)) * coeff;
      }
    }
  }
  return out;
}

Rat substitution_law_residual(const TreeFunctional& a, const TreeFunctional& b,
                              const FieldAssignment& fields, int N, const std::vector<Rat>& y0) {
  if (fields.size() != 1) {
    throw std::invalid_argument("substitution_law_residual: single-letter assignments only");
  }
  const std::string letter = fields.begin()->first;
  FieldAssignment modified{{letter, substitute_field(a, fields, N)}};
  auto lhs = bseries_truncated(b, modified, N, y0);

  const Semigroup sg = Semigroup::idempotent(letter);
  PlusCharacter a_char = PlusCharacter::from_rule(a, /*unit_on_singletons=*/false);
  TreeFunctional conv = [a_char, b, sg](const Tree& t) {
    Rat r(0);
    for (const auto& [term, c] : sub_coproduct(t, sg).terms()) {
      r += c * a_char(term.left) * b(term.right);
    }
    return r;
  };
  auto rhs = bseries_truncated(conv, fields, N, y0);

  Rat worst(0);
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    for (std::size_t c = 0; c < lhs[k].size(); ++c) {
      Rat diff = abs(lhs[k][c] - rhs[k][c]);
      if (diff > worst) worst = diff;
    }
  }
  return worst;
}

}  // namespace treehopf
