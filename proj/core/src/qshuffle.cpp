#include "treehopf/qshuffle.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>

namespace treehopf {

int Composition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<Composition> compositions(int n) {
  if (n < 0) throw std::invalid_argument("compositions: negative n");
  if (n == 0) return {Composition{}};
  std::vector<Composition> out;
  for (int first = 1; first <= n; ++first) {
    for (const Composition& rest : compositions(n - first)) {
      Composition c;
      c.parts.push_back(first);
      c.parts.insert(c.parts.end(), rest.parts.begin(), rest.parts.end());
      out.push_back(std::move(c));
    }
  }
  return out;
}

namespace {

Word cons(const SemigroupElement& head, const Word& tail) {
  Word w;
  w.letters.reserve(tail.letters.size() + 1);
  w.letters.push_back(head);
  w.letters.insert(w.letters.end(), tail.letters.begin(), tail.letters.end());
  return w;
}

// One recursion for both products; a null semigroup drops the bracket term.
LinComb<Word> qsh(const Word& u, const Word& v, const Semigroup* sg) {
  if (u.empty()) return LinComb<Word>(v);
  if (v.empty()) return LinComb<Word>(u);
  const SemigroupElement& i = u.letters.front();
  const SemigroupElement& j = v.letters.front();
  Word ut(std::vector<SemigroupElement>(u.letters.begin() + 1, u.letters.end()));
  Word vt(std::vector<SemigroupElement>(v.letters.begin() + 1, v.letters.end()));
  LinComb<Word> out;
  for (const auto& [w, c] : qsh(ut, v, sg).terms()) out.add(cons(i, w), c);
  for (const auto& [w, c] : qsh(u, vt, sg).terms()) out.add(cons(j, w), c);
  if (sg) {
    const SemigroupElement ij = sg->mul(i, j);
    for (const auto& [w, c] : qsh(ut, vt, sg).terms()) out.add(cons(ij, w), c);
  }
  return out;
}

}  // namespace

LinComb<Word> quasi_shuffle(const Word& u, const Word& v, const Semigroup& sg) {
  return qsh(u, v, &sg);
}

LinComb<Word> quasi_shuffle(const LinComb<Word>& u, const LinComb<Word>& v, const Semigroup& sg) {
  return bilinear(u, v, [&](const Word& a, const Word& b) { return quasi_shuffle(a, b, sg); });
}

LinComb<Word> shuffle(const Word& u, const Word& v) { return qsh(u, v, nullptr); }

LinComb<Word> shuffle(const LinComb<Word>& u, const LinComb<Word>& v) {
  return bilinear(u, v, [](const Word& a, const Word& b) { return shuffle(a, b); });
}

std::vector<std::pair<Word, Word>> deconcat(const Word& w) {
  std::vector<std::pair<Word, Word>> out;
  const int n = w.length();
  for (int k = 0; k <= n; ++k) {
    Word pre(std::vector<SemigroupElement>(w.letters.begin(), w.letters.begin() + k));
    Word suf(std::vector<SemigroupElement>(w.letters.begin() + k, w.letters.end()));
    out.emplace_back(std::move(pre), std::move(suf));
  }
  return out;
}

Word contract_word(const Composition& I, const Word& w, const Semigroup& sg) {
  if (I.sum() != w.length()) {
    throw std::invalid_argument("contract_word: composition does not sum to the word length");
  }
  Word out;
  std::size_t pos = 0;
  for (int part : I.parts) {
    std::span<const SemigroupElement> block(w.letters.data() + pos, static_cast<std::size_t>(part));
    out.letters.push_back(sg.mul_all(block));
    pos += static_cast<std::size_t>(part);
  }
  return out;
}

PowerSeries PowerSeries::from_coeffs(std::vector<Rat> coeffs) {
  PowerSeries f;
  f.coeffs_ = std::move(coeffs);
  return f;
}

PowerSeries PowerSeries::identity(int degree) {
  std::vector<Rat> c(static_cast<std::size_t>(degree), Rat(0));
  if (degree >= 1) c[0] = 1;
  return from_coeffs(std::move(c));
}

PowerSeries PowerSeries::exp_minus_one(int degree) {
  std::vector<Rat> c;
  for (int n = 1; n <= degree; ++n) {
    c.emplace_back(Rat(1) / Rat(int_factorial(static_cast<unsigned>(n))));
  }
  return from_coeffs(std::move(c));
}

PowerSeries PowerSeries::log_one_plus(int degree) {
  std::vector<Rat> c;
  for (int n = 1; n <= degree; ++n) {
    Rat r = Rat(n % 2 == 1 ? 1 : -1) / Rat(n);
    r.canonicalize();
    c.push_back(r);
  }
  return from_coeffs(std::move(c));
}

Rat PowerSeries::coeff(int n) const {
  if (n < 1 || n > degree()) {
    throw std::out_of_range("PowerSeries: missing coefficient f_" + std::to_string(n));
  }
  return coeffs_[static_cast<std::size_t>(n - 1)];
}

PowerSeries PowerSeries::compose(const PowerSeries& g) const {
  // Exact polynomial substitution on truncated coefficient sequences.
  const int d = std::min(degree(), g.degree());
  std::vector<Rat> out(static_cast<std::size_t>(d), Rat(0));
  // powers of g, truncated to degree d; g^1 first
  std::vector<Rat> gpow(static_cast<std::size_t>(d), Rat(0));
  for (int n = 1; n <= d; ++n) gpow[n - 1] = g.coeff(n);
  for (int k = 1; k <= d; ++k) {
    const Rat fk = coeff(k);
    for (int n = k; n <= d; ++n) out[n - 1] += fk * gpow[n - 1];
    // gpow <- gpow * g (truncated); the lowest degree of g^(k+1) is k+1.
    if (k < d) {
      std::vector<Rat> next(static_cast<std::size_t>(d), Rat(0));
      for (int a = k; a <= d; ++a) {
        if (gpow[a - 1] == 0) continue;
        for (int b = 1; a + b <= d; ++b) next[a + b - 1] += gpow[a - 1] * g.coeff(b);
      }
      gpow = std::move(next);
    }
  }
  return from_coeffs(std::move(out));
}

LinComb<Word> psi_series(const PowerSeries& f, const Word& w, const Semigroup& sg) {
  LinComb<Word> out;
  for (const Composition& I : compositions(w.length())) {
    Rat c(1);
    for (int part : I.parts) c *= f.coeff(part);
    if (c == 0) continue;
    out.add(contract_word(I, w, sg), c);
  }
  return out;
}

LinComb<Word> psi_series(const PowerSeries& f, const LinComb<Word>& x, const Semigroup& sg) {
  return x.apply([&](const Word& w) { return psi_series(f, w, sg); });
}

LinComb<Word> hoffman_exp(const Word& w, const Semigroup& sg) {
  return psi_series(PowerSeries::exp_minus_one(w.length()), w, sg);
}

LinComb<Word> hoffman_exp(const LinComb<Word>& x, const Semigroup& sg) {
  return x.apply([&](const Word& w) { return hoffman_exp(w, sg); });
}

LinComb<Word> hoffman_log(const Word& w, const Semigroup& sg) {
  return psi_series(PowerSeries::log_one_plus(w.length()), w, sg);
}

LinComb<Word> hoffman_log(const LinComb<Word>& x, const Semigroup& sg) {
  return x.apply([&](const Word& w) { return hoffman_log(w, sg); });
}

}  // namespace treehopf
