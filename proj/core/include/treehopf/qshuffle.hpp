#pragma once

#include <map>
#include <utility>
#include <vector>

#include "treehopf/lincomb.hpp"
#include "treehopf/semigroup.hpp"
#include "treehopf/word.hpp"

namespace treehopf {

/// A composition of an integer into positive parts.
struct Composition {
  std::vector<int> parts;
  auto operator<=>(const Composition&) const = default;
  int sum() const;
  int block_count() const { return static_cast<int>(parts.size()); }
};

/// All 2^(n-1) compositions of n; n = 0 yields the single empty composition.
std::vector<Composition> compositions(int n);

/// Quasi-shuffle product; the bracket terms use the given semigroup.
LinComb<Word> quasi_shuffle(const Word& u, const Word& v, const Semigroup& sg);
LinComb<Word> quasi_shuffle(const LinComb<Word>& u, const LinComb<Word>& v, const Semigroup& sg);

/// The bracket-free case.
LinComb<Word> shuffle(const Word& u, const Word& v);
LinComb<Word> shuffle(const LinComb<Word>& u, const LinComb<Word>& v);

/// Deconcatenation: all |w|+1 (prefix, suffix) splits.
std::vector<std::pair<Word, Word>> deconcat(const Word& w);

/// Blockwise contraction I[w]; requires sum of I equal to |w|.
Word contract_word(const Composition& I, const Word& w, const Semigroup& sg);

/// Coefficients f_1, f_2, ... of a formal power series with no constant
/// term, exactly given up to a degree bound.
class PowerSeries {
 public:
  PowerSeries() = default;
  static PowerSeries from_coeffs(std::vector<Rat> coeffs);  // coeffs[0] = f_1
  static PowerSeries identity(int degree);                  // f = t
  static PowerSeries exp_minus_one(int degree);             // f_n = 1/n!
  static PowerSeries log_one_plus(int degree);              // f_n = (-1)^(n-1)/n

  int degree() const { return static_cast<int>(coeffs_.size()); }
  /// f_n for n in [1, degree]; throws beyond the bound.
  Rat coeff(int n) const;

  /// Composition of truncated series (g must have no constant term).
  PowerSeries compose(const PowerSeries& g) const;

 private:
  std::vector<Rat> coeffs_;
};

/// psi_f(w) = sum over compositions I of |w| of f_{i_1}...f_{i_m} I[w].
LinComb<Word> psi_series(const PowerSeries& f, const Word& w, const Semigroup& sg);
LinComb<Word> psi_series(const PowerSeries& f, const LinComb<Word>& x, const Semigroup& sg);

/// Hoffman's exponential and logarithm.
LinComb<Word> hoffman_exp(const Word& w, const Semigroup& sg);
LinComb<Word> hoffman_exp(const LinComb<Word>& x, const Semigroup& sg);
LinComb<Word> hoffman_log(const Word& w, const Semigroup& sg);
LinComb<Word> hoffman_log(const LinComb<Word>& x, const Semigroup& sg);

}  // namespace treehopf
