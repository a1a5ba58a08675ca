#pragma once

#include <map>
#include <string_view>
#include <vector>

#include "treehopf/rational.hpp"

namespace treehopf {

/// Multivariate polynomial with exact rational coefficients.
///
/// A field over d space variables is represented with d+1 polynomial
/// variables: x_0 ... x_{d-1} and one reserved series variable h at index d,
/// used by the B-series machinery to carry step-size powers through the
/// substitution law. Plain input fields have h-degree zero.
class Poly {
 public:
  using Monomial = std::vector<unsigned>;  // exponent per variable

  explicit Poly(int nvars) : nvars_(nvars) {}
  static Poly constant(int nvars, const Rat& c);
  static Poly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rat>& terms() const& { return terms_; }
  std::map<Monomial, Rat> terms() && { return std::move(terms_); }

  void add_term(const Monomial& m, const Rat& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator*(const Rat& s) const;
  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  Poly derivative(int var) const;
  /// Multiplies by the var-th variable raised to the given power.
  Poly shift(int var, unsigned power) const;

  /// Substitutes x_i = point[i] for i < point.size(), leaving the remaining
  /// variables (in B-series use: h) symbolic; returns coefficients indexed
  /// by the exponent of the last variable.
  std::map<unsigned, Rat> eval_leaving_last(const std::vector<Rat>& point) const;

 private:
  int nvars_;
  std::map<Monomial, Rat> terms_;
};

/// A vector field on Q^d with polynomial components (plus the reserved h).
struct PolyVectorField {
  int dimension = 0;
  std::vector<Poly> components;  // size == dimension, each with dimension+1 vars

  static PolyVectorField zero(int dimension);
  bool operator==(const PolyVectorField& o) const = default;
};

/// Parses "coeff*x1^a*x2^b + ..." per component, components separated by
/// ';'. Variables are x1..xd; coefficients are rationals; '*' and '^' are
/// literal. Example (1-d): "x1^2". Example (2-d): "x2^2; x1*x2".
PolyVectorField parse_field(std::string_view text, int dimension);

}  // namespace treehopf
