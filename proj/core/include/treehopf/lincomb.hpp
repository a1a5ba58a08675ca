#pragma once

#include <map>
#include <utility>

#include "treehopf/rational.hpp"

namespace treehopf {

/// A finite formal linear combination of canonical basis objects with exact
/// rational coefficients. Zero coefficients are never stored; iteration order
/// is the basis order, so serialisation is deterministic.
template <class B>
class LinComb {
 public:
  using Terms = std::map<B, Rat>;

  LinComb() = default;
  explicit LinComb(B b, Rat c = Rat(1)) { add(std::move(b), std::move(c)); }

  static LinComb zero() { return LinComb(); }

  void add(const B& b, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Rat coeff(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  // Ref-qualified so that iterating the terms of a temporary keeps the map
  // alive for the duration of the loop.
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
  }
  LinComb& operator*=(const Rat& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [b, c] : terms_) c *= s;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Rat& s, LinComb a) { return a *= s; }
  friend LinComb operator-(LinComb a) { return a *= Rat(-1); }

  bool operator==(const LinComb& o) const { return terms_ == o.terms_; }

  /// Applies a linear map given on basis elements: f(B) -> LinComb<C>.
  template <class F>
  auto apply(F&& f) const {
    using Out = decltype(f(std::declval<const B&>()));
    Out out;
    for (const auto& [b, c] : terms_) {
      Out img = f(b);
      img *= c;
      out += img;
    }
    return out;
  }

  /// Applies a basis-to-basis map: f(B) -> C.
  template <class F>
  auto map_basis(F&& f) const {
    using C = decltype(f(std::declval<const B&>()));
    LinComb<C> out;
    for (const auto& [b, c] : terms_) out.add(f(b), c);
    return out;
  }

 private:
  Terms terms_;
};

/// Bilinear extension of a product on basis elements.
template <class A, class B, class F>
auto bilinear(const LinComb<A>& x, const LinComb<B>& y, F&& f) {
  using Out = decltype(f(std::declval<const A&>(), std::declval<const B&>()));
  Out out;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      Out img = f(a, b);
      img *= ca * cb;
      out += img;
    }
  }
  return out;
}

}  // namespace treehopf
