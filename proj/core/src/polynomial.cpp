#include "treehopf/polynomial.hpp"

#include <cctype>
#include <stdexcept>

namespace treehopf {

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p(nvars);
  p.add_term(Monomial(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

Poly Poly::variable(int nvars, int index) {
  Poly p(nvars);
  Monomial m(static_cast<std::size_t>(nvars), 0);
  m[static_cast<std::size_t>(index)] = 1;
  p.add_term(m, Rat(1));
  return p;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly p = *this;
  p += o;
  return p;
}

Poly Poly::operator-(const Poly& o) const {
  Poly p = *this;
  p -= o;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  Poly p(nvars_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m = m1;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += m2[i];
      p.add_term(m, c1 * c2);
    }
  }
  return p;
}

Poly Poly::operator*(const Rat& s) const {
  Poly p(nvars_);
  if (s == 0) return p;
  for (const auto& [m, c] : terms_) p.add_term(m, c * s);
  return p;
}

Poly Poly::derivative(int var) const {
  Poly p(nvars_);
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [m, c] : terms_) {
    if (m[v] == 0) continue;
    Monomial d = m;
    --d[v];
    p.add_term(d, c * Rat(static_cast<long>(m[v])));
  }
  return p;
}

Poly Poly::shift(int var, unsigned power) const {
  Poly p(nvars_);
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [m, c] : terms_) {
    Monomial s = m;
    s[v] += power;
    p.add_term(s, c);
  }
  return p;
}

std::map<unsigned, Rat> Poly::eval_leaving_last(const std::vector<Rat>& point) const {
  std::map<unsigned, Rat> out;
  for (const auto& [m, c] : terms_) {
    Rat v = c;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (unsigned k = 0; k < m[i]; ++k) v *= point[i];
    }
    unsigned h_power = m.back();
    auto [it, inserted] = out.try_emplace(h_power, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

PolyVectorField PolyVectorField::zero(int dimension) {
  PolyVectorField f;
  f.dimension = dimension;
  f.components.assign(static_cast<std::size_t>(dimension), Poly(dimension + 1));
  return f;
}

namespace {

struct FieldCursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  Rat number() {
    const std::size_t start = pos;
    if (!done() && (peek() == '+' || peek() == '-')) ++pos;
    while (!done() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start])))) {
      throw std::invalid_argument("field spec: expected number");
    }
    return rat_parse(text.substr(start, pos - start));
  }

  unsigned integer() {
    const std::size_t start = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (pos == start) throw std::invalid_argument("field spec: expected integer");
    return static_cast<unsigned>(std::stoul(std::string(text.substr(start, pos - start))));
  }
};

Poly parse_component(std::string_view text, int dimension) {
  Poly p(dimension + 1);
  FieldCursor c{text};
  c.skip_ws();
  if (c.done()) throw std::invalid_argument("field spec: empty component");
  bool first = true;
  while (true) {
    c.skip_ws();
    if (c.done()) break;
    Rat sign(1);
    if (c.peek() == '+' || c.peek() == '-') {
      if (c.peek() == '-') sign = -1;
      ++c.pos;
      c.skip_ws();
    } else if (!first) {
      throw std::invalid_argument("field spec: expected '+' or '-'");
    }
    first = false;
    // term := [rat] ('*'? var ('^' int)?)*
    Rat coeff(1);
    Poly::Monomial m(static_cast<std::size_t>(dimension + 1), 0);
    bool saw_anything = false;
    if (!c.done() && (std::isdigit(static_cast<unsigned char>(c.peek())))) {
      coeff = c.number();
      saw_anything = true;
    }
    while (true) {
      c.skip_ws();
      if (!c.done() && c.peek() == '*') {
        ++c.pos;
        c.skip_ws();
      }
      if (c.done() || c.peek() != 'x') break;
      ++c.pos;
      unsigned index = c.integer();
      if (index < 1 || static_cast<int>(index) > dimension) {
        throw std::invalid_argument("field spec: variable index out of range");
      }
      unsigned power = 1;
      if (!c.done() && c.peek() == '^') {
        ++c.pos;
        power = c.integer();
      }
      m[index - 1] += power;
      saw_anything = true;
    }
    if (!saw_anything) throw std::invalid_argument("field spec: empty term");
    p.add_term(m, sign * coeff);
  }
  return p;
}

}  // namespace

PolyVectorField parse_field(std::string_view text, int dimension) {
  PolyVectorField f = PolyVectorField::zero(dimension);
  std::size_t start = 0;
  int comp = 0;
  while (start <= text.size()) {
    std::size_t split = text.find(';', start);
    std::string_view part =
        split == std::string_view::npos ? text.substr(start) : text.substr(start, split - start);
    if (comp >= dimension) throw std::invalid_argument("field spec: too many components");
    f.components[static_cast<std::size_t>(comp)] = parse_component(part, dimension);
    ++comp;
    if (split == std::string_view::npos) break;
    start = split + 1;
  }
  if (comp != dimension) throw std::invalid_argument("field spec: too few components");
  return f;
}

}  // namespace treehopf
