#include "treehopf/semigroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace treehopf {

SemigroupElement::SemigroupElement(std::string base_letter) {
  if (base_letter.empty()) throw std::invalid_argument("empty base letter");
  letters_.push_back(std::move(base_letter));
}

SemigroupElement SemigroupElement::from_letters(std::vector<std::string> letters) {
  if (letters.empty()) throw std::invalid_argument("semigroup element needs at least one letter");
  for (const auto& l : letters) {
    if (l.empty()) throw std::invalid_argument("empty base letter");
  }
  std::sort(letters.begin(), letters.end());
  SemigroupElement e;
  e.letters_ = std::move(letters);
  return e;
}

const std::string& SemigroupElement::base() const {
  if (!is_base()) throw std::logic_error("compound semigroup element has no single base letter");
  return letters_.front();
}

std::strong_ordering SemigroupElement::operator<=>(const SemigroupElement& o) const {
  if (auto c = letters_.size() <=> o.letters_.size(); c != 0) return c;
  return letters_ <=> o.letters_;
}

Semigroup Semigroup::free() { return Semigroup(Kind::Free); }

Semigroup Semigroup::additive() { return Semigroup(Kind::Additive); }

Semigroup Semigroup::table(std::map<std::pair<std::string, std::string>, std::string> entries) {
  Semigroup s(Kind::Table);
  s.table_ = std::move(entries);
  return s;
}

Semigroup Semigroup::idempotent(std::string letter) {
  std::map<std::pair<std::string, std::string>, std::string> t;
  t[{letter, letter}] = letter;
  return table(std::move(t));
}

namespace {

long parse_numeric_letter(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty letter");
  for (char c : s) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("additive semigroup letter must be a nonnegative integer: " + s);
    }
  }
  return std::strtol(s.c_str(), nullptr, 10);
}

}  // namespace

SemigroupElement Semigroup::mul(const SemigroupElement& a, const SemigroupElement& b) const {
  switch (kind_) {
    case Kind::Free: {
      std::vector<std::string> ls = a.letters();
      ls.insert(ls.end(), b.letters().begin(), b.letters().end());
      return SemigroupElement::from_letters(std::move(ls));
    }
    case Kind::Additive: {
      long sum = parse_numeric_letter(a.base()) + parse_numeric_letter(b.base());
      return SemigroupElement(std::to_string(sum));
    }
    case Kind::Table: {
      const std::string &x = a.base(), &y = b.base();
      auto it = table_.find({std::min(x, y), std::max(x, y)});
      if (it == table_.end()) {
        throw std::invalid_argument("semigroup table has no entry for [" + x + " " + y + "]");
      }
      return SemigroupElement(it->second);
    }
  }
  throw std::logic_error("unreachable");
}

SemigroupElement Semigroup::mul_all(std::span<const SemigroupElement> xs) const {
  if (xs.empty()) throw std::invalid_argument("semigroup product of empty sequence");
  // [i_1 ... i_n] := [i_1 [ ... [i_{n-1} i_n]] ... ], and [i] := i.
  SemigroupElement acc = xs.back();
  for (std::size_t k = xs.size() - 1; k-- > 0;) acc = mul(xs[k], acc);
  return acc;
}

}  // namespace treehopf
