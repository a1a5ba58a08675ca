#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace treehopf {

/// One decoration drawn from the commutative semigroup alphabet.
///
/// An element is stored as the sorted multiset of base letters it was built
/// from; two elements are equal iff the multisets coincide. In the free
/// semigroup the bracket product is multiset union; evaluated semigroups
/// (table, additive) always collapse to a single base letter.
class SemigroupElement {
 public:
  explicit SemigroupElement(std::string base_letter);
  static SemigroupElement from_letters(std::vector<std::string> letters);

  const std::vector<std::string>& letters() const { return letters_; }
  bool is_base() const { return letters_.size() == 1; }
  const std::string& base() const;

  // Total order: multiset size first, then lexicographic on sorted letters.
  std::strong_ordering operator<=>(const SemigroupElement& o) const;
  bool operator==(const SemigroupElement& o) const { return letters_ == o.letters_; }

 private:
  SemigroupElement() = default;
  std::vector<std::string> letters_;  // sorted, nonempty
};

/// The commutative semigroup structure on the alphabet: the bracket [i j].
///
/// Three flavours:
///   free     — bracket is multiset union (default; realises every identity
///              of the quasi-shuffle calculus),
///   table    — finite commutative multiplication table on base letters,
///   additive — letters are nonnegative integers and [m n] = m + n (the
///              quadratic-variation alphabet of the Marcus extension).
class Semigroup {
 public:
  enum class Kind { Free, Table, Additive };

  static Semigroup free();
  static Semigroup additive();
  /// Table entries are unordered pairs; commutativity is enforced by lookup.
  static Semigroup table(std::map<std::pair<std::string, std::string>, std::string> entries);
  /// One-letter table with [x x] = x. Used for undecorated computations.
  static Semigroup idempotent(std::string letter);

  Kind kind() const { return kind_; }

  SemigroupElement mul(const SemigroupElement& a, const SemigroupElement& b) const;
  /// [i_1 ... i_n] folded right per the convention [i] = i. Throws on empty input.
  SemigroupElement mul_all(std::span<const SemigroupElement> xs) const;

 private:
  explicit Semigroup(Kind k) : kind_(k) {}
  Kind kind_;
  std::map<std::pair<std::string, std::string>, std::string> table_;
};

}  // namespace treehopf
