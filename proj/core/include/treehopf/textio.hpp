#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "treehopf/lincomb.hpp"
#include "treehopf/tensors.hpp"
#include "treehopf/tree.hpp"
#include "treehopf/word.hpp"

namespace treehopf {

// Interchange text formats (CLI and test fixtures):
//   tree    := letter | letter "(" tree ("," tree)* ")"
//   letter  := ident | "[" ident (" " ident)* "]"      ident := [A-Za-z0-9_]+
//   forest  := "1" | tree (("·" | whitespace) tree)*
//   word    := "e" | letter ("." letter)*
//   lincomb := term (" + " term)*                      term := rat " * " basis
// "1" in forest position always denotes the empty forest, and "e" in word
// position the empty word.

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Tree parse_tree(std::string_view text);
Forest parse_forest(std::string_view text);
Word parse_word(std::string_view text);
SemigroupElement parse_letter(std::string_view text);

LinComb<Tree> parse_lincomb_tree(std::string_view text);
LinComb<Forest> parse_lincomb_forest(std::string_view text);
LinComb<Word> parse_lincomb_word(std::string_view text);

/// Character files: one "tree-text = p/q" per line; '#' starts a comment.
std::map<Tree, Rat> parse_char_file(std::string_view text);

std::string to_text(const SemigroupElement& e);
std::string to_text(const Tree& t);
std::string to_text(const Forest& f);
std::string to_text(const Word& w);
std::string to_text(const TensorFF& t);
std::string to_text(const TensorFT& t);
std::string to_text(const TensorWord& t);
std::string to_text(const TensorWW& t);
std::string to_text(const TensorFFF& t);
std::string to_text(const TensorFFT& t);
std::string to_text(const TensorWWW& t);

template <class B>
std::string to_text(const LinComb<B>& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : x.terms()) {
    if (!first) out += " + ";
    first = false;
    out += rat_str(c);
    out += " * ";
    out += to_text(b);
  }
  return out;
}

}  // namespace treehopf
