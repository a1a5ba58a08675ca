#include "treehopf/textio.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace treehopf {

namespace {

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  bool at(char c) const { return !done() && text[pos] == c; }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  void expect(char c) {
    if (!at(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }

  std::string ident() {
    const std::size_t start = pos;
    while (!done() && is_ident_char(text[pos])) ++pos;
    if (pos == start) throw ParseError("expected identifier", pos);
    return std::string(text.substr(start, pos - start));
  }

  SemigroupElement letter() {
    if (at('[')) {
      ++pos;
      std::vector<std::string> ls;
      skip_ws();
      ls.push_back(ident());
      while (true) {
        skip_ws();
        if (at(']')) {
          ++pos;
          break;
        }
        ls.push_back(ident());
      }
      return SemigroupElement::from_letters(std::move(ls));
    }
    return SemigroupElement(ident());
  }

  Tree tree() {
    SemigroupElement root = letter();
    std::vector<Tree> children;
    if (at('(')) {
      ++pos;
      skip_ws();
      children.push_back(tree());
      skip_ws();
      while (at(',')) {
        ++pos;
        skip_ws();
        children.push_back(tree());
        skip_ws();
      }
      expect(')');
    }
    return Tree(std::move(root), std::move(children));
  }
};

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// The forest separator "·" is U+00B7, two bytes in UTF-8.
constexpr std::string_view kDot = "·";
constexpr std::string_view kTensor = " ⊗ ";

}  // namespace

Tree parse_tree(std::string_view text) {
  Cursor c{text};
  c.skip_ws();
  if (c.done()) throw ParseError("empty input", 0);
  Tree t = c.tree();
  c.skip_ws();
  if (!c.done()) throw ParseError("trailing input after tree", c.pos);
  return t;
}

Forest parse_forest(std::string_view text) {
  std::string_view body = trimmed(text);
  if (body.empty()) throw ParseError("empty input", 0);
  if (body == "1") return Forest::unit();
  Cursor c{body};
  std::vector<Tree> trees;
  while (true) {
    c.skip_ws();
    if (c.done()) break;
    if (c.text.substr(c.pos).starts_with(kDot)) {
      c.pos += kDot.size();
      continue;
    }
    trees.push_back(c.tree());
  }
  if (trees.empty()) throw ParseError("empty forest body", 0);
  return Forest(std::move(trees));
}

Word parse_word(std::string_view text) {
  std::string_view body = trimmed(text);
  if (body.empty()) throw ParseError("empty input", 0);
  if (body == "e") return Word{};
  Cursor c{body};
  std::vector<SemigroupElement> letters;
  letters.push_back(c.letter());
  while (!c.done()) {
    c.expect('.');
    letters.push_back(c.letter());
  }
  return Word(std::move(letters));
}

SemigroupElement parse_letter(std::string_view text) {
  Cursor c{trimmed(text)};
  if (c.done()) throw ParseError("empty input", 0);
  SemigroupElement e = c.letter();
  if (!c.done()) throw ParseError("trailing input after letter", c.pos);
  return e;
}

namespace {

template <class B, class ParseBasis>
LinComb<B> parse_lincomb(std::string_view text, ParseBasis&& parse_basis) {
  LinComb<B> out;
  std::string_view body = trimmed(text);
  if (body.empty()) throw ParseError("empty input", 0);
  if (body == "0") return out;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t split = body.find(" + ", start);
    std::string_view term =
        split == std::string_view::npos ? body.substr(start) : body.substr(start, split - start);
    term = trimmed(term);
    if (term.empty()) throw ParseError("empty term in linear combination", start);
    std::size_t star = term.find(" * ");
    Rat coeff(1);
    std::string_view basis_text = term;
    if (star != std::string_view::npos) {
      coeff = rat_parse(term.substr(0, star));
      basis_text = trimmed(term.substr(star + 3));
    }
    out.add(parse_basis(basis_text), coeff);
    if (split == std::string_view::npos) break;
    start = split + 3;
  }
  return out;
}

}  // namespace

LinComb<Tree> parse_lincomb_tree(std::string_view text) {
  return parse_lincomb<Tree>(text, [](std::string_view s) { return parse_tree(s); });
}

LinComb<Forest> parse_lincomb_forest(std::string_view text) {
  return parse_lincomb<Forest>(text, [](std::string_view s) { return parse_forest(s); });
}

LinComb<Word> parse_lincomb_word(std::string_view text) {
  return parse_lincomb<Word>(text, [](std::string_view s) { return parse_word(s); });
}

std::map<Tree, Rat> parse_char_file(std::string_view text) {
  std::map<Tree, Rat> values;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t eol = text.find('\n', line_start);
    std::string_view line =
        eol == std::string_view::npos ? text.substr(line_start) : text.substr(line_start, eol - line_start);
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trimmed(line);
    if (!line.empty()) {
      std::size_t eq = line.find('=');
      if (eq == std::string_view::npos) throw ParseError("character line needs '='", line_start);
      Tree t = parse_tree(trimmed(line.substr(0, eq)));
      Rat v = rat_parse(trimmed(line.substr(eq + 1)));
      values[t] = v;
    }
    if (eol == std::string_view::npos) break;
    line_start = eol + 1;
  }
  return values;
}

std::string to_text(const SemigroupElement& e) {
  if (e.is_base()) return e.letters().front();
  std::string out = "[";
  bool first = true;
  for (const auto& l : e.letters()) {
    if (!first) out += ' ';
    first = false;
    out += l;
  }
  out += ']';
  return out;
}

std::string to_text(const Tree& t) {
  std::string out = to_text(t.root());
  if (!t.children().empty()) {
    out += '(';
    bool first = true;
    for (const Tree& c : t.children()) {
      if (!first) out += ',';
      first = false;
      out += to_text(c);
    }
    out += ')';
  }
  return out;
}

std::string to_text(const Forest& f) {
  if (f.is_unit()) return "1";
  std::string out;
  bool first = true;
  for (const Tree& t : f.trees()) {
    if (!first) out += kDot;
    first = false;
    out += to_text(t);
  }
  return out;
}

std::string to_text(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  bool first = true;
  for (const auto& l : w.letters) {
    if (!first) out += '.';
    first = false;
    out += to_text(l);
  }
  return out;
}

std::string to_text(const TensorFF& t) {
  return to_text(t.left) + std::string(kTensor) + to_text(t.right);
}

std::string to_text(const TensorFT& t) {
  return to_text(t.left) + std::string(kTensor) + to_text(t.right);
}

std::string to_text(const TensorWord& t) {
  if (t.letters.empty()) return "e";
  std::string out;
  bool first = true;
  for (const Tree& l : t.letters) {
    if (!first) out += kTensor;
    first = false;
    out += to_text(l);
  }
  return out;
}

std::string to_text(const TensorWW& t) {
  return to_text(t.left) + std::string(kTensor) + to_text(t.right);
}

std::string to_text(const TensorFFF& t) {
  return to_text(t.a) + std::string(kTensor) + to_text(t.b) + std::string(kTensor) + to_text(t.c);
}

std::string to_text(const TensorFFT& t) {
  return to_text(t.a) + std::string(kTensor) + to_text(t.b) + std::string(kTensor) + to_text(t.c);
}

std::string to_text(const TensorWWW& t) {
  return to_text(t.a) + std::string(kTensor) + to_text(t.b) + std::string(kTensor) + to_text(t.c);
}

}  // namespace treehopf
