#include "treehopf/rational.hpp"

#include <stdexcept>

namespace treehopf {

Rat rat_parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::string s(text);
  for (char c : s) {
    if (!(c == '-' || c == '/' || (c >= '0' && c <= '9'))) {
      throw std::invalid_argument("bad rational: " + s);
    }
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& r) {
  return r.get_str();
}

Int int_factorial(unsigned n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace treehopf
