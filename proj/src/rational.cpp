#include "workbench/rational.hpp"

#include "workbench/errors.hpp"

namespace workbench {

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal", 0, 0);
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw ParseError("bad rational literal: " + text, 0, 0);
  if (q.get_den() == 0) throw ParseError("zero denominator: " + text, 0, 0);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace workbench
