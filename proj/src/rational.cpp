#include "gkz/rational.hpp"

namespace gkz {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw Error(Errc::BadInput, "empty rational literal");
  try {
    Rational q(s);  // accepts "p" and "p/q"
    if (q.get_den() == 0) throw Error(Errc::BadInput, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error(Errc::BadInput, "malformed rational literal '" + s + "'");
  }
}

std::string rational_to_string(const Rational& q) {
  return q.get_str();  // lowest terms; "/den" omitted when den == 1
}

}  // namespace gkz
