#include "ptmnc/rational.hpp"

#include <cctype>

#include "ptmnc/errors.hpp"

namespace ptmnc {

Rational rational(long num, long den) {
  if (den == 0) throw InputError("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw InputError("parse_rational: empty string");
  std::string s(text);
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' ||
          c == '+' || c == '/')) {
      throw InputError("parse_rational: invalid character in '" + s + "'");
    }
  }
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0) {
    throw InputError("parse_rational: cannot parse '" + s + "'");
  }
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0) {
    throw InputError("parse_rational: zero denominator in '" + s + "'");
  }
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace ptmnc
