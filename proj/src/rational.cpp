#include "destab/rational.hpp"

#include <cctype>
#include <cstdio>
#include <string>

#include "destab/errors.hpp"

namespace destab {

Rational rat_parse(const std::string& text) {
  if (text.empty()) throw InputError("empty rational literal");
  for (char c : text) {
    if (c == '.' || c == 'e' || c == 'E') {
      throw InputError("floating-point literal '" + text +
                       "' is not accepted; use an exact fraction like p/q");
    }
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/')) {
      throw InputError("invalid character in rational literal '" + text + "'");
    }
  }
  mpq_class value;
  if (value.set_str(text, 10) != 0) {
    throw InputError("cannot parse rational literal '" + text + "'");
  }
  if (value.get_den() == 0) {
    throw InputError("zero denominator in rational literal '" + text + "'");
  }
  value.canonicalize();
  return value;
}

std::string rat_str(const Rational& value) {
  mpq_class canon(value);
  canon.canonicalize();
  if (canon.get_den() == 1) return canon.get_num().get_str();
  return canon.get_num().get_str() + "/" + canon.get_den().get_str();
}

bool rat_is_integer(const Rational& value) {
  mpq_class canon(value);
  canon.canonicalize();
  return canon.get_den() == 1;
}

long long rat_to_ll(const Rational& value) {
  mpq_class canon(value);
  canon.canonicalize();
  if (canon.get_den() != 1 || !canon.get_num().fits_slong_p()) {
    throw InputError("value " + rat_str(value) + " is not a machine integer");
  }
  return canon.get_num().get_si();
}

std::string rat_approx(const Rational& value) {
  mpf_class wide(0, 256);
  wide = mpq_class(value);
  double d = wide.get_d();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", d);
  return buf;
}

Rational dot(const RationalVec& a, const RationalVec& b) {
  if (a.size() != b.size()) throw InputError("dot product of vectors with different lengths");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Rational norm_squared(const RationalVec& a) { return dot(a, a); }

bool is_zero_vec(const RationalVec& a) {
  for (const Rational& x : a)
    if (x != 0) return false;
  return true;
}

}  // namespace destab
