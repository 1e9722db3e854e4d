#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace destab {

// Exact rational scalar.  mpq_class canonical form is exactly the contract we
// need: lowest terms, positive denominator, zero as 0/1.  All constructors in
// this codebase go through rat_parse or arithmetic, both of which canonicalize.
using Rational = mpq_class;
using RationalVec = std::vector<Rational>;

// mpq_class has no long long overloads; every conversion from 64-bit integers
// goes through this helper (long is 64-bit on every platform we build for).
inline Rational rat_of(long long v) {
  static_assert(sizeof(long) == sizeof(long long), "long must hold long long");
  return Rational(static_cast<long>(v));
}

// Parses "p", "-p" or "p/q" (arbitrary precision).  Rejects floating point
// notation ('.', 'e', 'E') and zero denominators with InputError.
Rational rat_parse(const std::string& text);

// Canonical rendering: "p" for integers, "p/q" otherwise.  Round-trips
// exactly through rat_parse.
std::string rat_str(const Rational& r);

bool rat_is_integer(const Rational& r);

// Exact integer value; InputError if not an integer or out of long long range.
long long rat_to_ll(const Rational& r);

// Non-authoritative decimal rendering with 12 significant digits.
std::string rat_approx(const Rational& r);

Rational dot(const RationalVec& a, const RationalVec& b);
Rational norm_squared(const RationalVec& v);
bool is_zero_vec(const RationalVec& v);

}  // namespace destab
