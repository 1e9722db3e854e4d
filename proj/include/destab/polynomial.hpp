#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "destab/monomial.hpp"
#include "destab/rational.hpp"

namespace destab {

struct Term {
  Monomial mono;
  Rational coeff;

  bool operator==(const Term& rhs) const = default;
};

// Immutable multivariate polynomial with exact rational coefficients.
// Terms are kept merged, free of zero coefficients, and sorted in graded
// lexicographic descending order (the shared coordinate bijection), which
// doubles as the canonical printing order.
class Polynomial {
 public:
  Polynomial() = default;  // zero polynomial in 0 variables
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);
  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(Monomial m, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Monomial& m, const Rational& c) const;
  Polynomial pow(int e) const;

  bool operator==(const Polynomial& rhs) const = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

// Parses an exact polynomial expression over the named variables.  Supported
// syntax: + - * ^ ( ), integer and "p/q" literals.  Floating point notation
// is rejected with InputError; unknown identifiers name the offending token.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars);

std::string monomial_str(const Monomial& m, const std::vector<std::string>& vars);
std::string polynomial_str(const Polynomial& p, const std::vector<std::string>& vars);

}  // namespace destab
