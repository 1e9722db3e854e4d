#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace destab {

// Exponent vector of a monomial in a fixed polynomial ring.
struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}
  static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }

  std::size_t nvars() const { return exps.size(); }
  int degree() const;
  bool is_one() const { return degree() == 0; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& rhs) const;
  // Quotient this / rhs; caller guarantees rhs.divides(*this).
  Monomial divided_by(const Monomial& rhs) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime_with(const Monomial& rhs) const;

  bool operator==(const Monomial& rhs) const = default;
  // Arbitrary strict ordering for use as a container key (graded lex).
  bool operator<(const Monomial& rhs) const;
};

// Total multiplicative monomial order.  The graded bases are well-orders and
// work for arbitrary ideals; a weight key on top is only used for homogeneous
// input (see groebner_basis), where comparisons stay within finite degree
// slices.  elim_first > 0 selects the block order that eliminates the first
// elim_first variables (graded revlex on the block, then graded revlex on the
// rest); such orders are used for re-embedding computations.
struct MonomialOrder {
  enum class Base { DegRevLex, DegLex };

  Base base = Base::DegRevLex;
  std::vector<long long> weight;  // empty: none.  Primary key, larger first.
  std::size_t elim_first = 0;

  static MonomialOrder degrevlex() { return {}; }
  static MonomialOrder deglex() { return {Base::DegLex, {}, 0}; }
  static MonomialOrder weighted(std::vector<long long> w) {
    return {Base::DegRevLex, std::move(w), 0};
  }
  static MonomialOrder eliminate(std::size_t first_block) {
    return {Base::DegRevLex, {}, first_block};
  }

  // Stable identifier used as the Groebner cache key.
  std::string key() const;
};

// Three-way comparison under the order: negative when a is smaller, 0 when
// equal, positive when a is larger ("larger" = leading).
int cmp(const Monomial& a, const Monomial& b, const MonomialOrder& order);

// All monomials of total degree d in nvars variables, enumerated in graded
// lexicographic descending order (variable 0 strongest).  This is the single
// coordinate bijection shared by the library, the CLI and the file formats:
// for degree 2 in (x, y, z) it yields x^2, x*y, x*z, y^2, y*z, z^2.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d);

// Number of monomials of total degree d in nvars variables (exact; throws
// TooLarge if the count does not fit in unsigned long long).
unsigned long long monomial_count(std::size_t nvars, int d);

}  // namespace destab
