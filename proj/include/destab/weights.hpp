#pragma once

#include <cstddef>
#include <vector>

#include "destab/ideal.hpp"
#include "destab/rational.hpp"

namespace destab {

// Integer one-parameter-subgroup weights on a named coordinate basis.
using WeightVector = std::vector<long long>;

bool is_central(const WeightVector& a);  // constant vector (acts by scaling only)

// Canonical representative of the ray-plus-shift equivalence class of a
// weight vector: minimum entry 0, entry gcd 1.  Two weight vectors present
// the same degeneration ray exactly when their canonical forms agree.
struct ApartmentPoint {
  WeightVector canonical;

  bool operator==(const ApartmentPoint& rhs) const = default;
};

// CentralSubgroup if a is constant (no direction to canonicalize).
ApartmentPoint canonicalize(const WeightVector& a);

bool are_T_equivalent(const WeightVector& a, const WeightVector& b);

// Squared norm of the trace-free part: |a - mean(a)*(1,..,1)|^2, exact.
Rational sl_norm_squared(const WeightVector& a);

// Exact value mu / sqrt(normsq) represented without radicals.
struct NormalizedValue {
  Rational numerator;  // mu
  Rational normsq;     // > 0

  bool operator==(const NormalizedValue& rhs) const { return cmp_normalized(*this, rhs) == 0; }
  friend int cmp_normalized(const NormalizedValue& a, const NormalizedValue& b);

  std::string str() const;     // "mu/sqrt(normsq)" with exact fields
  double approx() const;
};

// Three-way comparison agreeing with the real numbers mu/sqrt(normsq).
int cmp_normalized(const NormalizedValue& a, const NormalizedValue& b);

// Weight vector induced on the degree r*l monomial coordinates by a weight
// vector on the degree-r monomial coordinates: the weight of a degree-(r*l)
// monomial is the minimum over its factorizations into l degree-r monomials
// of the sum of the factor weights.  Both index sets use the shared
// graded-lex-descending enumeration (monomials_of_degree).
WeightVector lift_exponent(const WeightVector& a, std::size_t nvars, int r, int l);

// Convenience overload matching the operation catalog: the ambient variable
// count comes from I and r is inferred from |a|.
WeightVector lift_exponent(const WeightVector& a, int l, const HomogeneousIdeal& I);

// Independent oracle for lift_exponent: exhaustively enumerates every
// factorization of each target monomial into l degree-r factors (no dynamic
// programming) and takes the minimum.  Guarded by the cell budget.
WeightVector lift_exponent_bruteforce(const WeightVector& a, std::size_t nvars, int r, int l);

}  // namespace destab
