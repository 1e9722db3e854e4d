#pragma once

#include <optional>
#include <string>
#include <vector>

#include "destab/ideal.hpp"
#include "destab/kempf.hpp"
#include "destab/weights.hpp"

namespace destab {

// Flat limit of V(I) under the one-parameter degeneration x_i -> t^{a_i} x_i
// as t -> 0, computed as the initial ideal for the minimal-weight convention
// and certified flat by Hilbert-function agreement through degree
// flatness_check_bound (FlatnessViolation otherwise).
HomogeneousIdeal flat_limit(const HomogeneousIdeal& I, const WeightVector& a,
                            int flatness_check_bound = 8);

// One-parameter degeneration datum at a fixed embedding exponent.
struct TestDegeneration {
  int exponent = 1;              // r: the embedding uses degree-r coordinates
  HomogeneousIdeal ideal;        // ideal of the scheme in that embedding
  ApartmentPoint point;          // canonical direction
  HomogeneousIdeal central_fiber;  // cached flat limit along the direction
};

TestDegeneration make_test_degeneration(int exponent, const HomogeneousIdeal& I,
                                        const WeightVector& a);

enum class AlmostTrivialVerdict { Fails, Possible };

struct AlmostTrivialReport {
  AlmostTrivialVerdict verdict = AlmostTrivialVerdict::Fails;
  int c = 0;      // (number of minimal entries) - 1
  int dim = 0;    // projective dimension of V(I)
  bool meets = false;  // V(minimal coordinates) intersects V(I)
  std::vector<std::size_t> min_coords;
};

// Necessary condition for a degeneration to be trivial away from codimension
// two: requires c > dim V(I) and V(x_j : a_j minimal) disjoint from V(I);
// Fails when either part is violated.  Degenerate if I contains a linear
// form; CentralSubgroup for central a; EmptyScheme for I = (1).
AlmostTrivialReport almost_trivial_necessary(const HomogeneousIdeal& I, const WeightVector& a);

// Tests whether an ideal in the coordinate ring extended by t (t = last
// variable) is the principal ideal (t^N): the reduced Groebner basis under
// graded lex with t weakest is computed and compared.  Returns N, or nullopt
// when the ideal has a different shape.
std::optional<int> is_t_power_flag_ideal(const std::vector<Polynomial>& generators_in_x_and_t);

struct DFReport {
  int n = 0;  // dim of the scheme; h has degree n, w degree <= n+1
  Rational a0, a1;  // h(k) = a0 k^n + a1 k^{n-1} + ...
  Rational b0, b1;  // w(k) = b0 k^{n+1} + b1 k^n + ...
  Rational df;      // 2 (a1 b0 - a0 b1) / a0
};

// Donaldson-Futaki invariant of the degeneration of V(I) along a.  h samples
// the Hilbert function of the central fiber; w(k) sums the trace-free weight
// <a_c, alpha> over the degree-k standard monomials of the central fiber
// (sign calibrated so destabilizing families are negative and the semistable
// reference families nonnegative).  Both are interpolated exactly past the
// certified stabilization window.  Exact covariance: df(m a) = m df(a),
// df(a + c 1) = df(a); central directions give df = 0.
DFReport df_invariant(const HomogeneousIdeal& I, const WeightVector& a);
DFReport df_invariant(const TestDegeneration& td);

struct SweepDirection {
  WeightVector weights;
  WeightVector canonical;
  AlmostTrivialVerdict verdict = AlmostTrivialVerdict::Fails;
  bool screened = false;  // flagged potentially-trivial; excluded from the minimum
  Rational df;
  std::vector<std::string> central_fiber;  // generator strings
};

struct SweepExponentReport {
  int exponent = 1;
  std::vector<std::string> coordinates;  // labels of the embedding coordinates
  std::vector<std::string> coordinate_names;  // ring variable names used in generators
  std::vector<SweepDirection> directions;
  std::optional<Rational> min_df;
  std::optional<WeightVector> min_df_direction;
  std::optional<DestabilizerReport> hilbert_point_kempf;
  std::string hilbert_point_note;  // diagnostic when the state is unavailable
};

struct SweepReport {
  std::vector<SweepExponentReport> exponents;
  std::string status;  // "Ok" when any direction was evaluated, else "Inconclusive"
};

// Exhaustive small-denominator stability sweep: for each exponent r <= r_max,
// re-embeds V(I) by its degree-r standard monomials, walks every direction
// with entries in [0, D] (skipping central ones), reports the almost-trivial
// screen, flat limit, and DF invariant per direction, the minimum DF over
// unscreened directions, and the Kempf optimizer output on the degree-r
// Hilbert-point state for comparison.  Guarded by the cell budget
// (TooLarge when (D+1)^coords exceeds it).
SweepReport k_stability_sweep(const HomogeneousIdeal& I, int r_max, int denominator_bound);

}  // namespace destab
