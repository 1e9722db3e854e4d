#pragma once

#include <cstddef>
#include <vector>

#include "destab/matrix.hpp"
#include "destab/rational.hpp"
#include "destab/weights.hpp"

namespace destab {

// Proper nonzero linear subspace, stored as the unique reduced row echelon
// basis of its row space.
struct Subspace {
  ExactMatrix basis;  // RREF rows

  std::size_t ambient() const { return basis.cols(); }
  std::size_t rank() const { return basis.rows(); }

  // Echelonizes the given spanning rows; InputError if the span is zero or
  // the whole space.
  static Subspace span_of_rows(const ExactMatrix& rows);

  bool operator==(const Subspace& rhs) const = default;
};

// Strictly increasing chain of subspaces.
struct Flag {
  std::vector<Subspace> subspaces;

  bool operator==(const Flag& rhs) const = default;
};

// Rational point of the building: a flag plus positive gaps summing to 1.
struct BuildingPoint {
  Flag flag;
  RationalVec gaps;

  bool operator==(const BuildingPoint& rhs) const = default;
};

// One-parameter subgroup presented by integer weights and an invertible
// frame: lambda(t) = frame * diag(t^{a_i}) * frame^{-1}.
struct FramedOnePS {
  WeightVector weights;
  ExactMatrix frame;
};

// The barycentric point of the building determined by the subgroup: with the
// distinct weights sorted w_1 > ... > w_{k+1}, the j-th flag member is the
// frame image of the eigencoordinates of weight >= w_j (j <= k) and
// gap_j = (w_j - w_{j+1}) / (w_1 - w_{k+1}).  Invariant under positive
// powers, central shifts, and conjugation by limit-compatible elements.
// CentralSubgroup on constant weights; SingularMatrix on a singular frame.
BuildingPoint building_point_of(const FramedOnePS& lambda);

// True iff lambda(t) g lambda(t)^{-1} has a limit as t -> 0: in frame
// coordinates every entry g'_{ij} with a_i < a_j must vanish.
// SingularMatrix if g (or the frame) is singular.
bool parabolic_contains(const FramedOnePS& lambda, const ExactMatrix& g);

// Certifies the frame-twist identity behind conjugation invariance: the
// twisted element p(t) (entry (i,j) scaled by t^{a_i - a_j}) is polynomial in
// t with invertible value at t = 0, and the gauge g(t) = p * p(t)^{-1}
// satisfies the two-variable cocycle identity
//   g(s t) * lambda(s) = (p * lambda(s) * p^{-1}) * g(t)
// with g(0) invertible and g(1) = id, all as exact Laurent-polynomial
// matrices.  Always true on valid input; NotInParabolic if p is not
// limit-compatible with lambda.
bool verify_frame_twist(const FramedOnePS& lambda, const ExactMatrix& p);

bool same_building_point(const BuildingPoint& x, const BuildingPoint& y);

// All chains of nonempty proper subsets of {0..N-1}: the coordinate
// simplices of the standard apartment.  Each chain lists its subsets as
// sorted index vectors, smallest subset first.  TooLarge for N > 12.
std::vector<std::vector<std::vector<int>>> enumerate_coordinate_simplices(int N);

// Expected number of such chains (sum over k of the surjection counts);
// exact cross-check for the enumeration.
unsigned long long coordinate_simplex_count(int N);

}  // namespace destab
