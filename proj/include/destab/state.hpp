#pragma once

#include <optional>
#include <string>
#include <vector>

#include "destab/ideal.hpp"
#include "destab/weights.hpp"

namespace destab {

// Finite set of integer torus characters attached to a geometric datum.
// Characters are deduplicated and share a common length; labels, when
// present, run parallel to characters and name their origin.
struct StateSet {
  std::vector<std::vector<long long>> characters;
  std::vector<std::string> labels;  // empty, or one per character

  std::size_t ambient() const { return characters.empty() ? 0 : characters.front().size(); }
};

StateSet make_state(std::vector<std::vector<long long>> characters,
                    std::vector<std::string> labels = {});

// Characters {e_i : x_i != 0} of a projective point.  ZeroVector if all
// coordinates vanish.
StateSet state_of_point(const RationalVec& coords);

// Exponent vectors of the monomials of a defining equation.  ZeroPolynomial
// on the zero polynomial.
StateSet state_of_hypersurface(const Polynomial& f, const std::vector<std::string>& vars);

// Characters of the degree-d graded piece of I viewed as a point of the
// Grassmannian in its Pluecker embedding: for every dim(I_d)-subset B of the
// degree-d monomials with nonvanishing Pluecker minor, the sum of the
// exponent vectors over B.  Minors are evaluated exactly; the number of
// candidate subsets is guarded (default 1e6, see DESTAB_MAX_CELLS).
// DegenerateDegree unless 0 < dim I_d < dim R_d.
StateSet state_of_hilbert_point(const HomogeneousIdeal& I, int d);

// max over characters of -<a, chi> for an arbitrary rational apartment point;
// the piecewise-linear extension used by the convexity checks.
Rational mu_value(const StateSet& S, const RationalVec& a);

struct WeightReport {
  Rational mu;                          // max over characters of -<a, chi>
  std::optional<NormalizedValue> nu;    // absent exactly when a is central
  std::vector<std::size_t> argmax;      // indices into S.characters
};

// Hilbert-Mumford weight of the state against an integer weight vector.
// nu is computed on the trace-free projection of a (making it invariant
// under central shifts and positive scalings); destabilizing states have
// nu < 0.
WeightReport mu_report(const StateSet& S, const WeightVector& a);

// Membership in the locus where the minimal-weight coordinates already cut
// the scheme out: true iff V(I + (x_j : a_j minimal)) is empty.
// EmptyScheme is propagated if I = (1).
bool s_prime_membership(const HomogeneousIdeal& I, const WeightVector& a);

// Support semicontinuity of a one-parameter coordinate family: the support
// at s = 0 must be contained in the generic support.  Entries are univariate
// polynomials in s.  ZeroVector if the family vanishes at s = 0 or
// identically.  Always true on valid input; exposed for the test suite.
bool support_semicontinuity_check(const std::vector<Polynomial>& family);

// True iff I contains no linear form, i.e. the embedding uses a complete
// linear system.
bool is_nondegenerate(const HomogeneousIdeal& I);

}  // namespace destab
