#pragma once

#include <optional>
#include <string>

#include "destab/state.hpp"
#include "destab/weights.hpp"

namespace destab {

// Minimum-norm point of the convex hull of the centered characters
// chi - (d/(N+1))*(1,..,1), together with an exact certificate.
struct MinNormResult {
  RationalVec q;
  Rational normsq;
  std::vector<std::size_t> support;  // indices into the state's characters
  RationalVec combination;           // positive, sums to 1, indexed like support

  bool is_zero() const { return normsq == 0; }
};

// Wolfe's minimum-norm-point algorithm over exact rationals.  Deterministic:
// ties in the entering point are broken by lowest index and the lowest-index
// blocking point leaves the corral.  The returned certificate satisfies
// <q, chi_c> >= <q, q> for every centered character chi_c.
//
// The point q is unique but many simplices of characters carry it, so the
// (support, combination) pair is rewritten to a canonical certificate: the
// first subset of the active characters {i : <q, chi_c,i> = <q, q>} — ordered
// by cardinality, then lexicographically by index tuple — that is affinely
// independent and expresses q with strictly positive coefficients.  Both
// solvers below emit this same certificate, so on common inputs their outputs
// are identical field by field.  (Past an internal subset budget far beyond
// the oracle's caps, the solver's own valid certificate is kept.)
MinNormResult min_norm_point(const StateSet& S, long long degree);

// Independent face-enumeration oracle: projects the origin onto the affine
// hull of every affinely independent subset, keeps projections lying in the
// relative interior of their simplex, and verifies the global optimality
// inequality.  Caps: at most 12 characters and ambient dimension at most 8
// (TooLarge beyond).  Emits the same canonical certificate as min_norm_point.
MinNormResult min_norm_point_oracle(const StateSet& S, long long degree);

enum class StabilityStatus { Stable, Unstable };

struct DestabilizerReport {
  StabilityStatus status = StabilityStatus::Stable;
  std::optional<ApartmentPoint> direction;   // present when Unstable
  std::optional<NormalizedValue> nu_min;     // present when Unstable; negative
  MinNormResult certificate;
  // The uniqueness certificate covers diagonal (standard-apartment)
  // directions; see the report consumers for the exhaustive grid check.
  std::string scope = "standard-apartment";
};

// Unique maximally destabilizing direction of a state: the minimum-norm
// point of the centered hull, cleared to a primitive integer vector and
// canonicalized.  q = 0 reports Stable.  Internally re-verifies that the
// normalized weight at the direction equals -sqrt(<q,q>) exactly.
DestabilizerReport optimal_destabilizer(const StateSet& S, long long degree);

}  // namespace destab
