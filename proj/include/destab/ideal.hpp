#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "destab/polynomial.hpp"

namespace destab {

// Homogeneous ideal in a named polynomial ring.  Generators are validated to
// be homogeneous and nonzero.  Reduced Groebner bases are cached per order;
// the cache is guarded by a mutex so const operations are safe to call from
// several threads at once.
class HomogeneousIdeal {
 public:
  HomogeneousIdeal(std::vector<std::string> variables, std::vector<Polynomial> generators);

  HomogeneousIdeal(const HomogeneousIdeal& other);
  HomogeneousIdeal& operator=(const HomogeneousIdeal& other);
  HomogeneousIdeal(HomogeneousIdeal&&) noexcept = default;
  HomogeneousIdeal& operator=(HomogeneousIdeal&&) noexcept = default;

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }

  // Reduced Groebner basis under the given order: unique, monic, fully
  // inter-reduced, sorted by leading monomial.  Computed once per order and
  // cached.  Weighted orders require homogeneous input, which the type
  // already guarantees.
  const std::vector<Polynomial>& groebner_basis(
      const MonomialOrder& order = MonomialOrder::degrevlex()) const;

  bool contains(const Polynomial& f) const;
  bool is_unit() const;  // contains a nonzero constant

  // Sum of the total degrees of the generators; used to seed enumeration
  // windows.
  int generator_degree_sum() const;

 private:
  std::vector<std::string> vars_;
  std::vector<Polynomial> gens_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::string, std::shared_ptr<const std::vector<Polynomial>>> gb_cache_;
};

// --- Groebner engine (free functions; no caching) -------------------------

// Reduced Groebner basis of arbitrary generators.  Well-ordered bases
// (deglex/degrevlex, with or without elimination blocks) accept any input;
// weighted orders require every generator to be homogeneous.
std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens, const MonomialOrder& order);

// Full normal form (every term reduced) against a basis under the order.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

// Unique reduced row echelon form of a matrix (re-exported here for the
// operation catalog; implemented on ExactMatrix).
// See ExactMatrix::reduced_echelon in matrix.hpp.

// --- Initial ideals --------------------------------------------------------

// Terms of f with minimal weight <a, exponent>; keeps ties.  This is the
// t -> 0 limit of f(t^{a_0} x_0, ..., t^{a_N} x_N) after clearing the common
// power of t.
Polynomial initial_form(const Polynomial& f, const std::vector<long long>& a);

// Initial ideal of I for the weight vector a under the minimal-weight
// convention.  Generated by the initial forms of a Groebner basis of I under
// the order "weight -a refined by degrevlex"; may be non-monomial.
HomogeneousIdeal initial_ideal(const HomogeneousIdeal& I, const std::vector<long long>& a);

// --- Hilbert data -----------------------------------------------------------

// dim_k (R/I)_k via standard monomial counting: monomials of degree k not
// divisible by any leading term of the degrevlex Groebner basis.
long long hilbert_function(const HomogeneousIdeal& I, int k);

struct HilbertPolynomial {
  // coeffs[j] multiplies k^j; empty for the empty scheme (polynomial 0).
  RationalVec coeffs;
  int dim = -1;           // degree of the polynomial; -1 when empty
  int window_start = 0;   // first degree of the certified agreement window

  Rational eval(long long k) const;
};

// Exact interpolation of the eventual polynomial of k -> hilbert_function(I,k).
// Samples a window starting at (sum of generator degrees) + (variable count),
// fits, and certifies against two further degrees; the window advances on
// mismatch and NotStabilized is raised if agreement never certifies.
// Precondition: I != (1) (EmptyScheme otherwise).
HilbertPolynomial hilbert_polynomial(const HomogeneousIdeal& I);

// True iff V(I) is empty in projective space: the leading-term ideal contains
// a power of every variable.
bool is_empty_projective(const HomogeneousIdeal& I);

// Degree of the Hilbert polynomial (-1 for empty).  EmptyScheme if I = (1).
int projective_dimension(const HomogeneousIdeal& I);

// --- Ideal combinations -----------------------------------------------------

HomogeneousIdeal ideal_sum(const HomogeneousIdeal& I, std::vector<Polynomial> extra);
bool ideal_equal(const HomogeneousIdeal& I, const HomogeneousIdeal& J);

// --- Re-embedding ------------------------------------------------------------

struct VeroneseEmbedding {
  // Standard monomials of degree r (the coordinate labels of the re-embedded
  // space), in the shared graded-lex-descending enumeration.
  std::vector<Monomial> basis;
  // Ideal of the re-embedded scheme in variables Y0..Y_{m-1}; computed by
  // Groebner elimination of the graph ideal.
  HomogeneousIdeal ideal;
};

// Embedding of V(I) by the complete degree-r system: coordinates are the
// degree-r standard monomials of I, the ideal is the kernel of
// k[Y] -> k[x]/I, Y_j -> (j-th standard monomial).
VeroneseEmbedding veronese_embedding(const HomogeneousIdeal& I, int r);

}  // namespace destab
