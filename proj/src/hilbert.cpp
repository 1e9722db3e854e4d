#include <algorithm>

#include "destab/errors.hpp"
#include "destab/ideal.hpp"
#include "destab/matrix.hpp"

namespace destab {

long long hilbert_function(const HomogeneousIdeal& I, int k) {
  if (k < 0) return 0;
  const auto& gb = I.groebner_basis();
  std::vector<Monomial> lts;
  lts.reserve(gb.size());
  for (const Polynomial& g : gb) {
    const Term* best = nullptr;
    for (const Term& t : g.terms()) {
      if (best == nullptr || cmp(t.mono, best->mono, MonomialOrder::degrevlex()) > 0) best = &t;
    }
    lts.push_back(best->mono);
  }
  long long count = 0;
  for (const Monomial& m : monomials_of_degree(I.nvars(), k)) {
    bool standard = true;
    for (const Monomial& lt : lts) {
      if (lt.divides(m)) {
        standard = false;
        break;
      }
    }
    if (standard) ++count;
  }
  return count;
}

Rational HilbertPolynomial::eval(long long k) const {
  Rational acc = 0;
  for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * rat_of(k) + coeffs[j];
  return acc;
}

namespace {

// Exact polynomial of degree <= points-1 through (xs[i], ys[i]); solved via a
// Vandermonde system.
RationalVec fit_polynomial(const std::vector<long long>& xs, const std::vector<long long>& ys) {
  std::size_t n = xs.size();
  ExactMatrix V(n, n);
  RationalVec rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational p = 1;
    for (std::size_t j = 0; j < n; ++j) {
      V.at(i, j) = p;
      p *= rat_of(xs[i]);
    }
    rhs[i] = rat_of(ys[i]);
  }
  auto solution = V.solve(rhs);
  if (!solution) throw InternalError("Vandermonde system with distinct nodes must be solvable");
  RationalVec coeffs = *solution;
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

}  // namespace

HilbertPolynomial hilbert_polynomial(const HomogeneousIdeal& I) {
  if (I.is_unit()) throw EmptyScheme("the unit ideal cuts out the empty scheme");
  const int n = static_cast<int>(I.nvars());
  long long k0 = I.generator_degree_sum() + n;
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<long long> xs, ys;
    for (int t = 0; t <= n; ++t) {
      xs.push_back(k0 + t);
      ys.push_back(hilbert_function(I, static_cast<int>(k0) + t));
    }
    RationalVec coeffs = fit_polynomial(xs, ys);
    HilbertPolynomial hp;
    hp.coeffs = coeffs;
    hp.dim = static_cast<int>(coeffs.size()) - 1;
    hp.window_start = static_cast<int>(k0);
    bool certified = true;
    for (int extra = 1; extra <= 2; ++extra) {
      long long k = k0 + n + extra;
      if (hp.eval(k) != rat_of(hilbert_function(I, static_cast<int>(k)))) {
        certified = false;
        break;
      }
    }
    if (certified) return hp;
    k0 += n + 3;
  }
  throw NotStabilized("dimension counts did not settle onto a polynomial");
}

bool is_empty_projective(const HomogeneousIdeal& I) {
  if (I.is_unit()) return true;
  const auto& gb = I.groebner_basis();
  std::size_t n = I.nvars();
  std::vector<bool> covered(n, false);
  for (const Polynomial& g : gb) {
    const Term* best = nullptr;
    for (const Term& t : g.terms()) {
      if (best == nullptr || cmp(t.mono, best->mono, MonomialOrder::degrevlex()) > 0) best = &t;
    }
    const Monomial& lt = best->mono;
    std::size_t support = n, positives = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (lt.exps[i] > 0) {
        ++positives;
        support = i;
      }
    }
    if (positives == 1) covered[support] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

int projective_dimension(const HomogeneousIdeal& I) {
  if (is_empty_projective(I)) {
    if (I.is_unit()) throw EmptyScheme("the unit ideal cuts out the empty scheme");
    return -1;
  }
  return hilbert_polynomial(I).dim;
}

}  // namespace destab
