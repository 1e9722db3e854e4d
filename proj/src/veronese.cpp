#include <string>

#include "destab/errors.hpp"
#include "destab/ideal.hpp"

namespace destab {

VeroneseEmbedding veronese_embedding(const HomogeneousIdeal& I, int r) {
  if (r < 1) throw InputError("re-embedding degree must be at least 1");
  if (I.is_unit()) throw EmptyScheme("the unit ideal cuts out the empty scheme");
  const std::size_t n = I.nvars();

  // Coordinates: the degree-r monomials outside the leading-term ideal, in the
  // shared descending enumeration.  They are linearly independent in the
  // degree-r piece of the quotient, so the linear system they span is basefree
  // and the embedding is nondegenerate by construction.
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
  std::vector<Monomial> basis;
  for (const Monomial& m : monomials_of_degree(n, r)) {
    bool standard = true;
    for (const Monomial& lt : lts) {
      if (lt.divides(m)) {
        standard = false;
        break;
      }
    }
    if (standard) basis.push_back(m);
  }
  if (basis.empty())
    throw DegenerateDegree("no coordinates available in the requested degree");

  const std::size_t m = basis.size();
  guard_cells(monomial_count(n + m, r + 1), "re-embedding elimination");

  // Graph ideal in k[x, Y]: the original generators plus x^{B_j} - Y_j.  A
  // block order eliminating the x variables carves out the kernel of
  // k[Y] -> k[x]/I.
  const std::size_t total = n + m;
  std::vector<Polynomial> combined;
  for (const Polynomial& g : I.generators()) {
    std::vector<Term> terms;
    for (const Term& t : g.terms()) {
      Monomial lifted = Monomial::one(total);
      for (std::size_t i = 0; i < n; ++i) lifted.exps[i] = t.mono.exps[i];
      terms.push_back({std::move(lifted), t.coeff});
    }
    combined.push_back(Polynomial::from_terms(total, std::move(terms)));
  }
  for (std::size_t j = 0; j < m; ++j) {
    Monomial graph = Monomial::one(total);
    for (std::size_t i = 0; i < n; ++i) graph.exps[i] = basis[j].exps[i];
    Monomial yj = Monomial::one(total);
    yj.exps[n + j] = 1;
    combined.push_back(Polynomial::from_terms(
        total, {{std::move(graph), Rational(1)}, {std::move(yj), Rational(-1)}}));
  }

  std::vector<Polynomial> egb = groebner_basis(std::move(combined), MonomialOrder::eliminate(n));

  // Keep the elements that avoid x entirely and re-express them in Y alone.
  // Each is homogeneous in Y: the graph ideal is homogeneous once Y carries
  // weight r, so the eliminated basis is too, and on pure-Y elements that
  // weighting is r times the standard grading.
  std::vector<Polynomial> kernel_gens;
  for (const Polynomial& g : egb) {
    bool pure = true;
    for (const Term& t : g.terms()) {
      for (std::size_t i = 0; i < n && pure; ++i) {
        if (t.mono.exps[i] != 0) pure = false;
      }
      if (!pure) break;
    }
    if (!pure) continue;
    std::vector<Term> terms;
    for (const Term& t : g.terms()) {
      Monomial cut(std::vector<int>(t.mono.exps.begin() + static_cast<long>(n),
                                    t.mono.exps.end()));
      terms.push_back({std::move(cut), t.coeff});
    }
    kernel_gens.push_back(Polynomial::from_terms(m, std::move(terms)));
  }

  std::vector<std::string> names;
  names.reserve(m);
  for (std::size_t j = 0; j < m; ++j) names.push_back("Y" + std::to_string(j));
  return VeroneseEmbedding{std::move(basis),
                           HomogeneousIdeal(std::move(names), std::move(kernel_gens))};
}

}  // namespace destab
