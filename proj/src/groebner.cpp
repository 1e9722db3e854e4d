#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "destab/errors.hpp"
#include "destab/ideal.hpp"

namespace destab {

namespace {

Term leading_term(const Polynomial& p, const MonomialOrder& order) {
  const Term* best = nullptr;
  for (const Term& t : p.terms()) {
    if (best == nullptr || cmp(t.mono, best->mono, order) > 0) best = &t;
  }
  if (best == nullptr) throw ZeroPolynomial("leading term of the zero polynomial");
  return *best;
}

struct MonoGreater {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return cmp(a, b, *order) > 0; }
};

// S-polynomial: cancels the leading terms of f and g against their lcm.
Polynomial s_polynomial(const Polynomial& f, const Term& ltf, const Polynomial& g, const Term& ltg) {
  Monomial l = Monomial::lcm(ltf.mono, ltg.mono);
  Polynomial left = f.times_monomial(l.divided_by(ltf.mono), 1 / ltf.coeff);
  Polynomial right = g.times_monomial(l.divided_by(ltg.mono), 1 / ltg.coeff);
  return left - right;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
  if (f.is_zero() || basis.empty()) return f;
  std::vector<Term> lts;
  lts.reserve(basis.size());
  for (const Polynomial& g : basis) lts.push_back(leading_term(g, order));

  std::map<Monomial, Rational, MonoGreater> work{MonoGreater{&order}};
  for (const Term& t : f.terms()) work.emplace(t.mono, t.coeff);

  std::vector<Term> remainder;
  unsigned long long steps = 0;
  while (!work.empty()) {
    guard_cells(++steps, "polynomial reduction");
    auto head = work.begin();
    Monomial mono = head->first;
    Rational coeff = head->second;
    work.erase(head);
    if (coeff == 0) continue;

    std::size_t reducer = basis.size();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (lts[i].mono.divides(mono)) {
        reducer = i;
        break;
      }
    }
    if (reducer == basis.size()) {
      remainder.push_back({std::move(mono), std::move(coeff)});
      continue;
    }
    Rational factor = coeff / lts[reducer].coeff;
    Monomial quotient = mono.divided_by(lts[reducer].mono);
    for (const Term& t : basis[reducer].terms()) {
      if (t.mono == lts[reducer].mono) continue;  // cancels the head exactly
      Monomial m = t.mono * quotient;
      auto [it, fresh] = work.emplace(std::move(m), Rational(-factor * t.coeff));
      if (!fresh) {
        it->second -= factor * t.coeff;
        if (it->second == 0) work.erase(it);
      }
    }
  }
  return Polynomial::from_terms(f.nvars(), std::move(remainder));
}

std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens, const MonomialOrder& order) {
  std::vector<Polynomial> basis;
  std::size_t nvars = 0;
  for (Polynomial& g : gens) {
    if (g.is_zero()) continue;
    if (basis.empty()) {
      nvars = g.nvars();
    } else if (g.nvars() != nvars) {
      throw InputError("generators live in different rings");
    }
    basis.push_back(std::move(g));
  }
  if (basis.empty()) return {};
  if (!order.weight.empty()) {
    for (const Polynomial& g : basis) {
      if (!g.is_homogeneous())
        throw InputError("weighted monomial orders require homogeneous generators");
    }
  }

  std::vector<Term> lts;
  lts.reserve(basis.size());
  for (const Polynomial& g : basis) lts.push_back(leading_term(g, order));

  // Pending S-pairs, processed smallest lcm first (normal selection), ties by
  // index, so runs are deterministic.
  struct PairKey {
    Monomial lcm;
    std::size_t i, j;
  };
  struct PairBefore {
    const MonomialOrder* order;
    bool operator()(const PairKey& a, const PairKey& b) const {
      int c = cmp(a.lcm, b.lcm, *order);
      if (c != 0) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };
  std::set<PairKey, PairBefore> queue{PairBefore{&order}};
  auto enqueue_pairs_with = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      // Buchberger's product criterion: coprime leading monomials always
      // reduce to zero.
      if (lts[i].mono.coprime_with(lts[j].mono)) continue;
      queue.insert({Monomial::lcm(lts[i].mono, lts[j].mono), i, j});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) enqueue_pairs_with(j);

  unsigned long long processed = 0;
  while (!queue.empty()) {
    guard_cells(++processed, "Groebner pair processing");
    PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    Polynomial s = s_polynomial(basis[pk.i], lts[pk.i], basis[pk.j], lts[pk.j]);
    Polynomial r = normal_form(s, basis, order);
    if (r.is_zero()) continue;
    basis.push_back(std::move(r));
    lts.push_back(leading_term(basis.back(), order));
    enqueue_pairs_with(basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial another element divides.
  // Sweep in ascending total degree (ties by the order): a divisor never has
  // larger degree than its multiples, so every divisor is seen first.  The
  // order itself can disagree with divisibility when weights are negative, so
  // sorting by the order alone would be unsound here.
  std::vector<std::size_t> by_lt(basis.size());
  for (std::size_t i = 0; i < by_lt.size(); ++i) by_lt[i] = i;
  std::stable_sort(by_lt.begin(), by_lt.end(), [&](std::size_t a, std::size_t b) {
    int da = lts[a].mono.degree(), db = lts[b].mono.degree();
    if (da != db) return da < db;
    return cmp(lts[a].mono, lts[b].mono, order) < 0;
  });
  std::vector<Polynomial> minimal;
  std::vector<Monomial> kept_lts;
  for (std::size_t idx : by_lt) {
    bool redundant = false;
    for (const Monomial& m : kept_lts) {
      if (m.divides(lts[idx].mono)) {
        redundant = true;
        break;
      }
    }
    if (redundant) continue;
    minimal.push_back(basis[idx]);
    kept_lts.push_back(lts[idx].mono);
  }

  // Inter-reduce tails: leading terms are pairwise non-dividing, so one full
  // normal-form pass per element against the others reaches the reduced basis.
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != k) others.push_back(minimal[j]);
    }
    Polynomial r = normal_form(minimal[k], others, order);
    if (r.is_zero())
      throw InternalError("inter-reduction cancelled a minimal basis element");
    Term lt = leading_term(r, order);
    reduced.push_back(r.scaled(1 / lt.coeff));
  }
  std::stable_sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return cmp(leading_term(a, order).mono, leading_term(b, order).mono, order) < 0;
  });
  return reduced;
}

}  // namespace destab
