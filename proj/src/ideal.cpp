#include "destab/ideal.hpp"

#include <utility>

#include "destab/errors.hpp"

namespace destab {

HomogeneousIdeal::HomogeneousIdeal(std::vector<std::string> variables,
                                   std::vector<Polynomial> generators)
    : vars_(std::move(variables)) {
  if (vars_.empty()) throw InputError("an ideal needs at least one ring variable");
  for (Polynomial& g : generators) {
    if (g.is_zero()) continue;  // redundant generator
    if (g.nvars() != vars_.size())
      throw InputError("generator does not match the ring's variable count");
    if (!g.is_homogeneous()) throw InputError("generators must be homogeneous");
    gens_.push_back(std::move(g));
  }
}

HomogeneousIdeal::HomogeneousIdeal(const HomogeneousIdeal& other) {
  std::lock_guard<std::mutex> lock(other.cache_mutex_);
  vars_ = other.vars_;
  gens_ = other.gens_;
  gb_cache_ = other.gb_cache_;
}

HomogeneousIdeal& HomogeneousIdeal::operator=(const HomogeneousIdeal& other) {
  if (this == &other) return *this;
  std::scoped_lock lock(cache_mutex_, other.cache_mutex_);
  vars_ = other.vars_;
  gens_ = other.gens_;
  gb_cache_ = other.gb_cache_;
  return *this;
}

const std::vector<Polynomial>& HomogeneousIdeal::groebner_basis(const MonomialOrder& order) const {
  const std::string key = order.key();
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = gb_cache_.find(key);
    if (it != gb_cache_.end()) return *it->second;
  }
  auto computed = std::make_shared<const std::vector<Polynomial>>(
      destab::groebner_basis(gens_, order));
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto [it, fresh] = gb_cache_.emplace(key, std::move(computed));
  return *it->second;
}

bool HomogeneousIdeal::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  if (f.nvars() != vars_.size())
    throw InputError("membership test across different rings");
  return normal_form(f, groebner_basis(), MonomialOrder::degrevlex()).is_zero();
}

bool HomogeneousIdeal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().degree() == 0;
}

int HomogeneousIdeal::generator_degree_sum() const {
  int sum = 0;
  for (const Polynomial& g : gens_) sum += g.degree();
  return sum;
}

Polynomial initial_form(const Polynomial& f, const std::vector<long long>& a) {
  if (f.is_zero()) return f;
  if (a.size() != f.nvars())
    throw InputError("weight vector length does not match the ring");
  auto weight_of = [&](const Monomial& m) {
    long long w = 0;
    for (std::size_t i = 0; i < a.size(); ++i) w += a[i] * m.exps[i];
    return w;
  };
  long long best = weight_of(f.terms().front().mono);
  for (const Term& t : f.terms()) best = std::min(best, weight_of(t.mono));
  std::vector<Term> kept;
  for (const Term& t : f.terms()) {
    if (weight_of(t.mono) == best) kept.push_back(t);
  }
  return Polynomial::from_terms(f.nvars(), std::move(kept));
}

HomogeneousIdeal initial_ideal(const HomogeneousIdeal& I, const std::vector<long long>& a) {
  if (a.size() != I.nvars())
    throw InputError("weight vector length does not match the ring");
  std::vector<long long> negated(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) negated[i] = -a[i];
  const auto& gb = I.groebner_basis(MonomialOrder::weighted(negated));
  std::vector<Polynomial> inits;
  inits.reserve(gb.size());
  for (const Polynomial& g : gb) inits.push_back(initial_form(g, a));
  return HomogeneousIdeal(I.variables(), std::move(inits));
}

HomogeneousIdeal ideal_sum(const HomogeneousIdeal& I, std::vector<Polynomial> extra) {
  std::vector<Polynomial> gens = I.generators();
  for (Polynomial& p : extra) gens.push_back(std::move(p));
  return HomogeneousIdeal(I.variables(), std::move(gens));
}

bool ideal_equal(const HomogeneousIdeal& I, const HomogeneousIdeal& J) {
  if (I.variables() != J.variables())
    throw InputError("ideal comparison across different rings");
  return I.groebner_basis() == J.groebner_basis();
}

}  // namespace destab
