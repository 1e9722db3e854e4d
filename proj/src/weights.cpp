#include "destab/weights.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "destab/errors.hpp"

namespace destab {

bool is_central(const WeightVector& a) {
  if (a.empty()) throw InputError("empty weight vector");
  return std::all_of(a.begin(), a.end(), [&](long long v) { return v == a.front(); });
}

ApartmentPoint canonicalize(const WeightVector& a) {
  if (is_central(a))
    throw CentralSubgroup("constant weight vector generates no degeneration direction");
  WeightVector shifted = a;
  long long lo = *std::min_element(shifted.begin(), shifted.end());
  for (long long& v : shifted) v -= lo;
  long long g = 0;
  for (long long v : shifted) g = std::gcd(g, v);
  for (long long& v : shifted) v /= g;
  return ApartmentPoint{std::move(shifted)};
}

bool are_T_equivalent(const WeightVector& a, const WeightVector& b) {
  if (a.size() != b.size()) return false;
  return canonicalize(a) == canonicalize(b);
}

Rational sl_norm_squared(const WeightVector& a) {
  if (a.empty()) throw InputError("empty weight vector");
  Rational mean = 0;
  for (long long v : a) mean += rat_of(v);
  mean /= static_cast<unsigned long>(a.size());
  Rational acc = 0;
  for (long long v : a) {
    Rational d = rat_of(v) - mean;
    acc += d * d;
  }
  return acc;
}

std::string NormalizedValue::str() const {
  return rat_str(numerator) + "/sqrt(" + rat_str(normsq) + ")";
}

double NormalizedValue::approx() const {
  mpf_class num(0, 256), den(0, 256);
  num = mpq_class(numerator);
  den = mpq_class(normsq);
  mpf_class root(0, 256);
  root = sqrt(den);
  mpf_class value(0, 256);
  value = num / root;
  return value.get_d();
}

int cmp_normalized(const NormalizedValue& a, const NormalizedValue& b) {
  if (a.normsq <= 0 || b.normsq <= 0)
    throw InputError("normalized values need positive squared norms");
  int sa = sgn(a.numerator), sb = sgn(b.numerator);
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;
  // Same nonzero sign: compare mu_a^2 / normsq_a against mu_b^2 / normsq_b,
  // which preserves the order of |mu|/sqrt(normsq); reverse when negative.
  Rational lhs = a.numerator * a.numerator * b.normsq;
  Rational rhs = b.numerator * b.numerator * a.normsq;
  int mag = lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  return sa > 0 ? mag : -mag;
}

WeightVector lift_exponent(const WeightVector& a, std::size_t nvars, int r, int l) {
  if (r < 1 || l < 1) throw InputError("lift needs positive degrees");
  if (nvars == 0) throw InputError("lift needs at least one variable");
  std::vector<Monomial> source = monomials_of_degree(nvars, r);
  if (a.size() != source.size())
    throw InputError("weight vector length does not match the degree-" + std::to_string(r) +
                     " coordinate count");
  // Weight of a degree-(r*l) monomial: minimum total weight over its
  // factorizations into l degree-r monomials.  Dynamic programming on the
  // number of factors; state space is the monomials of degree r*j.
  std::map<Monomial, long long> best;
  for (std::size_t i = 0; i < source.size(); ++i) {
    auto [it, fresh] = best.emplace(source[i], a[i]);
    if (!fresh) it->second = std::min(it->second, a[i]);
  }
  for (int j = 2; j <= l; ++j) {
    guard_cells(monomial_count(nvars, r * j) * source.size(), "weight lift");
    std::map<Monomial, long long> next;
    for (const auto& [mono, w] : best) {
      for (std::size_t i = 0; i < source.size(); ++i) {
        Monomial prod = mono * source[i];
        long long total = w + a[i];
        auto [it, fresh] = next.emplace(std::move(prod), total);
        if (!fresh) it->second = std::min(it->second, total);
      }
    }
    best = std::move(next);
  }
  std::vector<Monomial> target = monomials_of_degree(nvars, r * l);
  WeightVector lifted;
  lifted.reserve(target.size());
  for (const Monomial& m : target) {
    auto it = best.find(m);
    if (it == best.end())
      throw InternalError("degree-" + std::to_string(r * l) +
                          " monomial missed by the factorization search");
    lifted.push_back(it->second);
  }
  return lifted;
}

WeightVector lift_exponent_bruteforce(const WeightVector& a, std::size_t nvars, int r, int l) {
  if (r < 1 || l < 1) throw InputError("lift needs positive degrees");
  std::vector<Monomial> source = monomials_of_degree(nvars, r);
  if (a.size() != source.size())
    throw InputError("weight vector length does not match the degree-" + std::to_string(r) +
                     " coordinate count");
  unsigned long long combos = 1;
  for (int j = 0; j < l; ++j) {
    combos *= source.size();
    guard_cells(combos, "exhaustive factorization search");
  }
  std::vector<Monomial> target = monomials_of_degree(nvars, r * l);
  WeightVector lifted;
  lifted.reserve(target.size());
  for (const Monomial& goal : target) {
    long long best = 0;
    bool found = false;
    // Choose factors with nondecreasing indices to visit each multiset once.
    std::vector<std::size_t> pick;
    Monomial partial = Monomial::one(nvars);
    auto rec = [&](auto&& self, std::size_t lo, const Monomial& acc, long long w) -> void {
      if (pick.size() == static_cast<std::size_t>(l)) {
        if (acc == goal && (!found || w < best)) {
          best = w;
          found = true;
        }
        return;
      }
      for (std::size_t i = lo; i < source.size(); ++i) {
        Monomial next = acc * source[i];
        if (!next.divides(goal)) continue;  // exponents already exceed the goal
        pick.push_back(i);
        self(self, i, next, w + a[i]);
        pick.pop_back();
      }
    };
    rec(rec, 0, partial, 0);
    if (!found)
      throw InternalError("degree-" + std::to_string(r * l) +
                          " monomial admits no factorization");
    lifted.push_back(best);
  }
  return lifted;
}

WeightVector lift_exponent(const WeightVector& a, int l, const HomogeneousIdeal& I) {
  const std::size_t nvars = I.nvars();
  // Infer r from the coordinate count: |a| = C(r + nvars - 1, nvars - 1).
  for (int r = 1; r <= 64; ++r) {
    unsigned long long count = monomial_count(nvars, r);
    if (count == a.size()) return lift_exponent(a, nvars, r, l);
    if (count > a.size()) break;
  }
  throw InputError("weight vector length matches no complete degree system of the ring");
}

}  // namespace destab
