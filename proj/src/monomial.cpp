#include "destab/monomial.hpp"

#include <algorithm>

#include "destab/errors.hpp"

namespace destab {

int Monomial::degree() const {
  int d = 0;
  for (int e : exps) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  if (exps.size() != other.exps.size()) return false;
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > other.exps[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  if (exps.size() != rhs.exps.size()) throw InputError("monomial product across different rings");
  Monomial out(*this);
  for (std::size_t i = 0; i < exps.size(); ++i) out.exps[i] += rhs.exps[i];
  return out;
}

Monomial Monomial::divided_by(const Monomial& rhs) const {
  if (exps.size() != rhs.exps.size()) throw InputError("monomial quotient across different rings");
  Monomial out(*this);
  for (std::size_t i = 0; i < exps.size(); ++i) {
    out.exps[i] -= rhs.exps[i];
    if (out.exps[i] < 0) throw InputError("monomial quotient with nonzero remainder");
  }
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  if (a.exps.size() != b.exps.size()) throw InputError("monomial lcm across different rings");
  Monomial out(a);
  for (std::size_t i = 0; i < a.exps.size(); ++i) out.exps[i] = std::max(a.exps[i], b.exps[i]);
  return out;
}

bool Monomial::coprime_with(const Monomial& rhs) const {
  if (exps.size() != rhs.exps.size()) return false;
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > 0 && rhs.exps[i] > 0) return false;
  return true;
}

bool Monomial::operator<(const Monomial& rhs) const {
  int da = degree(), db = rhs.degree();
  if (da != db) return da < db;
  // lexicographic: a < b when the first differing exponent is smaller.
  for (std::size_t i = 0; i < exps.size() && i < rhs.exps.size(); ++i)
    if (exps[i] != rhs.exps[i]) return exps[i] < rhs.exps[i];
  return exps.size() < rhs.exps.size();
}

std::string MonomialOrder::key() const {
  std::string k = (base == Base::DegRevLex) ? "degrevlex" : "deglex";
  if (!weight.empty()) {
    k += ";w=";
    for (std::size_t i = 0; i < weight.size(); ++i) {
      if (i) k += ",";
      k += std::to_string(weight[i]);
    }
  }
  if (elim_first > 0) k += ";elim=" + std::to_string(elim_first);
  return k;
}

namespace {

int cmp_base(const Monomial& a, const Monomial& b, MonomialOrder::Base base) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  if (base == MonomialOrder::Base::DegLex) {
    for (std::size_t i = 0; i < a.exps.size(); ++i) {
      if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
    }
    return 0;
  }
  // Graded reverse lexicographic: with equal degrees, the monomial with the
  // larger exponent on the last differing variable is the smaller one.
  for (std::size_t i = a.exps.size(); i-- > 0;) {
    if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? -1 : 1;
  }
  return 0;
}

int cmp_block(const Monomial& a, const Monomial& b, std::size_t cut, MonomialOrder::Base base) {
  // Compare the first `cut` variables as a graded block, then the rest.
  auto slice_deg = [](const Monomial& m, std::size_t lo, std::size_t hi) {
    int d = 0;
    for (std::size_t i = lo; i < hi; ++i) d += m.exps[i];
    return d;
  };
  int da = slice_deg(a, 0, cut), db = slice_deg(b, 0, cut);
  if (da != db) return da < db ? -1 : 1;
  if (base == MonomialOrder::Base::DegLex) {
    for (std::size_t i = 0; i < cut; ++i)
      if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
  } else {
    for (std::size_t i = cut; i-- > 0;)
      if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? -1 : 1;
  }
  da = slice_deg(a, cut, a.exps.size());
  db = slice_deg(b, cut, b.exps.size());
  if (da != db) return da < db ? -1 : 1;
  if (base == MonomialOrder::Base::DegLex) {
    for (std::size_t i = cut; i < a.exps.size(); ++i)
      if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
  } else {
    for (std::size_t i = a.exps.size(); i-- > cut;)
      if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int cmp(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  if (a.exps.size() != b.exps.size()) throw InputError("monomial comparison across different rings");
  if (!order.weight.empty()) {
    if (order.weight.size() != a.exps.size())
      throw InputError("monomial order weight length does not match the ring");
    long long wa = 0, wb = 0;
    for (std::size_t i = 0; i < a.exps.size(); ++i) {
      wa += order.weight[i] * a.exps[i];
      wb += order.weight[i] * b.exps[i];
    }
    if (wa != wb) return wa < wb ? -1 : 1;
  }
  if (order.elim_first > 0) {
    if (order.elim_first >= a.exps.size())
      throw InputError("elimination block must be a proper prefix of the variables");
    return cmp_block(a, b, order.elim_first, order.base);
  }
  return cmp_base(a, b, order.base);
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d) {
  if (nvars == 0) throw InputError("monomials need at least one variable");
  if (d < 0) return {};
  guard_cells(monomial_count(nvars, d) * nvars, "monomial enumeration");
  std::vector<Monomial> out;
  std::vector<int> exps(nvars, 0);
  // Recursive descent assigning the largest exponent to the earliest variable
  // first, producing graded lexicographic descending order.
  auto rec = [&](auto&& self, std::size_t var, int remaining) -> void {
    if (var + 1 == nvars) {
      exps[var] = remaining;
      out.emplace_back(exps);
      exps[var] = 0;
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      exps[var] = e;
      self(self, var + 1, remaining - e);
    }
    exps[var] = 0;
  };
  rec(rec, 0, d);
  return out;
}

unsigned long long monomial_count(std::size_t nvars, int d) {
  if (d < 0) return 0;
  // C(d + nvars - 1, nvars - 1) with overflow detection.
  unsigned long long result = 1;
  for (std::size_t i = 1; i < nvars; ++i) {
    unsigned long long num = static_cast<unsigned long long>(d) + i;
    unsigned long long next = result * num;
    if (num != 0 && next / num != result)
      throw TooLarge("monomial count overflows a machine word");
    result = next / i;
  }
  return result;
}

}  // namespace destab
