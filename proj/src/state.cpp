#include "destab/state.hpp"

#include <algorithm>
#include <set>

#include "destab/errors.hpp"
#include "destab/matrix.hpp"

namespace destab {

StateSet make_state(std::vector<std::vector<long long>> characters,
                    std::vector<std::string> labels) {
  if (characters.empty()) throw InputError("a state needs at least one character");
  if (!labels.empty() && labels.size() != characters.size())
    throw InputError("labels must run parallel to the characters");
  const std::size_t n = characters.front().size();
  if (n == 0) throw InputError("characters need at least one coordinate");
  StateSet out;
  std::set<std::vector<long long>> seen;
  for (std::size_t i = 0; i < characters.size(); ++i) {
    if (characters[i].size() != n)
      throw InputError("characters have inconsistent lengths");
    if (!seen.insert(characters[i]).second) continue;
    out.characters.push_back(std::move(characters[i]));
    if (!labels.empty()) out.labels.push_back(std::move(labels[i]));
  }
  return out;
}

StateSet state_of_point(const RationalVec& coords) {
  if (coords.empty()) throw InputError("a point needs at least one coordinate");
  std::vector<std::vector<long long>> chars;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    std::vector<long long> e(coords.size(), 0);
    e[i] = 1;
    chars.push_back(std::move(e));
    labels.push_back("e" + std::to_string(i));
  }
  if (chars.empty()) throw ZeroVector("all coordinates of the point vanish");
  return make_state(std::move(chars), std::move(labels));
}

StateSet state_of_hypersurface(const Polynomial& f, const std::vector<std::string>& vars) {
  if (f.is_zero()) throw ZeroPolynomial("the zero polynomial defines no hypersurface");
  if (f.nvars() != vars.size())
    throw InputError("hypersurface equation does not match the variable names");
  std::vector<std::vector<long long>> chars;
  std::vector<std::string> labels;
  for (const Term& t : f.terms()) {
    std::vector<long long> e(t.mono.exps.begin(), t.mono.exps.end());
    chars.push_back(std::move(e));
    labels.push_back(monomial_str(t.mono, vars));
  }
  return make_state(std::move(chars), std::move(labels));
}

StateSet state_of_hilbert_point(const HomogeneousIdeal& I, int d) {
  if (d < 1) throw InputError("graded piece degree must be positive");
  const std::size_t n = I.nvars();
  std::vector<Monomial> monos = monomials_of_degree(n, d);
  const std::size_t dim_ambient = monos.size();
  const long long hf = hilbert_function(I, d);
  const long long dim_piece = static_cast<long long>(dim_ambient) - hf;
  if (dim_piece <= 0 || dim_piece >= static_cast<long long>(dim_ambient))
    throw DegenerateDegree("graded piece must be a proper nonzero subspace (dimension " +
                           std::to_string(dim_piece) + " of " + std::to_string(dim_ambient) + ")");

  // Exact coordinate matrix of I_d: rows are reductions of m*g for generators
  // g and monomials m with deg(m*g) = d, in the monomial coordinates.
  std::vector<RationalVec> rows;
  for (const Polynomial& g : I.generators()) {
    int shift = d - g.degree();
    if (shift < 0) continue;
    for (const Monomial& m : monomials_of_degree(n, shift)) {
      Polynomial p = g.times_monomial(m, 1);
      RationalVec row(dim_ambient, Rational(0));
      for (const Term& t : p.terms()) {
        auto it = std::lower_bound(monos.begin(), monos.end(), t.mono,
                                   [](const Monomial& lhs, const Monomial& rhs) {
                                     // descending graded-lex enumeration
                                     return rhs < lhs;
                                   });
        if (it == monos.end() || !(*it == t.mono))
          throw InternalError("monomial outside the graded piece enumeration");
        row[static_cast<std::size_t>(it - monos.begin())] = t.coeff;
      }
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) throw InternalError("graded piece has positive dimension but no spanning rows");
  std::size_t rank = 0;
  ExactMatrix basis = ExactMatrix::from_rows(rows).reduced_echelon(&rank);
  if (static_cast<long long>(rank) != dim_piece)
    throw InternalError("graded piece rank disagrees with the dimension count");

  // Pluecker coordinates: one per rank-subset of the monomial columns; the
  // character of a subset with nonvanishing subm is the sum of its exponent
  // vectors.
  unsigned long long subsets = 1;
  for (std::size_t i = 0; i < rank; ++i) {
    subsets = subsets * (dim_ambient - i) / (i + 1);
    guard_cells(subsets, "Pluecker coordinate enumeration");
  }
  guard_cells(subsets * rank, "Pluecker coordinate enumeration");

  std::vector<std::vector<long long>> chars;
  std::vector<std::string> labels;
  std::vector<std::size_t> pick(rank);
  for (std::size_t i = 0; i < rank; ++i) pick[i] = i;
  auto advance = [&]() -> bool {
    std::size_t k = rank;
    while (k-- > 0) {
      if (pick[k] + (rank - k) < dim_ambient) {
        ++pick[k];
        for (std::size_t j = k + 1; j < rank; ++j) pick[j] = pick[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  do {
    ExactMatrix subm(rank, rank);
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j) subm.at(i, j) = basis.at(i, pick[j]);
    if (subm.determinant() == 0) continue;
    std::vector<long long> chi(n, 0);
    std::string label;
    for (std::size_t j = 0; j < rank; ++j) {
      for (std::size_t v = 0; v < n; ++v) chi[v] += monos[pick[j]].exps[v];
      if (j) label += "*";
      label += monomial_str(monos[pick[j]], I.variables());
    }
    chars.push_back(std::move(chi));
    labels.push_back(std::move(label));
  } while (advance());
  if (chars.empty()) throw InternalError("a full-rank matrix must have a nonvanishing subm");

  // Deduplicate characters while merging labels deterministically.
  std::vector<std::vector<long long>> unique_chars;
  std::vector<std::string> unique_labels;
  std::set<std::vector<long long>> seen;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    if (!seen.insert(chars[i]).second) continue;
    unique_chars.push_back(chars[i]);
    unique_labels.push_back(labels[i]);
  }
  return make_state(std::move(unique_chars), std::move(unique_labels));
}

Rational mu_value(const StateSet& S, const RationalVec& a) {
  if (S.characters.empty()) throw InputError("empty state");
  if (a.size() != S.ambient())
    throw InputError("weight vector length does not match the state's ambient");
  bool first = true;
  Rational best = 0;
  for (const auto& chi : S.characters) {
    Rational value = 0;
    for (std::size_t i = 0; i < a.size(); ++i) value -= a[i] * rat_of(chi[i]);
    if (first || value > best) {
      best = value;
      first = false;
    }
  }
  return best;
}

WeightReport mu_report(const StateSet& S, const WeightVector& a) {
  if (S.characters.empty()) throw InputError("empty state");
  if (a.size() != S.ambient())
    throw InputError("weight vector length does not match the state's ambient");
  WeightReport out;
  bool first = true;
  for (std::size_t idx = 0; idx < S.characters.size(); ++idx) {
    Rational value = 0;
    for (std::size_t i = 0; i < a.size(); ++i) value -= rat_of(a[i]) * rat_of(S.characters[idx][i]);
    if (first || value > out.mu) {
      out.mu = value;
      out.argmax = {idx};
      first = false;
    } else if (value == out.mu) {
      out.argmax.push_back(idx);
    }
  }
  if (!is_central(a)) {
    // Trace-free projection a_c = a - mean(a): invariant under central shifts;
    // <a_c, chi> only depends on a through a_c because the mu maximum moves by
    // a character-independent constant.
    Rational mean = 0;
    for (long long v : a) mean += rat_of(v);
    mean /= static_cast<unsigned long>(a.size());
    RationalVec centered(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) centered[i] = rat_of(a[i]) - mean;
    Rational mu_c = mu_value(S, centered);
    out.nu = NormalizedValue{mu_c, sl_norm_squared(a)};
  }
  return out;
}

bool s_prime_membership(const HomogeneousIdeal& I, const WeightVector& a) {
  if (a.size() != I.nvars())
    throw InputError("weight vector length does not match the ring");
  if (I.is_unit()) throw EmptyScheme("the unit ideal cuts out the empty scheme");
  long long lo = *std::min_element(a.begin(), a.end());
  std::vector<Polynomial> mins;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == lo) mins.push_back(Polynomial::variable(I.nvars(), i));
  }
  return is_empty_projective(ideal_sum(I, std::move(mins)));
}

bool support_semicontinuity_check(const std::vector<Polynomial>& family) {
  if (family.empty()) throw InputError("empty coordinate family");
  bool any_generic = false, any_special = false;
  for (const Polynomial& entry : family) {
    if (entry.nvars() != 1)
      throw InputError("family entries must be univariate polynomials in the parameter");
    if (!entry.is_zero()) any_generic = true;
    for (const Term& t : entry.terms()) {
      if (t.mono.degree() == 0) any_special = true;
    }
  }
  if (!any_generic || !any_special)
    throw ZeroVector("the family vanishes at the special point or identically");
  // Support at the special value: entries with nonzero constant term.  Such an
  // entry is a nonzero polynomial, hence in the generic support too.
  for (const Polynomial& entry : family) {
    bool special = false;
    for (const Term& t : entry.terms()) {
      if (t.mono.degree() == 0 && t.coeff != 0) special = true;
    }
    if (special && entry.is_zero())
      throw InternalError("special support escaped the generic support");
  }
  return true;
}

bool is_nondegenerate(const HomogeneousIdeal& I) {
  for (const Polynomial& g : I.groebner_basis()) {
    if (g.degree() == 1) return false;
  }
  return true;
}

}  // namespace destab
