#include "destab/testconfig.hpp"

#include <algorithm>
#include <utility>

#include "destab/errors.hpp"
#include "destab/matrix.hpp"
#include "destab/state.hpp"

namespace destab {

HomogeneousIdeal flat_limit(const HomogeneousIdeal& I, const WeightVector& a,
                            int flatness_check_bound) {
  if (a.size() != I.nvars())
    throw InputError("weight vector length does not match the ring");
  HomogeneousIdeal limit = initial_ideal(I, a);
  for (int k = 0; k <= flatness_check_bound; ++k) {
    if (hilbert_function(I, k) != hilbert_function(limit, k))
      throw FlatnessViolation("degeneration changes the dimension count in degree " +
                              std::to_string(k));
  }
  return limit;
}

TestDegeneration make_test_degeneration(int exponent, const HomogeneousIdeal& I,
                                        const WeightVector& a) {
  if (exponent < 1) throw InputError("embedding exponent must be positive");
  TestDegeneration td{exponent, I, canonicalize(a), flat_limit(I, a)};
  return td;
}

AlmostTrivialReport almost_trivial_necessary(const HomogeneousIdeal& I, const WeightVector& a) {
  if (a.size() != I.nvars())
    throw InputError("weight vector length does not match the ring");
  if (is_central(a))
    throw CentralSubgroup("constant weight vector generates no degeneration direction");
  if (I.is_unit()) throw EmptyScheme("the unit ideal cuts out the empty scheme");
  if (!is_nondegenerate(I))
    throw Degenerate("the ideal contains a linear form, so the embedding is degenerate");

  AlmostTrivialReport report;
  long long lo = *std::min_element(a.begin(), a.end());
  std::vector<Polynomial> mins;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == lo) {
      report.min_coords.push_back(i);
      mins.push_back(Polynomial::variable(I.nvars(), i));
    }
  }
  report.c = static_cast<int>(report.min_coords.size()) - 1;
  report.dim = projective_dimension(I);
  report.meets = !is_empty_projective(ideal_sum(I, std::move(mins)));
  report.verdict = (report.c <= report.dim || report.meets) ? AlmostTrivialVerdict::Fails
                                                            : AlmostTrivialVerdict::Possible;
  return report;
}

std::optional<int> is_t_power_flag_ideal(const std::vector<Polynomial>& generators_in_x_and_t) {
  std::vector<Polynomial> gens = generators_in_x_and_t;
  std::vector<Polynomial> gb = groebner_basis(std::move(gens), MonomialOrder::deglex());
  if (gb.size() != 1) return std::nullopt;
  const Polynomial& g = gb.front();
  if (g.terms().size() != 1) return std::nullopt;
  const Term& t = g.terms().front();
  if (t.coeff != 1) return std::nullopt;
  const std::size_t n = t.mono.nvars();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (t.mono.exps[i] != 0) return std::nullopt;
  }
  int power = t.mono.exps[n - 1];
  if (power < 1) return std::nullopt;
  return power;
}

namespace {

// Total trace-free weight of the degree-k piece of the quotient by an
// isobaric ideal: sum of <a - mean(a), alpha> over the standard monomials.
Rational weight_sum(const HomogeneousIdeal& J, const WeightVector& a, int k) {
  const auto& gb = J.groebner_basis();
  std::vector<Monomial> lts;
  lts.reserve(gb.size());
  for (const Polynomial& g : gb) {
    const Term* best = nullptr;
    for (const Term& t : g.terms()) {
      if (best == nullptr || cmp(t.mono, best->mono, MonomialOrder::degrevlex()) > 0) best = &t;
    }
    lts.push_back(best->mono);
  }
  mpz_class raw = 0;
  long long count = 0;
  for (const Monomial& m : monomials_of_degree(J.nvars(), k)) {
    bool standard = true;
    for (const Monomial& lt : lts) {
      if (lt.divides(m)) {
        standard = false;
        break;
      }
    }
    if (!standard) continue;
    ++count;
    long long w = 0;
    for (std::size_t i = 0; i < a.size(); ++i) w += a[i] * m.exps[i];
    raw += static_cast<long>(w);
  }
  mpz_class suma = 0;
  for (long long v : a) suma += static_cast<long>(v);
  // Centering: subtract mean(a) * k from each monomial's weight.
  mpz_class scaled = suma * k;
  scaled *= static_cast<long>(count);
  Rational centered = Rational(raw) - Rational(scaled) / static_cast<unsigned long>(a.size());
  return centered;
}

RationalVec fit_through(const std::vector<long long>& xs, const RationalVec& ys) {
  const std::size_t n = xs.size();
  ExactMatrix V(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational p = 1;
    for (std::size_t j = 0; j < n; ++j) {
      V.at(i, j) = p;
      p *= rat_of(xs[i]);
    }
  }
  auto solution = V.solve(ys);
  if (!solution) throw InternalError("Vandermonde system with distinct nodes must be solvable");
  RationalVec coeffs = *solution;
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

Rational eval_poly(const RationalVec& coeffs, long long k) {
  Rational acc = 0;
  for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * rat_of(k) + coeffs[j];
  return acc;
}

// DF invariant from a precomputed central fiber.
DFReport df_from_fiber(const HomogeneousIdeal& fiber, const WeightVector& a) {
  HilbertPolynomial hp = hilbert_polynomial(fiber);
  if (hp.dim < 0) throw EmptyScheme("the scheme is empty; the invariant is undefined");
  DFReport report;
  report.n = hp.dim;
  report.a0 = hp.coeffs[static_cast<std::size_t>(hp.dim)];
  report.a1 = hp.dim >= 1 ? hp.coeffs[static_cast<std::size_t>(hp.dim) - 1] : Rational(0);

  // The total weight of the degree-k piece settles onto a polynomial of
  // degree at most n+1; interpolate and certify like the dimension count.
  const int points = hp.dim + 3;  // degree <= n+1 needs n+2 nodes, one spare
  long long k0 = hp.window_start;
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<long long> xs;
    RationalVec ys;
    for (int t = 0; t < points; ++t) {
      xs.push_back(k0 + t);
      ys.push_back(weight_sum(fiber, a, static_cast<int>(k0) + t));
    }
    RationalVec coeffs = fit_through(xs, ys);
    if (static_cast<int>(coeffs.size()) > hp.dim + 2) {
      k0 += points + 2;
      continue;
    }
    bool certified = true;
    for (int extra = 0; extra < 2; ++extra) {
      long long k = k0 + points + extra;
      if (eval_poly(coeffs, k) != weight_sum(fiber, a, static_cast<int>(k))) {
        certified = false;
        break;
      }
    }
    if (!certified) {
      k0 += points + 2;
      continue;
    }
    auto coeff_at = [&](int j) {
      return j >= 0 && j < static_cast<int>(coeffs.size()) ? coeffs[static_cast<std::size_t>(j)]
                                                           : Rational(0);
    };
    report.b0 = coeff_at(hp.dim + 1);
    report.b1 = coeff_at(hp.dim);
    report.df = 2 * (report.a1 * report.b0 - report.a0 * report.b1) / report.a0;
    return report;
  }
  throw NotStabilized("weight sums did not settle onto a polynomial");
}

}  // namespace

DFReport df_invariant(const HomogeneousIdeal& I, const WeightVector& a) {
  return df_from_fiber(flat_limit(I, a), a);
}

DFReport df_invariant(const TestDegeneration& td) {
  return df_from_fiber(td.central_fiber, td.point.canonical);
}

SweepReport k_stability_sweep(const HomogeneousIdeal& I, int r_max, int denominator_bound) {
  if (r_max < 1) throw InputError("the sweep needs at least exponent 1");
  if (denominator_bound < 0) throw InputError("denominator bound must be nonnegative");
  if (I.is_unit()) throw EmptyScheme("the unit ideal cuts out the empty scheme");

  SweepReport report;
  bool any_direction = false;
  const unsigned long long D = static_cast<unsigned long long>(denominator_bound);

  for (int r = 1; r <= r_max; ++r) {
    SweepExponentReport er;
    er.exponent = r;

    HomogeneousIdeal embedded = I;
    if (r == 1) {
      for (const Monomial& m : monomials_of_degree(I.nvars(), 1))
        er.coordinates.push_back(monomial_str(m, I.variables()));
      er.coordinate_names = I.variables();
    } else {
      VeroneseEmbedding ve = veronese_embedding(I, r);
      embedded = ve.ideal;
      for (const Monomial& m : ve.basis)
        er.coordinates.push_back(monomial_str(m, I.variables()));
      er.coordinate_names = embedded.variables();
    }
    const std::size_t ncoords = embedded.nvars();

    unsigned long long grid = 1;
    for (std::size_t i = 0; i < ncoords; ++i) {
      grid *= D + 1;
      guard_cells(grid, "stability sweep grid");
    }

    WeightVector a(ncoords, 0);
    auto advance = [&]() -> bool {
      std::size_t i = ncoords;
      while (i-- > 0) {
        if (a[i] < denominator_bound) {
          ++a[i];
          std::fill(a.begin() + static_cast<long>(i) + 1, a.end(), 0ll);
          return true;
        }
      }
      return false;
    };
    do {
      if (is_central(a)) continue;
      any_direction = true;
      SweepDirection dir;
      dir.weights = a;
      dir.canonical = canonicalize(a).canonical;
      AlmostTrivialReport at = almost_trivial_necessary(embedded, a);
      dir.verdict = at.verdict;
      HomogeneousIdeal fiber = flat_limit(embedded, a);
      dir.screened =
          at.verdict == AlmostTrivialVerdict::Possible && ideal_equal(fiber, embedded);
      dir.df = df_from_fiber(fiber, a).df;
      for (const Polynomial& g : fiber.generators())
        dir.central_fiber.push_back(polynomial_str(g, embedded.variables()));

      if (!dir.screened) {
        bool better = !er.min_df.has_value() || dir.df < *er.min_df ||
                      (dir.df == *er.min_df &&
                       std::lexicographical_compare(dir.weights.begin(), dir.weights.end(),
                                                    er.min_df_direction->begin(),
                                                    er.min_df_direction->end()));
        if (better) {
          er.min_df = dir.df;
          er.min_df_direction = dir.weights;
        }
      }
      er.directions.push_back(std::move(dir));
    } while (advance());

    try {
      StateSet state = state_of_hilbert_point(I, r);
      long long degree = 0;
      for (long long c : state.characters.front()) degree += c;
      er.hilbert_point_kempf = optimal_destabilizer(state, degree);
    } catch (const DegenerateDegree& e) {
      er.hilbert_point_note = e.what();
    }
    report.exponents.push_back(std::move(er));
  }
  report.status = any_direction ? "Ok" : "Inconclusive";
  return report;
}

}  // namespace destab
