#include "doctest.h"

#include <random>
#include <vector>

#include "destab/errors.hpp"
#include "destab/kempf.hpp"
#include "destab/state.hpp"

using namespace destab;

TEST_CASE("minimum-norm point of a single character") {
  // Double line x^2 in the plane: the centered character is q itself.
  StateSet S = make_state({{2, 0, 0}});
  MinNormResult r = min_norm_point(S, 2);
  CHECK(r.q == RationalVec{Rational(4, 3), Rational(-2, 3), Rational(-2, 3)});
  CHECK(r.normsq == Rational(8, 3));
  CHECK(r.support == std::vector<std::size_t>{0});
  CHECK(r.combination == RationalVec{Rational(1)});
  CHECK_FALSE(r.is_zero());
}

TEST_CASE("minimum-norm point that is interior to a segment") {
  StateSet S = make_state({{3, 0, 0}, {0, 3, 0}});
  MinNormResult r = min_norm_point(S, 3);
  CHECK(r.q == RationalVec{Rational(1, 2), Rational(1, 2), Rational(-1)});
  CHECK(r.normsq == Rational(3, 2));
  CHECK(r.support.size() == 2);
  CHECK(r.combination == RationalVec{Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("stable states have the origin in the centered hull") {
  // The conic's degree-2 Hilbert state: 0 = (2/3) p1 + (1/3) p2.
  StateSet S = make_state({{1, 0, 1}, {0, 2, 0}});
  MinNormResult r = min_norm_point(S, 2);
  CHECK(r.is_zero());
  CHECK(r.normsq == Rational(0));
}

TEST_CASE("characters must share the declared degree") {
  StateSet S = make_state({{2, 0, 0}, {1, 0, 0}});
  CHECK_THROWS_AS(min_norm_point(S, 2), InputError);
}

TEST_CASE("certificate inequality holds at the optimum") {
  StateSet S = make_state({{3, 0, 0}, {0, 3, 0}});
  MinNormResult r = min_norm_point(S, 3);
  // <q, p> >= <q, q> for every centered character p = chi - 1.
  for (const auto& chi : S.characters) {
    Rational ip = 0;
    for (std::size_t i = 0; i < 3; ++i) ip += r.q[i] * (rat_of(chi[i]) - Rational(1));
    CHECK(ip >= r.normsq);
  }
}

TEST_CASE("optimal destabilizer of the double line") {
  StateSet S = make_state({{2, 0, 0}});
  DestabilizerReport rep = optimal_destabilizer(S, 2);
  CHECK(rep.status == StabilityStatus::Unstable);
  REQUIRE(rep.direction.has_value());
  CHECK(rep.direction->canonical == WeightVector{1, 0, 0});
  // The direction is canonical-equal to (3, 0, 0).
  CHECK(rep.direction->canonical == canonicalize({3, 0, 0}).canonical);
  REQUIRE(rep.nu_min.has_value());
  // Reported on the primitive integer representative (2, -1, -1).
  CHECK(rep.nu_min->numerator == Rational(-4));
  CHECK(rep.nu_min->normsq == Rational(6));
  // Equal, as a normalized value, to -sqrt(8/3).
  CHECK(cmp_normalized(*rep.nu_min, NormalizedValue{Rational(-8, 3), Rational(8, 3)}) == 0);
  // nu_min^2 = 8/3 as a normalized value.
  CHECK(rep.nu_min->numerator * rep.nu_min->numerator / rep.nu_min->normsq == Rational(8, 3));
  CHECK(rep.scope == "standard-apartment");
}

TEST_CASE("optimal destabilizer of a stable state") {
  StateSet S = make_state({{1, 0, 1}, {0, 2, 0}});
  DestabilizerReport rep = optimal_destabilizer(S, 2);
  CHECK(rep.status == StabilityStatus::Stable);
  CHECK_FALSE(rep.direction.has_value());
  CHECK_FALSE(rep.nu_min.has_value());
}

TEST_CASE("optimal destabilizer of the segment state") {
  StateSet S = make_state({{3, 0, 0}, {0, 3, 0}});
  DestabilizerReport rep = optimal_destabilizer(S, 3);
  CHECK(rep.status == StabilityStatus::Unstable);
  CHECK(rep.direction->canonical == WeightVector{1, 1, 0});
  // Reported on the primitive integer representative (1, 1, -2).
  CHECK(rep.nu_min->numerator == Rational(-3));
  CHECK(rep.nu_min->normsq == Rational(6));
  CHECK(cmp_normalized(*rep.nu_min, NormalizedValue{Rational(-3, 2), Rational(3, 2)}) == 0);
  // Cross-check against the normalized weight at the direction itself.
  WeightReport wr = mu_report(S, {1, 1, -2});
  CHECK(cmp_normalized(*wr.nu, *rep.nu_min) == 0);
}

TEST_CASE("face-enumeration oracle on the frozen cases") {
  for (auto [chars, degree] :
       std::vector<std::pair<std::vector<std::vector<long long>>, long long>>{
           {{{2, 0, 0}}, 2},
           {{{3, 0, 0}, {0, 3, 0}}, 3},
           {{{1, 0, 1}, {0, 2, 0}}, 2},
           {{{2, 0}, {0, 2}, {1, 1}}, 2},
       }) {
    StateSet S = make_state(chars);
    MinNormResult fast = min_norm_point(S, degree);
    MinNormResult slow = min_norm_point_oracle(S, degree);
    CHECK(fast.q == slow.q);
    CHECK(fast.normsq == slow.normsq);
  }
}

TEST_CASE("optimizer equals oracle on randomized states") {
  std::mt19937 rng(20250816);
  std::uniform_int_distribution<int> dim(2, 5), count(1, 8), entry(-5, 5);
  int done = 0;
  while (done < 60) {
    const int n = dim(rng);
    const int m = count(rng);
    std::vector<std::vector<long long>> chars;
    long long degree = 0;
    for (int i = 0; i < m; ++i) {
      std::vector<long long> chi(n);
      long long sum = 0;
      for (int j = 0; j + 1 < n; ++j) {
        chi[j] = entry(rng);
        sum += chi[j];
      }
      if (i == 0) {
        chi[n - 1] = entry(rng);
        degree = sum + chi[n - 1];
      } else {
        chi[n - 1] = degree - sum;
        if (chi[n - 1] < -5 || chi[n - 1] > 5) continue;  // keep entries bounded
      }
      chars.push_back(std::move(chi));
    }
    if (chars.empty()) continue;
    StateSet S = make_state(chars);
    MinNormResult fast = min_norm_point(S, degree);
    MinNormResult slow = min_norm_point_oracle(S, degree);
    CHECK(fast.q == slow.q);
    CHECK(fast.normsq == slow.normsq);
    ++done;
  }
}

TEST_CASE("oracle caps its exhaustive search") {
  std::vector<std::vector<long long>> chars;
  for (long long i = 0; i < 13; ++i) chars.push_back({i, 12 - i});
  StateSet S = make_state(chars);
  CHECK_THROWS_AS(min_norm_point_oracle(S, 12), TooLarge);
  CHECK_NOTHROW(min_norm_point(S, 12));
}

TEST_CASE("destabilizer verification is invariant under relabeling") {
  // Same state in two presentation orders gives the same optimum.
  StateSet A = make_state({{3, 0, 0}, {0, 3, 0}, {0, 0, 3}});
  StateSet B = make_state({{0, 0, 3}, {3, 0, 0}, {0, 3, 0}});
  MinNormResult ra = min_norm_point(A, 3);
  MinNormResult rb = min_norm_point(B, 3);
  CHECK(ra.q == rb.q);
  CHECK(ra.is_zero());  // simplex of the three vertices contains its center
}
