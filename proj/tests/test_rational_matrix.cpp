#include "doctest.h"

#include "destab/errors.hpp"
#include "destab/matrix.hpp"
#include "destab/rational.hpp"

using namespace destab;

TEST_CASE("rational parsing canonicalizes and rejects non-rationals") {
  CHECK(rat_str(rat_parse("3/6")) == "1/2");
  CHECK(rat_str(rat_parse("-4/2")) == "-2");
  CHECK(rat_str(rat_parse("0/5")) == "0");
  CHECK(rat_str(rat_parse("7")) == "7");
  CHECK(rat_parse("-3/9") == Rational(-1, 3));
  CHECK_THROWS_AS(rat_parse("1.5"), InputError);
  CHECK_THROWS_AS(rat_parse("1e3"), InputError);
  CHECK_THROWS_AS(rat_parse("x"), InputError);
  CHECK_THROWS_AS(rat_parse("1/0"), InputError);
  CHECK_THROWS_AS(rat_parse(""), InputError);
}

TEST_CASE("rational helpers") {
  CHECK(rat_is_integer(rat_parse("8/4")));
  CHECK_FALSE(rat_is_integer(rat_parse("8/3")));
  CHECK(rat_to_ll(rat_parse("-12")) == -12);
  CHECK(rat_of(7) == Rational(7));
  CHECK(rat_of(-3) * rat_of(2) == Rational(-6));

  RationalVec u{Rational(1), Rational(2), Rational(-1)};
  RationalVec v{Rational(3), Rational(1, 2), Rational(0)};
  CHECK(dot(u, v) == Rational(4));
  CHECK(norm_squared(u) == Rational(6));
  CHECK(is_zero_vec(RationalVec{Rational(0), Rational(0)}));
  CHECK_FALSE(is_zero_vec(u));
}

TEST_CASE("decimal rendering of rationals is stable") {
  CHECK(rat_approx(Rational(1, 2)) == "0.5");
  CHECK(rat_approx(Rational(-8, 3)) == rat_approx(Rational(-8, 3)));
}

static ExactMatrix mat(const std::vector<std::vector<long long>>& rows) {
  std::vector<RationalVec> conv;
  for (const auto& r : rows) {
    RationalVec row;
    for (long long v : r) row.push_back(rat_of(v));
    conv.push_back(std::move(row));
  }
  return ExactMatrix::from_rows(conv);
}

TEST_CASE("reduced row echelon form is the unique canonical basis") {
  // Two different spanning sets of the same row space echelonize identically.
  ExactMatrix a = mat({{1, 2, 3}, {2, 4, 7}});
  ExactMatrix b = mat({{3, 6, 10}, {1, 2, 4}});
  std::size_t ra = 0, rb = 0;
  CHECK(a.reduced_echelon(&ra) == b.reduced_echelon(&rb));
  CHECK(ra == 2);
  CHECK(rb == 2);

  ExactMatrix c = mat({{1, 2}, {2, 4}});
  std::size_t rc = 0;
  ExactMatrix e = c.reduced_echelon(&rc);
  CHECK(rc == 1);
  CHECK(e.rows() == 1);
  CHECK(e.at(0, 0) == 1);
  CHECK(e.at(0, 1) == 2);
}

TEST_CASE("determinant, inverse and solve") {
  ExactMatrix m = mat({{2, 1}, {1, 1}});
  CHECK(m.determinant() == 1);
  CHECK(mat({{1, 2}, {2, 4}}).determinant() == 0);
  CHECK(mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}).determinant() == -1);

  auto inv = m.inverse();
  REQUIRE(inv.has_value());
  CHECK((*inv * m) == ExactMatrix::identity(2));
  CHECK_FALSE(mat({{1, 2}, {2, 4}}).inverse().has_value());

  RationalVec rhs{rat_of(3), rat_of(2)};
  auto x = m.solve(rhs);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
}

TEST_CASE("matrix multiplication with exact fractions") {
  ExactMatrix half = ExactMatrix::identity(2);
  half.at(0, 0) = Rational(1, 2);
  ExactMatrix twice = ExactMatrix::identity(2);
  twice.at(0, 0) = Rational(2);
  CHECK((half * twice) == ExactMatrix::identity(2));
}
