#include <doctest.h>

#include "pencillab/forms.hpp"
#include "pencillab/linear.hpp"
#include "pencillab/sturm.hpp"
#include "support.hpp"

using namespace pencillab;
using pencillab::testing::Generator;
using pencillab::testing::X;
using pencillab::testing::Y;

TEST_CASE("rationals parse and print in lowest terms") {
  CHECK(to_string(parse_rational("6/-4")) == "-3/2");
  CHECK(to_string(parse_rational(" 10 ")) == "10");
  CHECK(parse_rational("-4/27") == Rational(-4, 27));
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
}

TEST_CASE("zero polynomial degree is a sentinel") {
  const BivariatePoly zero;
  CHECK(zero.degree().is_minus_infinity());
  CHECK_THROWS(zero.degree().value());
  CHECK(zero.degree() < BivariatePoly(3).degree());
  CHECK((zero.degree() + Degree(4)).is_minus_infinity());
  CHECK(UnivariatePoly().degree().is_minus_infinity());
}

TEST_CASE("canonical printing uses grevlex with x > y") {
  const BivariatePoly p = X() * X() * Y() + Y() * Y() * Y() + X() * X() * X() - Rational(1, 2) * Y() + 3;
  CHECK(to_string(p) == "x^3 + x^2*y + y^3 - 1/2*y + 3");
}

TEST_CASE("exterior derivative") {
  const OneForm dxy = exterior_derivative(X() * Y());
  CHECK(dxy.a == Y());
  CHECK(dxy.b == X());

  const TwoForm dy_dx = exterior_derivative(OneForm{Y(), BivariatePoly()});
  CHECK(dy_dx.g == BivariatePoly(-1));

  const BivariatePoly p = X().pow(3) * Y().pow(2) - 7 * X();
  CHECK(exterior_derivative(exterior_derivative(p)).is_zero());
}

TEST_CASE("wedge product") {
  CHECK(wedge(dx_form(), dy_form()).g == BivariatePoly(1));
  Generator gen(11);
  const OneForm w = gen.form(3);
  CHECK(wedge(w, w).is_zero());

  const BivariatePoly f = X() * Y();
  const OneForm df = exterior_derivative(f);
  const OneForm rot{-f.dy(), f.dx()};
  CHECK(wedge(df, rot).g == X() * X() + Y() * Y());
}

TEST_CASE("deg1 is the pole order at infinity minus two") {
  CHECK(deg1(OneForm{BivariatePoly(), X()}) == 1);
  CHECK(deg1(OneForm{-Y(), X()}) == 0);
  CHECK(deg1(dx_form()) == 0);
  CHECK_THROWS_WITH_AS(deg1(OneForm{}), "undefined degree", std::domain_error);

  Generator gen(5);
  for (int d = 1; d <= 6; ++d) {
    BivariatePoly f = gen.poly(d + 1);
    f += gen.homogeneous(d + 1, 3);
    if (f.degree() != Degree(d + 1)) continue;
    CHECK(deg1(exterior_derivative(f)) == d);
  }
}

TEST_CASE("property: Leibniz rule, antisymmetry, deg1 representation bound") {
  Generator gen(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const BivariatePoly p = gen.poly(gen.integer(0, 4));
    const BivariatePoly q = gen.poly(gen.integer(0, 4));
    const OneForm lhs = exterior_derivative(p * q);
    const OneForm rhs = p * exterior_derivative(q) + q * exterior_derivative(p);
    CHECK(lhs == rhs);

    const OneForm u = gen.form(3);
    const OneForm v = gen.form(3);
    CHECK(wedge(u, v).g == -wedge(v, u).g);

    const int d = gen.integer(1, 5);
    const BivariatePoly pp = gen.poly(d);
    const BivariatePoly qq = gen.poly(d);
    const BivariatePoly g = gen.coin() ? gen.homogeneous(d) : BivariatePoly();
    const OneForm w = OneForm{-qq, pp} + g * OneForm{-Y(), X()};
    if (!w.is_zero()) {
      CHECK(deg1(w) <= d);
      const int gap = w.degree().value() - deg1(w);
      CHECK((gap == 0 || gap == 1));
    }
  }
}

TEST_CASE("closed forms integrate exactly") {
  Generator gen(3);
  for (int trial = 0; trial < 20; ++trial) {
    const BivariatePoly p = gen.poly(5);
    const auto back = integrate_closed(exterior_derivative(p));
    REQUIRE(back.has_value());
    CHECK(exterior_derivative(*back) == exterior_derivative(p));
    CHECK(back->coefficient({0, 0}) == 0);
  }
  CHECK_FALSE(integrate_closed(OneForm{Y(), BivariatePoly()}).has_value());
}

TEST_CASE("polynomial division and univariate gcd") {
  const BivariatePoly a = X() + Y() - 1;
  const BivariatePoly b = X() * X() - 3 * Y();
  const auto q = (a * b).divide_exact(a);
  REQUIRE(q.has_value());
  CHECK(*q == b);
  CHECK_FALSE(b.divide_exact(a).has_value());

  const UnivariatePoly t = UnivariatePoly::t();
  const UnivariatePoly p = t * t * (t - UnivariatePoly(1));
  CHECK(gcd(p, p.derivative()) == t);
  CHECK(squarefree_part(p) == t * (t - UnivariatePoly(1)));
  const auto dec = squarefree_decomposition(p);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].first == t - UnivariatePoly(1));
  CHECK(dec[0].second == 1);
  CHECK(dec[1].first == t);
  CHECK(dec[1].second == 2);
}

TEST_CASE("solve_linear fixed examples") {
  RationalMatrix id = RationalMatrix::identity(2);
  const RationalVector rhs{2, 3};
  LinearSolution s = solve_linear(id, rhs);
  REQUIRE(s.feasible);
  CHECK(s.particular == RationalVector{2, 3});
  CHECK(s.nullspace.empty());

  RationalMatrix row(1, 2);
  row(0, 0) = 1;
  row(0, 1) = 1;
  s = solve_linear(row, RationalVector{0});
  REQUIRE(s.feasible);
  CHECK(s.particular == RationalVector{0, 0});
  REQUIRE(s.nullspace.size() == 1);
  CHECK(s.nullspace[0] == RationalVector{-1, 1});

  RationalMatrix inconsistent(2, 1);
  inconsistent(0, 0) = 1;
  inconsistent(1, 0) = 2;
  CHECK_FALSE(solve_linear(inconsistent, RationalVector{1, 1}).feasible);
}

namespace {

void check_solution_against_oracle(const RationalMatrix& m, const RationalVector& rhs) {
  const LinearSolution s = solve_linear(m, rhs);
  const auto oracle = pencillab::testing::naive_solve(m, rhs);
  REQUIRE(s.feasible == oracle.particular.has_value());
  CHECK(s.rank == oracle.rank);
  if (!s.feasible) return;
  CHECK(s.nullspace.size() == m.cols() - s.rank);
  CHECK(m.apply(s.particular) == rhs);
  const RationalVector zero(m.rows(), Rational(0));
  for (const auto& n : s.nullspace) CHECK(m.apply(n) == zero);
  if (s.rank == m.cols()) CHECK(s.particular == *oracle.particular);
}

}  // namespace

TEST_CASE("solve_linear matches naive elimination: 5x5 system") {
  Generator gen(55);
  const RationalMatrix m = gen.matrix(5, 5, 0.0);
  RationalVector rhs(5);
  for (auto& r : rhs) r = gen.rational(9);
  check_solution_against_oracle(m, rhs);
}

TEST_CASE("property: solve_linear matches naive elimination on 100 random systems") {
  Generator gen(77);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(gen.integer(1, 20));
    const std::size_t cols = static_cast<std::size_t>(gen.integer(1, 20));
    RationalMatrix m = gen.matrix(rows, cols, 0.5);
    // Plant dependencies so that rank deficiency is common.
    if (rows > 2 && gen.coin()) {
      for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * 2 - m(1, j);
    }
    RationalVector rhs(rows);
    if (gen.coin()) {
      RationalVector x(cols);
      for (auto& v : x) v = gen.rational(4);
      rhs = m.apply(x);
    } else {
      for (auto& v : rhs) v = gen.rational(4);
    }
    check_solution_against_oracle(m, rhs);
  }
}

TEST_CASE("Bareiss determinant") {
  IntegerMatrix m(3, 3);
  const int vals[3][3] = {{0, 2, 1}, {1, 1, 0}, {3, 0, 5}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = vals[i][j];
  CHECK(determinant(m) == -13);
  CHECK(determinant(IntegerMatrix::identity(4)) == 1);
}

TEST_CASE("Sturm sign counts") {
  const UnivariatePoly t = UnivariatePoly::t();
  const UnivariatePoly ex11 = t * t * (t * t - UnivariatePoly(Rational(4, 27)));
  RootSigns r = sturm_sign_counts(ex11);
  CHECK(r.distinct == SignCounts{1, 1, 1});
  CHECK(r.zero_multiplicity == 2);

  r = sturm_sign_counts(t * (t + UnivariatePoly(Rational(1, 27))));
  CHECK(r.distinct == SignCounts{1, 1, 0});
  CHECK(r.zero_multiplicity == 1);

  r = sturm_sign_counts(t * t + UnivariatePoly(1));
  CHECK(r.distinct == SignCounts{0, 0, 0});
  CHECK(r.zero_multiplicity == 0);

  // (t+1)^3 (t-2)(t-3)(t^2+1): two positive, one negative, repeated root counted once.
  const UnivariatePoly q = (t + UnivariatePoly(1)) * (t + UnivariatePoly(1)) * (t + UnivariatePoly(1)) *
                           (t - UnivariatePoly(2)) * (t - UnivariatePoly(3)) * (t * t + UnivariatePoly(1));
  CHECK(sturm_sign_counts(q).distinct == SignCounts{1, 0, 2});
  CHECK_THROWS_AS(sturm_sign_counts(UnivariatePoly()), std::domain_error);
}

TEST_CASE("echelon basis membership") {
  EchelonBasis b(3);
  CHECK(b.insert(RationalVector{1, 2, 3}));
  CHECK(b.insert(RationalVector{0, 1, 1}));
  CHECK_FALSE(b.insert(RationalVector{2, 5, 7}));
  CHECK(b.contains(RationalVector{1, 3, 4}));
  CHECK_FALSE(b.contains(RationalVector{0, 0, 1}));
  CHECK(b.rank() == 2);
}
