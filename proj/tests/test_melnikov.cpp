#include <doctest.h>

#include "pencillab/melnikov.hpp"
#include "deformation_support.hpp"

using namespace pencillab;
using namespace pencillab::melnikov;
using pencillab::testing::Generator;
using pencillab::testing::normalized_lambdas;
using pencillab::testing::random_log_deformation;
using pencillab::testing::without_constant;
using pencillab::testing::X;
using pencillab::testing::Y;

namespace {

RationalVector rationals(std::initializer_list<long> values) {
  RationalVector out;
  for (long v : values) out.push_back(Rational(v));
  return out;
}

// A random P of the grouped shape f * sum A_i / f_i, constant term removed.
BivariatePoly structured_poly(Generator& gen, const Grouping& g, const Arrangement& arr) {
  BivariatePoly P;
  for (std::size_t i = 0; i < g.size(); ++i) P += gen.poly(g.degrees[i], 0.8) * *arr.f.divide_exact(g.polys[i]);
  return without_constant(P);
}

}  // namespace

TEST_CASE("log decomposition of a constructed form") {
  const Arrangement arr = arrangement::canonical_arrangement(2);
  const OneForm w = log_form(rationals({2, -1, -1}), arr) + exterior_derivative(X() * X());
  const auto dec = log_decompose(w, arr);
  REQUIRE(dec);
  CHECK(dec->lambdas == rationals({2, -1, -1}));
  CHECK(dec->P == X() * X());
}

TEST_CASE("log decomposition of an exact form") {
  Generator gen(3);
  const Arrangement arr = arrangement::canonical_arrangement(3);
  const BivariatePoly P = gen.poly(4, 0.7) + 7;
  const auto dec = log_decompose(exterior_derivative(P), arr);
  REQUIRE(dec);
  CHECK(dec->lambdas == RationalVector(4, Rational(0)));
  CHECK(dec->P == without_constant(P));
  CHECK_THROWS_AS(log_decompose(OneForm{X().pow(4), BivariatePoly()}, arr), InputError);
}

TEST_CASE("log decomposition round-trips normalized certificates") {
  Generator gen(5);
  for (int d = 2; d <= 4; ++d) {
    const Arrangement arr = arrangement::canonical_arrangement(d);
    for (int trial = 0; trial < 10; ++trial) {
      RationalVector lambdas;
      Rational total = 0;
      for (int p = 0; p < d; ++p) {
        lambdas.push_back(gen.rational());
        total += lambdas.back();
      }
      lambdas.push_back(-total);
      const BivariatePoly P = without_constant(gen.poly(d + 1, 0.6));
      const auto dec = log_decompose(log_form(lambdas, arr) + exterior_derivative(P), arr);
      REQUIRE(dec);
      CHECK(dec->lambdas == lambdas);
      CHECK(dec->P == P);
    }
  }
}

TEST_CASE("random forms are not log decomposable") {
  Generator gen(9);
  for (int d = 2; d <= 4; ++d) {
    const Arrangement arr = arrangement::canonical_arrangement(d);
    const LogSpaceAudit audit = log_space_audit(arr);
    CHECK(audit.forms_dim == (d + 1) * (d + 2));
    CHECK(audit.exact_codim_minus_one() == (d + 2) * (d - 1) / 2);
    CHECK(audit.decomposable_codim() == (d + 2) * (d - 1) / 2 + 1 - d);
    for (int trial = 0; trial < 10; ++trial) {
      OneForm w{gen.poly(d, 1.0, 50), gen.poly(d, 1.0, 50)};
      CHECK_FALSE(log_decompose(w, arr));
    }
  }
}

TEST_CASE("grouping by equal lambda") {
  const Arrangement arr = arrangement::canonical_arrangement(2);
  const Grouping g = group_lambdas(rationals({2, -1, -1}), arr);
  CHECK(g.groups == std::vector<std::vector<int>>{{0}, {1, 2}});
  CHECK(g.degrees == std::vector<int>{1, 2});
  CHECK(g.polys[1] == arr.forms[1] * arr.forms[2]);
  CHECK(group_lambdas(rationals({1, 0, -1}), arr).size() == 3);
  const Grouping one = group_lambdas(rationals({0, 0, 0}), arr);
  CHECK(one.size() == 1);
  CHECK(one.polys[0] == arr.f);
  CHECK(cross_group_vertices(one, arr).empty());
  CHECK(cross_group_vertices(g, arr).size() == 2);
  CHECK(consecutive_grouping({1, 2}, arr).groups == g.groups);
  CHECK_THROWS_AS(consecutive_grouping({2, 2}, arr), InputError);
}

TEST_CASE("structure of P for two groups") {
  Generator gen(21);
  const Arrangement arr = arrangement::canonical_arrangement(2);
  const Grouping g = consecutive_grouping({1, 2}, arr);
  const BivariatePoly A = gen.poly(1, 1.0);
  const PkStructure pk = pk_structure(g.polys[1] * A, g, arr);
  REQUIRE(pk.ok);
  CHECK(pk.shift == 0);
  CHECK(pk.A[0] == A);
  CHECK(pk.A[1].is_zero());

  const PkStructure whole = pk_structure(arr.f, g, arr);
  REQUIRE(whole.ok);
  CHECK(whole.A[0] == g.polys[0]);
  CHECK(whole.A[1].is_zero());

  const PkStructure shifted = pk_structure(arr.f + 5, g, arr);
  REQUIRE(shifted.ok);
  CHECK(shifted.shift == 5);

  const PkStructure bad = pk_structure(Y(), g, arr);
  CHECK_FALSE(bad.ok);
  CHECK(bad.violations.size() == 1);
}

TEST_CASE("structure cofactors re-expand for random grouped P") {
  Generator gen(23);
  for (int d = 2; d <= 5; ++d) {
    const Arrangement arr = arrangement::canonical_arrangement(d);
    for (const auto& partition : partitions(d + 1)) {
      const Grouping g = consecutive_grouping(partition, arr);
      const BivariatePoly P = structured_poly(gen, g, arr);
      const PkStructure pk = pk_structure(P, g, arr);
      REQUIRE(pk.ok);
      BivariatePoly sum = pk.shift;
      for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(pk.A[i].degree() <= g.degrees[i]);
        if (i > 0) CHECK(pk.A[i].coefficient(g.polys[i].leading_monomial()) == 0);
        sum += pk.A[i] * *arr.f.divide_exact(g.polys[i]);
      }
      CHECK(sum == P);
    }
  }
}

TEST_CASE("integer partitions") {
  CHECK(partitions(1) == std::vector<std::vector<int>>{{1}});
  CHECK(partitions(4) == std::vector<std::vector<int>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(partitions(7).size() == 15);
  CHECK(partitions(0).empty());
}

TEST_CASE("dimension audit over every partition") {
  for (int d = 2; d <= 6; ++d)
    for (const auto& partition : partitions(d + 1)) {
      const DimensionAudit audit = dimension_audit(d, partition);
      CAPTURE(d);
      CAPTURE(partition.size());
      CHECK(audit.consistent());
      CHECK(audit.single_offset_matches() == (partition.size() == 2));
    }
}

TEST_CASE("recursion on exact and pure log first orders") {
  Generator gen(31);
  const Arrangement arr = arrangement::canonical_arrangement(3);

  Deformation exact;
  exact.k = 1;
  exact.forms[1] = exterior_derivative(gen.poly(4, 0.7));
  const MelnikovOutcome a = francoise_recursion(exact, arr);
  REQUIRE(a.status == Status::LogCertificate);
  CHECK(a.order == 2);
  CHECK(a.certificate->lambdas == RationalVector(4, Rational(0)));
  CHECK(a.certificate->grouping.size() == 1);

  Deformation log;
  log.k = 1;
  log.forms[1] = log_form(rationals({3, 1, -1, -3}), arr);
  const MelnikovOutcome b = francoise_recursion(log, arr);
  REQUIRE(b.status == Status::LogCertificate);
  CHECK(b.certificate->grouping.size() == 4);
  CHECK(b.certificate->P.is_zero());

  Deformation generic;
  generic.k = 1;
  generic.forms[1] = OneForm{gen.poly(3, 1.0, 50), gen.poly(3, 1.0, 50)};
  const MelnikovOutcome c = francoise_recursion(generic, arr);
  CHECK(c.status == Status::Obstructed);
  CHECK(c.order == 1);
  CHECK(c.residual == generic.forms[1]);
}

TEST_CASE("constructed log deformations are certified with their grouping") {
  Generator gen(37);
  for (int d = 2; d <= 4; ++d) {
    const Arrangement arr = arrangement::canonical_arrangement(d);
    for (int k = 1; k <= 2; ++k)
      for (const auto& partition : partitions(d + 1)) {
        const Grouping g = consecutive_grouping(partition, arr);
        std::vector<Rational> mu;
        const Deformation def = random_log_deformation(gen, g, k, mu);
        const MelnikovOutcome out = francoise_recursion(def, arr);
        CAPTURE(d);
        CAPTURE(k);
        REQUIRE(out.status == Status::LogCertificate);
        CHECK(out.order == 2 * k);
        CHECK(out.certificate->grouping.groups == g.groups);
        CHECK(out.certificate->lambdas == normalized_lambdas(g, mu, arr.forms.size()));
      }
  }
}

TEST_CASE("recursion outcome is invariant under relatively exact noise") {
  Generator gen(41);
  for (int d = 2; d <= 4; ++d) {
    const Arrangement arr = arrangement::canonical_arrangement(d);
    const OneForm df = exterior_derivative(arr.f);
    for (int k = 1; k <= 2; ++k) {
      const Grouping g = consecutive_grouping(std::vector<int>(d + 1, 1), arr);
      std::vector<Rational> mu;
      Deformation def = random_log_deformation(gen, g, k, mu);
      def.forms[k] += gen.nonzero_rational() * df;
      for (int i = k + 1; i < 2 * k; ++i) def.forms[i] += exterior_derivative(gen.poly(d + 1, 0.6));
      def.forms[2 * k] += exterior_derivative(gen.poly(d + 1, 0.6)) + gen.rational() * df;
      const MelnikovOutcome out = francoise_recursion(def, arr);
      REQUIRE(out.status == Status::LogCertificate);
      CHECK(out.certificate->grouping.groups == g.groups);

      Deformation generic;
      generic.k = k;
      generic.forms[k] = OneForm{gen.poly(d, 1.0, 50), gen.poly(d, 1.0, 50)};
      const MelnikovOutcome plain = francoise_recursion(generic, arr);
      generic.forms[k] += exterior_derivative(gen.poly(d + 1, 0.6)) + gen.rational() * df;
      const MelnikovOutcome noisy = francoise_recursion(generic, arr);
      CHECK(plain.status == Status::Obstructed);
      CHECK(noisy.status == Status::Obstructed);
      CHECK(plain.order == k);
      CHECK(noisy.order == k);
    }
  }
}

TEST_CASE("a perturbed order 2k obstructs") {
  Generator gen(43);
  for (int d = 3; d <= 4; ++d) {
    const Arrangement arr = arrangement::canonical_arrangement(d);
    const Grouping g = consecutive_grouping(std::vector<int>(d + 1, 1), arr);
    for (int k = 1; k <= 2; ++k) {
      std::vector<Rational> mu;
      Deformation def = random_log_deformation(gen, g, k, mu);
      def.forms[2 * k] += OneForm{gen.poly(d, 1.0, 50), gen.poly(d, 1.0, 50)};
      const MelnikovOutcome out = francoise_recursion(def, arr);
      CHECK(out.status == Status::Obstructed);
      CHECK(out.order == 2 * k);
      CHECK(out.log.size() == 1);
    }
  }
}

TEST_CASE("malformed deformations are rejected") {
  const Arrangement arr = arrangement::canonical_arrangement(2);
  const OneForm w = exterior_derivative(X() * X());
  Deformation def;
  def.k = 0;
  def.forms[0] = w;
  CHECK_THROWS_AS(francoise_recursion(def, arr), InputError);
  def.k = 1;
  def.forms.clear();
  def.forms[3] = w;
  CHECK_THROWS_AS(francoise_recursion(def, arr), InputError);
  def.forms.clear();
  def.forms[2] = w;
  CHECK_THROWS_AS(francoise_recursion(def, arr), InputError);
  def.forms[1] = OneForm{X().pow(3), BivariatePoly()};
  CHECK_THROWS_AS(francoise_recursion(def, arr), InputError);
}

TEST_CASE("codimension and cyclicity bounds") {
  for (int d = 2; d <= 6; ++d) {
    CHECK(codim_and_cyclicity(d, std::vector<int>(d + 1, 1)).cyclicity_lower_bound == d * d - 2);
    CHECK(codim_and_cyclicity(d, {d + 1}).codim_minus_one == (d + 2) * (d - 1) / 2);
  }
  CHECK(codim_and_cyclicity(2, {3}).codim_minus_one == 2);
  CHECK(codim_and_cyclicity(2, {1, 2}).codim_minus_one == 2);
  CHECK_THROWS_AS(codim_and_cyclicity(2, {1, 1}), InputError);
  CHECK_THROWS_AS(codim_and_cyclicity(2, {0, 3}), InputError);
}

TEST_CASE("bounds agree with the tangent space rank") {
  for (int d = 2; d <= 5; ++d)
    for (const auto& partition : partitions(d + 1)) {
      CAPTURE(d);
      CHECK(tangent_codim_minus_one(d, partition) == codim_and_cyclicity(d, partition).codim_minus_one);
    }
}
