// Exact rational sl2 checks on the truncated polynomial space.
#include <doctest.h>

#include "cecoh/verma.hpp"

using namespace cecoh;

TEST_CASE("operator matrices are the pinned ones") {
  VermaOperators ops = verma_operators(Rational(5) / 3, 4);
  REQUIRE(ops.e.matrix.rows() == 5);
  CHECK(ops.e.matrix(0, 1) == 1);
  CHECK(ops.e.matrix(2, 3) == 3);
  CHECK(ops.e.matrix(3, 4) == 4);
  CHECK(ops.e.matrix(1, 0) == 0);
  CHECK(ops.h.matrix(0, 0) == Rational(5) / 3);
  CHECK(ops.h.matrix(2, 2) == Rational(5) / 3 - 4);
  CHECK(ops.f.matrix(1, 0) == Rational(5) / 3);
  CHECK(ops.f.matrix(4, 3) == Rational(5) / 3 - 3);
  CHECK(ops.f.matrix(0, 4) == 0);  // x^5 truncates away

  CHECK_THROWS_AS(verma_operators(Rational(1), 2), InputError);
}

TEST_CASE("sl2 relations hold exactly below the truncation edge") {
  for (int N : {4, 6, 9}) {
    for (Rational lam : {Rational(2), Rational(1) / 2, Rational(-3) / 7}) {
      VermaOperators ops = verma_operators(lam, N);
      auto checks = check_sl2_relations(ops);
      REQUIRE(checks.size() == 3);
      // [h,e] and [h,f] are insensitive to the truncation
      CHECK(checks[0].name == "[h,e] - 2e");
      CHECK(checks[0].max_abs_violation == 0);
      CHECK(checks[1].max_abs_violation == 0);
      // [e,f] - h fails exactly at degree N with value (N+1)(N - lambda)
      CHECK(checks[2].name == "[e,f] - h");
      CHECK(checks[2].exact_through(N - 1));
      CHECK(!checks[2].exact_through(N));
      Rational v = (N - lam) * (N + 1);
      if (v < 0) v = -v;
      CHECK(checks[2].max_abs_violation == v);
    }
  }
  // integral weight: the truncation is invariant and all relations are exact
  auto integrable = check_sl2_relations(verma_operators(Rational(6), 6));
  CHECK(integrable[2].max_abs_violation == 0);
  CHECK(integrable[2].exact_through(6));
}

TEST_CASE("weight-shift direction is an exact cocycle") {
  for (int N : {4, 5, 7, 10}) {
    for (Rational lam : {Rational(1), Rational(22) / 7, Rational(-5) / 3}) {
      CocycleCheck cc = check_deformation_cocycle(lam, N);
      CHECK(cc.passed);
      CHECK(cc.verified_degree == N - 2);
      REQUIRE(cc.components.size() == 3);
      CHECK(cc.components[0].name == "c^e c^h");
      CHECK(cc.components[0].max_abs_violation == 0);  // identically zero
      CHECK(cc.components[2].name == "c^h c^f");
      CHECK(cc.components[2].max_abs_violation == 0);  // identically zero
      // the c^e c^f slot feels the truncation only in the top column
      CHECK(cc.components[1].exact_through(N - 1));
      CHECK(!cc.components[1].exact_on_degree[N]);
      CHECK(cc.components[1].max_abs_violation == N + 1);
    }
  }
  CHECK_THROWS_AS(check_deformation_cocycle(Rational(1), 3), InputError);
}

TEST_CASE("a non-cocycle direction is flagged") {
  const int N = 6;
  VermaOperators ops = verma_operators(Rational(3) / 2, N);
  RationalMatrix x2 = poly_mult_x(N) * poly_mult_x(N);
  CocycleCheck cc =
      deformation_cocycle_residual(ops, RationalMatrix::Identity(N + 1), x2);
  CHECK(!cc.passed);
  // fails at the bottom of the spectrum, not merely at the truncation edge
  CHECK(!cc.components[1].exact_on_degree[0]);
}

TEST_CASE("rational matrix arithmetic stays exact") {
  RationalMatrix a(2, 2);
  a(0, 0) = Rational(1) / 3;
  a(0, 1) = Rational(1) / 7;
  a(1, 0) = Rational(-2) / 5;
  RationalMatrix b = a * a;
  CHECK(b(0, 0) == Rational(1) / 9 - Rational(2) / 35);
  CHECK(b(0, 1) == Rational(1) / 21);
  RationalMatrix c = a - a;
  CHECK(c.isZero());
  CHECK((Rational(3) * a)(1, 0) == Rational(-6) / 5);
  CHECK(a.maxAbs() == Rational(2) / 5);
  CHECK_THROWS_AS(a * RationalMatrix(3, 3), InputError);
}
