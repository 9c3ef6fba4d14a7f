#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "higgsatlas/core.hpp"
#include "higgsatlas/morse.hpp"

using namespace higgsatlas;

TEST_CASE("rational normalization and rendering") {
  CHECK(Rational(4, 6) == Rational(2, 3));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(3, -6).den() == 1 * 2);
  CHECK(Rational(0, -7).str() == "0");
  CHECK(Rational(12, 5).str() == "12/5");
  CHECK(Rational(6, 3).str() == "2");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic and ordering") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(2, 3) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 2) / Rational(3, 4) == Rational(2, 3));
  CHECK(Rational(-7, 3) < Rational(-2));
  CHECK(Rational(5, 7).abs() == Rational(5, 7));
  CHECK(Rational(-5, 7).abs() == Rational(5, 7));
  CHECK(floor_int(Rational(-10, 3)) == -4);
  CHECK(ceil_int(Rational(-10, 3)) == -3);
  CHECK(floor_int(Rational(10, 3)) == 3);
}

TEST_CASE("toledo invariant") {
  CHECK(toledo(Signature(1, 1), InvariantPair{1, 0}) == Rational(1));
  CHECK(toledo(Signature(2, 3), InvariantPair{0, 0}) == Rational(0));
  CHECK(toledo(Signature(2, 3), InvariantPair{2, 2}) == Rational(4, 5));
}

TEST_CASE("toledo shift invariance") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> small(1, 5);
  std::uniform_int_distribution<int> deg(-10, 10);
  for (int i = 0; i < 200; ++i) {
    const Signature sig(small(rng), small(rng));
    const InvariantPair inv{deg(rng), deg(rng)};
    const Int l = deg(rng);
    CHECK(toledo(sig, InvariantPair{inv.a + l * sig.p, inv.b + l * sig.q}) == toledo(sig, inv));
  }
}

TEST_CASE("toledo_max") {
  CHECK(toledo_max(Signature(1, 1), Curve(2)) == Rational(2));
  CHECK(toledo_max(Signature(2, 3), Curve(2)) == Rational(4));
  CHECK(toledo_max(Signature(3, 3), Curve(4)) == Rational(18));  // p(2g-2) when p=q
}

TEST_CASE("milnor_wood_ok") {
  CHECK(milnor_wood_ok(Signature(2, 3), Curve(2), InvariantPair{1, 0}));
  CHECK_FALSE(milnor_wood_ok(Signature(1, 1), Curve(2), InvariantPair{3, 0}));
  CHECK(milnor_wood_ok(Signature(4, 2), Curve(3), InvariantPair{0, 0}));
}

TEST_CASE("slope bounds report") {
  const auto r = slope_bounds_report(Signature(2, 3), Curve(2), InvariantPair{2, 0}, 0, 2);
  CHECK(r.all_ok());

  const auto gamma_fail = slope_bounds_report(Signature(1, 1), Curve(2), InvariantPair{2, 0}, 1, 0);
  CHECK_FALSE(gamma_fail.gamma_bound_ok);
  CHECK(gamma_fail.beta_bound_ok);

  CHECK(slope_bounds_report(Signature(3, 2), Curve(3), InvariantPair{0, 0}, 0, 0).all_ok());
  CHECK_THROWS_AS(slope_bounds_report(Signature(2, 3), Curve(2), InvariantPair{0, 0}, 3, 0),
                  std::invalid_argument);
}

TEST_CASE("expected and rigid dimensions") {
  CHECK(expected_dim_higgs(Signature(2, 3), Curve(2)) == 26);
  CHECK(expected_dim_higgs(Signature(1, 1), Curve(2)) == 5);
  CHECK(rigid_dim(Signature(2, 3), Curve(2)) == 19);
  CHECK(rigid_dim(Signature(1, 2), Curve(2)) == 7);
  CHECK(rigid_dim(Signature(3, 1), Curve(2)) == rigid_dim(Signature(1, 3), Curve(2)));
  CHECK_THROWS_AS(rigid_dim(Signature(2, 2), Curve(2)), std::invalid_argument);
  for (int p = 1; p <= 5; ++p)
    for (int q = 1; q <= 5; ++q)
      for (int g = 2; g <= 4; ++g)
        if (p != q)
          CHECK(rigid_dim(Signature(p, q), Curve(g)) <
                expected_dim_higgs(Signature(p, q), Curve(g)));
}

TEST_CASE("min energy equals |tau|/2 and both closed forms") {
  CHECK(min_energy(Signature(2, 3), InvariantPair{0, 0}) == Rational(0));
  CHECK(min_energy(Signature(1, 1), InvariantPair{1, 0}) == Rational(1, 2));
  CHECK(min_energy(Signature(2, 3), InvariantPair{2, 0}) == Rational(6, 5));

  std::mt19937 rng(5);
  std::uniform_int_distribution<int> small(1, 5);
  std::uniform_int_distribution<int> deg(-8, 8);
  for (int i = 0; i < 200; ++i) {
    const Signature sig(small(rng), small(rng));
    const InvariantPair inv{deg(rng), deg(rng)};
    // min_energy itself asserts the closed forms; also pin |tau|/2.
    CHECK(min_energy(sig, inv) == toledo(sig, inv).abs() / Rational(2));
  }
}

TEST_CASE("triple moduli dimension") {
  CHECK(triple_moduli_dim(2, 3, 4, 0, Curve(2)) == 20);
  CHECK(triple_moduli_dim(2, 1, 0, 0, Curve(2)) == 4);
  CHECK_THROWS_AS(triple_moduli_dim(2, 2, 1, 0, Curve(2)), std::invalid_argument);
}

TEST_CASE("triple dimension equals fiber plus base factors for n1 > n2") {
  // Oracle: dim = N + dim M(n1-n2, d1-d2) + dim M(n2, d2) with
  // dim M(n,d) = n^2(g-1)+1 and N = n2 d1 - n1 d2 + n2(n1-n2)(g-1) - 1.
  for (int g = 2; g <= 4; ++g) {
    for (int n1 = 2; n1 <= 5; ++n1) {
      for (int n2 = 1; n2 < n1; ++n2) {
        for (int d1 = -3; d1 <= 3; ++d1) {
          for (int d2 = -3; d2 <= 3; ++d2) {
            const Int gm1 = g - 1;
            const Int fiber = Int(n2) * d1 - Int(n1) * d2 + Int(n2) * (n1 - n2) * gm1 - 1;
            const Int base = (Int(n1 - n2) * (n1 - n2) * gm1 + 1) + (Int(n2) * n2 * gm1 + 1);
            CHECK(triple_moduli_dim(n1, n2, d1, d2, Curve(g)) == fiber + base);
          }
        }
      }
    }
  }
}

TEST_CASE("expected dimension cross-checked by Euler characteristics") {
  for (int p = 1; p <= 6; ++p)
    for (int q = 1; q <= 6; ++q)
      for (int g = 2; g <= 5; ++g)
        CHECK(deformation_dim(Signature(p, q), Curve(g)) ==
              expected_dim_higgs(Signature(p, q), Curve(g)));
}

TEST_CASE("domain type invariants") {
  CHECK_THROWS_AS(Signature(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(Curve(1), std::invalid_argument);
  CHECK(Signature(4, 6).k() == 2);
  CHECK(Signature(4, 6).n() == 10);
  CHECK(Curve(3).deg_canonical() == 4);
}
