#include <doctest.h>

#include "gzkit/linalg.hpp"

using namespace gzkit;

TEST_CASE("rank, kernel and solve over Q") {
  Matrix<Rational> m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(m) == 2);
  auto ker = kernel(m, 3);
  REQUIRE(ker.size() == 1);
  for (const auto& row : m) {
    Rational dot = 0;
    for (int c = 0; c < 3; ++c) dot += row[c] * ker[0][c];
    CHECK(dot == 0);
  }
  auto x = solve(m, {Rational(4), Rational(8), Rational(2)}, 3);
  REQUIRE(x.has_value());
  CHECK(!solve(m, {Rational(1), Rational(1), Rational(1)}, 3).has_value());
}

TEST_CASE("solve over Q(z)") {
  RationalFunction z = RationalFunction::var(VarId::param(1));
  Matrix<RationalFunction> m{{z, RationalFunction(1)}, {RationalFunction(1), z}};
  auto x = solve(m, {RationalFunction(1), RationalFunction(0)}, 2);
  REQUIRE(x.has_value());
  CHECK((*x)[0] * z + (*x)[1] == RationalFunction(1));
  CHECK((*x)[0] + (*x)[1] * z == RationalFunction(0));
}
