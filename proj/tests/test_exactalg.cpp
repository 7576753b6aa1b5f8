#include <doctest.h>

#include <random>

#include "gzkit/exactalg.hpp"

using namespace gzkit;

namespace {

Polynomial X(int i, int j) { return Polynomial::var(VarId::x(i, j)); }
Polynomial Z(int t) { return Polynomial::var(VarId::param(t)); }

Polynomial random_poly(std::mt19937& rng, int nvars, int max_deg, int max_terms) {
  std::uniform_int_distribution<int> coef(-5, 5), deg(0, max_deg), terms(1, max_terms), var(0, nvars - 1);
  Polynomial p;
  int n = terms(rng);
  for (int t = 0; t < n; ++t) {
    int d = deg(rng);
    Polynomial m(coef(rng));
    for (int e = 0; e < d; ++e) {
      int v = var(rng);
      m *= X(1 + v / 3, 1 + v % 3);
    }
    p += m;
  }
  return p;
}

RationalFunction random_rf(std::mt19937& rng, int nvars) {
  Polynomial d;
  while (d.is_zero()) d = random_poly(rng, nvars, 2, 3);
  return RationalFunction::normalize(random_poly(rng, nvars, 3, 3), d);
}

}  // namespace

TEST_CASE("rational parsing and rendering") {
  CHECK(render_rational(parse_rational("6/4")) == "3/2");
  CHECK(render_rational(parse_rational("-7")) == "-7");
  CHECK_THROWS_AS(parse_rational("1/0"), DivisionByZero);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("canonical rendering") {
  Polynomial p = X(1, 1) + X(1, 2) + 1;
  CHECK(p.render() == "x[1,1]+x[1,2]+1");
  Polynomial q = X(1, 1) * X(1, 1) * Rational(3) - Z(1);
  CHECK(q.render() == "3*x[1,1]^2-z[1]");
  CHECK(RationalFunction::normalize(1, X(1, 1) - X(1, 2)).render() == "(1)/(x[1,1]-x[1,2])");
  CHECK(Polynomial().render() == "0");
}

TEST_CASE("term order: parameters before module variables, row-major") {
  CHECK(VarId::param(5) < VarId::x(1, 1));
  CHECK(VarId::x(1, 2) < VarId::x(2, 1));
  Polynomial p = Z(1) + X(2, 1) + X(1, 1);
  // lex tie-break: earlier variables lead
  CHECK(p.render() == "z[1]+x[1,1]+x[2,1]");
}

TEST_CASE("normalize") {
  Polynomial x = X(1, 1), y = X(1, 2);
  CHECK(RationalFunction::normalize(x - y, x - y) == RationalFunction(1));
  CHECK(RationalFunction::normalize(x * x - y * y, x - y) == RationalFunction(x + y));
  // oracle: y * (x^2 - xy) == x^2 y - x y^2 and the quotient has denominator 1
  Polynomial num = x * x * y - x * y * y, den = x * x - x * y;
  CHECK(y * den == num);
  CHECK(RationalFunction::normalize(num, den) == RationalFunction(y));
  CHECK_THROWS_AS(RationalFunction::normalize(x, Polynomial()), DivisionByZero);
  RationalFunction r = RationalFunction::normalize(x, Polynomial(3) * y + 6);
  CHECK(r.den().leading().coef == 1);
}

TEST_CASE("arith") {
  RationalFunction x = RationalFunction::var(VarId::x(1, 1)), y = RationalFunction::var(VarId::x(1, 2));
  CHECK(arith(x, x, ArithOp::Div) == RationalFunction(1));
  RationalFunction inv = RationalFunction(1) / (x - y);
  CHECK(arith(inv, inv, ArithOp::Sub).is_zero());
  CHECK((inv + RationalFunction(1) / (y - x)).is_zero());
  CHECK_THROWS_AS(arith(x, RationalFunction(), ArithOp::Div), DivisionByZero);
}

TEST_CASE("substitute") {
  VarId a = VarId::x(1, 1), b = VarId::x(1, 2);
  RationalFunction x = RationalFunction::var(a), y = RationalFunction::var(b);
  std::map<VarId, RationalFunction> shift{{a, x + 1}};
  CHECK(x.substitute(shift) == x + 1);
  RationalFunction f = RationalFunction(1) / (x - y);
  std::map<VarId, RationalFunction> swap{{a, y}, {b, x}};
  CHECK(f.substitute(swap) == -f);
  // binomial oracle: (z+2)^2 = sum_k C(2,k) z^k 2^(2-k)
  RationalFunction z = RationalFunction::var(VarId::param(1));
  std::map<VarId, RationalFunction> eval{{a, z + 2}};
  RationalFunction expected;
  const int binom[] = {1, 2, 1};
  RationalFunction zk(1);
  for (int k = 0; k <= 2; ++k) {
    expected += zk * RationalFunction(binom[k] * (1 << (2 - k)));
    zk *= z;
  }
  CHECK((x * x).substitute(eval) == expected);
  CHECK((x * x).substitute(eval).render() == "z[1]^2+4*z[1]+4");
  std::map<VarId, RationalFunction> kill{{a, y}};
  CHECK_THROWS_AS(f.substitute(kill), SingularSubstitution);
  std::map<VarId, RationalFunction> identity{{a, x}, {b, y}};
  CHECK(f.substitute(identity) == f);
}

TEST_CASE("is_polynomial") {
  Polynomial x = X(1, 1), y = X(1, 2);
  CHECK(RationalFunction::normalize(x * x - y * y, x - y).is_polynomial());
  CHECK_FALSE(RationalFunction::normalize(1, x - y).is_polynomial());
}

TEST_CASE("gcd") {
  Polynomial x = X(1, 1), y = X(1, 2), z = X(2, 1);
  Polynomial g = x * y - z + 2;
  Polynomial a = g * (x + y * z), b = g * (x * x - z);
  CHECK(gcd(a, b) == g.monic());
  CHECK(gcd(x * x * y, x * y * y) == x * y);
  CHECK(gcd(x + 1, y + 1).is_one());
}

TEST_CASE("canonical form under rescaling") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial n = random_poly(rng, 4, 3, 3), d;
    while (d.is_zero()) d = random_poly(rng, 4, 2, 3);
    Polynomial c = random_poly(rng, 4, 2, 2);
    if (c.is_zero()) continue;
    Rational s(trial % 7 + 1, 3);
    auto r1 = RationalFunction::normalize(n, d);
    auto r2 = RationalFunction::normalize((n * c).scaled(s), (d * c).scaled(s));
    REQUIRE(r1 == r2);
    REQUIRE(r1.render() == r2.render());
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    auto a = random_rf(rng, 6), b = random_rf(rng, 6), c = random_rf(rng, 6);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a - a).is_zero());
    if (!a.is_zero()) REQUIRE(a * a.inverse() == RationalFunction(1));
  }
}

TEST_CASE("substitution is a homomorphism and shifts commute") {
  std::mt19937 rng(3);
  VarId a = VarId::x(1, 1), b = VarId::x(1, 2);
  std::map<VarId, RationalFunction> sa{{a, RationalFunction::var(a) + 1}};
  std::map<VarId, RationalFunction> sb{{b, RationalFunction::var(b) + 1}};
  std::map<VarId, RationalFunction> mix{{a, RationalFunction::var(b) * 2 + 1}, {b, RationalFunction::var(VarId::param(1))}};
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_rf(rng, 4), g = random_rf(rng, 4);
    try {
      REQUIRE((f * g).substitute(mix) == f.substitute(mix) * g.substitute(mix));
      REQUIRE((f + g).substitute(mix) == f.substitute(mix) + g.substitute(mix));
    } catch (const SingularSubstitution&) {
    }
    REQUIRE(f.substitute(sa).substitute(sb) == f.substitute(sb).substitute(sa));
  }
}
