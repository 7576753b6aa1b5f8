#include <doctest.h>

#include <random>

#include "gzkit/skewops.hpp"

using namespace gzkit;

namespace {

RationalFunction X(int i, int j) { return RationalFunction::var(VarId::x(i, j)); }

RationalFunction random_rf(std::mt19937& rng, const Composition& lam) {
  std::uniform_int_distribution<int> coef(-3, 3), pick(0, lam.size() - 1), len(0, 3);
  auto poly = [&]() {
    Polynomial p(coef(rng));
    for (int t = 0; t < 2; ++t) {
      Polynomial m(coef(rng));
      for (int e = len(rng); e > 0; --e) m *= Polynomial::var(lam.var_flat(pick(rng)));
      p += m;
    }
    return p;
  };
  Polynomial d;
  while (d.is_zero()) d = poly();
  return RationalFunction::normalize(poly(), d);
}

AffineSymmetry random_symmetry(std::mt19937& rng, const Composition& lam) {
  auto elems = YoungSubgroup::full(lam).elements();
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  std::uniform_int_distribution<int> off(-2, 2);
  ShiftVector s(lam.size());
  for (int a = 0; a < lam.lattice_rank(); ++a) s[a] = off(rng);
  return AffineSymmetry{elems[pick(rng)], s};
}

SkewOperator random_operator(std::mt19937& rng, const Composition& lam, int terms) {
  SkewOperator op(lam);
  for (int t = 0; t < terms; ++t) op.add_term(random_symmetry(rng, lam), random_rf(rng, lam));
  return op;
}

// random G-invariant polynomial of degree <= 4
Polynomial random_invariant(std::mt19937& rng, const Composition& lam) {
  auto family = invariant_family(lam, 4);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<std::size_t> pick(0, family.size() - 1);
  Polynomial f;
  for (int t = 0; t < 4; ++t) f += family[pick(rng)].value * Polynomial(coef(rng));
  return f;
}

}  // namespace

TEST_CASE("generators for lambda=(1,1)") {
  Composition lam({1, 1});
  auto g = build_generators(lam);
  SkewOperator expectedE = SkewOperator::symmetry(lam, AffineSymmetry::phi(lam, {1, 1}), X(1, 1) - X(2, 1));
  CHECK(g.e(1) == expectedE);
  CHECK(g.f(1) == SkewOperator::phi(lam, {1, 1}, -1));
  // direct substitution: x11 -> x11 + 1, times (x11 - x21)
  CHECK(g.e(1).apply(X(1, 1)) == (X(1, 1) - X(2, 1)) * (X(1, 1) + 1));
  CHECK(g.f(1).apply(X(1, 1)) == X(1, 1) - 1);
  CHECK(g.e(1).apply(RationalFunction()).is_zero());
  CHECK(g.e(1).render() == "(x[1,1]-x[2,1]) * phi[1,1]^1");
}

TEST_CASE("compose") {
  Composition lam({1, 1});
  auto id = SkewOperator::phi(lam, {1, 1}).compose(SkewOperator::phi(lam, {1, 1}, -1));
  CHECK(id == SkewOperator::identity(lam));
  auto g = build_generators(lam);
  auto ef = g.e(1).compose(g.f(1)), fe = g.f(1).compose(g.e(1));
  CHECK(ef == SkewOperator::multiplication(lam, X(1, 1) - X(2, 1)));
  CHECK(fe == SkewOperator::multiplication(lam, X(1, 1) - 1 - X(2, 1)));
  CHECK(commutator(g.e(1), g.f(1)) == SkewOperator::identity(lam));
  auto a = SkewOperator::multiplication(lam, X(1, 1)), b = SkewOperator::multiplication(lam, X(2, 1) + 3);
  CHECK(a.compose(b) == SkewOperator::multiplication(lam, X(1, 1) * (X(2, 1) + 3)));
}

TEST_CASE("generators for lambda=(2,1)") {
  Composition lam({2, 1});
  auto g = build_generators(lam);
  CHECK(g.e(1).term_count() == 2);
  CHECK(g.f(1).term_count() == 2);
  auto c = g.e(1).coefficient(AffineSymmetry::phi(lam, {1, 1}));
  CHECK(c == (X(1, 1) - X(2, 1)) / (X(1, 1) - X(1, 2)));
  CHECK(g.g({1, 2}) == SkewOperator::multiplication(lam, X(1, 1) * X(1, 2)));
  CHECK(g.g({1, 1}) == SkewOperator::multiplication(lam, X(1, 1) + X(1, 2)));
  for (const auto& [pi, coef] : g.f(1).terms()) CHECK(coef.num().is_constant());
}

TEST_CASE("check_invariance") {
  Composition lam({2, 1});
  auto g = build_generators(lam);
  auto G = YoungSubgroup::full(lam);
  Polynomial f = Polynomial::var(VarId::x(1, 1)) + Polynomial::var(VarId::x(1, 2));
  auto r = check_invariance(g.e(1), f, G);
  // oracle: the two classical terms summed by hand
  RationalFunction d = X(1, 1) - X(1, 2);
  RationalFunction by_hand = (X(1, 1) - X(2, 1)) / d * (X(1, 1) + X(1, 2) + 1) +
                             (X(1, 2) - X(2, 1)) / (-d) * (X(1, 1) + X(1, 2) + 1);
  CHECK(r.image == by_hand);
  CHECK(r.image == X(1, 1) + X(1, 2) + 1);
  CHECK(r.is_invariant_image);
  auto one = check_invariance(g.e(1), Polynomial(1), G);
  CHECK(one.is_polynomial);
  CHECK(one.invariant);
  // the two terms telescope: ((x11 - x21) - (x12 - x21)) / (x11 - x12)
  CHECK(one.image == RationalFunction(1));
  auto gam = check_invariance(g.g({1, 2}), f, G);
  CHECK(gam.is_invariant_image);
  CHECK_THROWS_AS(check_invariance(g.e(1), Polynomial::var(VarId::x(1, 1)), G), NotInvariantInput);
}

TEST_CASE("affine symmetry group law") {
  std::mt19937 rng(5);
  Composition lam({2, 2, 1});
  for (int trial = 0; trial < 50; ++trial) {
    auto p = random_symmetry(rng, lam), q = random_symmetry(rng, lam);
    auto f = random_rf(rng, lam);
    CHECK((p * q).apply(lam, f) == p.apply(lam, q.apply(lam, f)));
    CHECK((p * p.inverse()).is_identity());
  }
}

TEST_CASE("compose is associative and matches sequential application") {
  std::mt19937 rng(9);
  Composition lam({2, 1});
  for (int trial = 0; trial < 6; ++trial) {
    auto a = random_operator(rng, lam, 2), b = random_operator(rng, lam, 2), c = random_operator(rng, lam, 2);
    CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
    auto f = random_rf(rng, lam);
    try {
      CHECK(a.compose(b).apply(f) == a.apply(b.apply(f)));
    } catch (const DivisionByZero&) {
    }
  }
}

TEST_CASE("normal form faithfulness") {
  std::mt19937 rng(13);
  Composition lam({2, 1});
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_operator(rng, lam, 1 + trial % 4);
    auto b = trial % 2 ? a : random_operator(rng, lam, 1 + trial % 4);
    bool same_action = true;
    for (int t = 0; t < 20; ++t) {
      auto f = random_rf(rng, lam);
      try {
        if (!(a.apply(f) == b.apply(f))) same_action = false;
      } catch (const DivisionByZero&) {
      }
    }
    CHECK(same_action == (a == b));
  }
}

TEST_CASE("invariance of R under E_i and F_i") {
  std::mt19937 rng(17);
  for (auto parts : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    Composition lam(parts);
    auto g = build_generators(lam);
    auto G = YoungSubgroup::full(lam);
    for (int t = 0; t < 20; ++t) {
      Polynomial f = random_invariant(rng, lam);
      for (int i = 1; i < lam.rows(); ++i) {
        CHECK(check_invariance(g.e(i), f, G).is_invariant_image);
        CHECK(check_invariance(g.f(i), f, G).is_invariant_image);
      }
    }
  }
}

TEST_CASE("generator names") {
  Composition lam({2, 1});
  CHECK(generator_by_name(lam, "E1") == generator_E(lam, 1));
  CHECK(generator_by_name(lam, "F_1") == generator_F(lam, 1));
  CHECK(generator_by_name(lam, "gamma[1,2]") == generator_gamma(lam, {1, 2}));
  CHECK_THROWS_AS(generator_by_name(lam, "E2"), NameError);
  CHECK_THROWS_AS(generator_by_name(lam, "H1"), NameError);
}

TEST_CASE("invariant family") {
  Composition lam({2, 1});
  auto fam = invariant_family(lam, 2);
  // generators e1(r1), e2(r1), e1(r2): exponent vectors with a + 2b + c <= 2
  CHECK(fam.size() == 7);
  CHECK(fam[0].value == Polynomial(1));
  for (const auto& m : fam) CHECK(m.value.total_degree() == static_cast<unsigned>(m.degree));
}
