#include <doctest.h>

#include <random>

#include "gzkit/divdiff.hpp"
#include "gzkit/linalg.hpp"

using namespace gzkit;

namespace {

RationalFunction X(int i, int j) { return RationalFunction::var(VarId::x(i, j)); }

}  // namespace

TEST_CASE("partial on small inputs") {
  Composition lam({2, 1});
  auto d = partial(lam, {1, 1}, {1, 2});
  CHECK(d.apply(X(1, 1)) == RationalFunction(1));
  CHECK(d.apply(X(1, 1) + X(1, 2)).is_zero());
  // (a^2 - b^2)/(a - b) = a + b
  CHECK(d.apply(X(1, 1) * X(1, 1)) == X(1, 1) + X(1, 2));
  CHECK(d == -partial(lam, {1, 2}, {1, 1}));
  CHECK_THROWS_AS(partial(lam, {1, 1}, {2, 1}), InvalidPair);
  CHECK_THROWS_AS(partial(lam, {1, 1}, {1, 1}), InvalidPair);
}

TEST_CASE("partial_word") {
  Composition lam({3});
  CHECK(partial_word(lam, parse_word("s[1,1] s[1,1]")).is_zero());
  CHECK(partial_word(lam, parse_word("s[1,1] s[1,2] s[1,1]")) == partial_word(lam, parse_word("s[1,2] s[1,1] s[1,2]")));
  CHECK(partial_word(lam, ReducedWord{}) == SkewOperator::identity(lam));
}

TEST_CASE("nil-Coxeter relations for rows up to 4") {
  for (int n = 2; n <= 4; ++n) {
    Composition lam({n});
    for (int p = 1; p < n; ++p) {
      auto dp = partial_simple(lam, {1, p});
      CHECK(dp.compose(dp).is_zero());
      for (int q = p + 1; q < n; ++q) {
        auto dq = partial_simple(lam, {1, q});
        if (q == p + 1) {
          CHECK(dp.compose(dq).compose(dp) == dq.compose(dp).compose(dq));
        } else {
          CHECK(dp.compose(dq) == dq.compose(dp));
        }
      }
    }
  }
}

TEST_CASE("divided differences are linearly independent on R") {
  for (int n = 2; n <= 4; ++n) {
    Composition lam({n});
    int top = n * (n - 1) / 2;
    std::vector<Polynomial> monomials{Polynomial(1)};
    for (int d = 1; d <= top; ++d) {
      std::vector<Polynomial> next;
      for (const auto& m : monomials)
        if (static_cast<int>(m.total_degree()) == d - 1)
          for (int c = 1; c <= n; ++c) next.push_back(m * Polynomial::var(VarId::x(1, c)));
      for (auto& m : next) monomials.push_back(m);
    }
    std::map<std::pair<std::size_t, std::string>, int> column;
    std::vector<std::map<int, Rational>> rows;
    for (const auto& w : YoungSubgroup::full(lam).elements()) {
      auto word = reduced_word(lam, w);
      std::map<int, Rational> row;
      for (std::size_t k = 0; k < monomials.size(); ++k) {
        Polynomial img = apply_partial_word(lam, word, monomials[k]);
        for (const auto& t : img.terms()) {
          auto key = std::make_pair(k, t.mono.render());
          auto it = column.emplace(key, static_cast<int>(column.size())).first;
          row[it->second] += t.coef;
        }
      }
      rows.push_back(row);
    }
    Matrix<Rational> m;
    for (const auto& r : rows) {
      std::vector<Rational> dense(column.size(), Rational(0));
      for (const auto& [c, v] : r) dense[c] = v;
      m.push_back(dense);
    }
    int factorial = 1;
    for (int t = 2; t <= n; ++t) factorial *= t;
    CHECK(rank(m) == factorial);
  }
}

TEST_CASE("conjugate") {
  Composition lam({3});
  auto d = partial(lam, {1, 1}, {1, 2});
  CHECK(conjugate(RowPermutation::identity(lam), d) == d);
  auto s = RowPermutation::simple(lam, 1, 1);
  CHECK(conjugate(s, d) == partial(lam, {1, 2}, {1, 1}));
  CHECK(conjugate(s, d) == -d);
  for (const auto& u : YoungSubgroup::full(lam).elements()) {
    Index a = lam.index(u(lam.flat(1, 2))), b = lam.index(u(lam.flat(1, 3)));
    CHECK(conjugate(u, partial(lam, {1, 2}, {1, 3})) == partial(lam, a, b));
    auto e = partial(lam, {1, 1}, {1, 3});
    CHECK(conjugate(u, d.compose(e)) == conjugate(u, d).compose(conjugate(u, e)));
  }
}

TEST_CASE("leibniz_move") {
  Composition lam({2, 1});
  auto id = SkewOperator::identity(lam);
  auto lhs = [&](const RationalFunction& f, const SkewOperator& tail) {
    return partial(lam, {1, 1}, {1, 2}).compose(SkewOperator::multiplication(lam, f)).compose(tail);
  };
  auto sym = leibniz_move(lam, {1, 1}, {1, 2}, X(1, 1) * X(1, 2), id);
  CHECK(sym.derivative_term.is_zero());
  CHECK(sym.total() == lhs(X(1, 1) * X(1, 2), id));
  auto lin = leibniz_move(lam, {1, 1}, {1, 2}, X(1, 1), id);
  CHECK(lin.derivative_term == id);
  CHECK(lin.commuted_term == SkewOperator::multiplication(lam, X(1, 2)).compose(partial(lam, {1, 1}, {1, 2})));
  CHECK(lin.total() == lhs(X(1, 1), id));
  ShiftVector both(lam.size());
  both[0] = 1;
  both[1] = 1;
  auto tail = SkewOperator::symmetry(lam, AffineSymmetry::translation(lam, both));
  auto shifted = leibniz_move(lam, {1, 1}, {1, 2}, X(2, 1), tail);
  CHECK(shifted.total() == lhs(X(2, 1), tail));
  CHECK(partial(lam, {1, 1}, {1, 2}).compose(tail) == tail.compose(partial(lam, {1, 1}, {1, 2})));
}

TEST_CASE("divided-difference form of the generators") {
  Composition lam({2, 1});
  auto classical_E = generator_E(lam, 1), classical_F = generator_F(lam, 1);
  auto two = generators_ddiff_form(lam, 1, {2});
  auto expected = partial(lam, {1, 1}, {1, 2})
                      .compose(SkewOperator::multiplication(lam, X(1, 1) - X(2, 1)))
                      .compose(SkewOperator::phi(lam, {1, 1}));
  CHECK(two.E == expected);
  CHECK(two.E.apply(X(1, 1) + X(1, 2)) == X(1, 1) + X(1, 2) + 1);
  CHECK(two.E.apply(X(1, 1) + X(1, 2)) == classical_E.apply(X(1, 1) + X(1, 2)));
  CHECK(two.F.apply(X(1, 1) * X(1, 2)) == classical_F.apply(X(1, 1) * X(1, 2)));
  auto ones = generators_ddiff_form(lam, 1, {1, 1});
  CHECK(ones.E == classical_E);
  CHECK(ones.F == classical_F);
  // not equal as operators on all of the field
  CHECK_FALSE(two.E == classical_E);
  CHECK_THROWS_AS(generators_ddiff_form(lam, 1, {1}), InvalidComposition);
}

TEST_CASE("compositions_of") {
  CHECK(compositions_of(3).size() == 4);
  CHECK(compositions_of(1) == std::vector<std::vector<int>>{{1}});
}

TEST_CASE("nil-Hecke products agree with operator composition") {
  Composition lam({3});
  auto s1 = NilHecke::reflection(lam, {1, 1});
  CHECK(s1.to_skew() == SkewOperator::transposition(lam, {1, 1}, {1, 2}));
  for (const auto& p : YoungSubgroup::full(lam).elements())
    CHECK(NilHecke::group_element(lam, p).to_skew() == SkewOperator::symmetry(lam, AffineSymmetry::permutation(lam, p)));
  auto a = NilHecke::ddiff(lam, parse_word("s[1,1]")).left_multiply(X(1, 2) * X(1, 3));
  auto b = NilHecke::scalar(lam, X(1, 1) * X(1, 1) - X(1, 3)) + NilHecke::ddiff(lam, parse_word("s[1,2]"));
  CHECK((a * b).to_skew() == a.to_skew().compose(b.to_skew()));
  // conjugated divided differences have polynomial coefficients
  for (const auto& rho : YoungSubgroup::full(lam).elements()) {
    auto conj = NilHecke::group_element(lam, rho) * NilHecke::ddiff(lam, parse_word("s[1,1]")) *
                NilHecke::group_element(lam, rho.inverse());
    for (const auto& [w, c] : conj.terms()) CHECK(c.is_polynomial());
    CHECK(conj.to_skew() == conjugate(rho, partial_simple(lam, {1, 1})));
  }
}
