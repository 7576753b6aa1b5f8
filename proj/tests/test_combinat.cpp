#include <doctest.h>

#include <algorithm>
#include <set>

#include "gzkit/combinat.hpp"

using namespace gzkit;

TEST_CASE("composition and index set") {
  Composition lam({2, 1});
  CHECK(lam.size() == 3);
  CHECK(lam.rows() == 2);
  CHECK(lam.flat(2, 1) == 2);
  CHECK(lam.index(1) == Index{1, 2});
  CHECK(lam.row_indices(0).empty());
  CHECK(lam.row_indices(3).empty());
  CHECK(lam.lattice_rank() == 2);
  CHECK_THROWS_AS(Composition({2, 0}), InvalidComposition);
  CHECK_THROWS_AS(Composition(std::vector<int>{}), InvalidComposition);
  CHECK_THROWS_AS(lam.flat(3, 1), InvalidIndex);
}

TEST_CASE("orbits_and_stabilizer") {
  auto r = orbits_and_stabilizer(3, {{1, 2}, {3}});
  CHECK(r.orbits == std::vector<std::vector<int>>{{1, 2}, {3}});
  CHECK(r.contiguous);
  CHECK_FALSE(orbits_and_stabilizer(3, {{1, 3}, {2}}).contiguous);
  auto s = orbits_and_stabilizer(4, {{1, 2, 3, 4}});
  CHECK(s.orbits.size() == 1);
  CHECK(s.contiguous);
  CHECK_THROWS_AS(orbits_and_stabilizer(3, {{1, 2}}), InvalidSubgroup);
  CHECK_THROWS_AS(orbits_and_stabilizer(3, {{1, 2}, {2, 3}}), InvalidSubgroup);
}

TEST_CASE("shortest coset representatives") {
  Composition lam2({2});
  auto full2 = YoungSubgroup::full(lam2), triv2 = YoungSubgroup::trivial(lam2);
  auto eq = shortest_coset_reps(full2, full2);
  CHECK(eq.size() == 1);
  CHECK(eq[0].empty());
  auto two = shortest_coset_reps(full2, triv2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].render() == "e");
  CHECK(two[1].render() == "s[1,1]");
  CHECK(longest_element(full2, triv2).render() == "s[1,1]");

  // S_3 / S_2: brute-force oracle over the six elements
  Composition lam3({3});
  auto s3 = YoungSubgroup::full(lam3), s2 = YoungSubgroup::from_segments(lam3, {{2, 1}});
  auto reps = shortest_coset_reps(s3, s2);
  REQUIRE(reps.size() == 3);
  CHECK(reps[0].length() == 0);
  CHECK(reps[1].length() == 1);
  CHECK(reps[2].length() == 2);
  std::set<std::vector<int>> cosets;
  for (const auto& w : reps) {
    auto p = word_product(lam3, w);
    int minimal = 100;
    for (const auto& h : s2.elements()) minimal = std::min(minimal, (p * h).length(lam3));
    CHECK(minimal == static_cast<int>(w.length()));
    std::vector<int> images;
    for (const auto& h : s2.elements()) images.push_back((p * h)(2));
    std::sort(images.begin(), images.end());
    cosets.insert(images);
  }
  CHECK(cosets.size() == 3);
  CHECK_THROWS_AS(shortest_coset_reps(s2, s3), NotASubgroup);
}

TEST_CASE("word operations") {
  Composition lam({3});
  auto info = word_ops(lam, parse_word("s[1,1] s[1,1]"));
  CHECK_FALSE(info.reduced);
  CHECK(info.product.is_identity());
  auto w0 = word_ops(lam, parse_word("s[1,1] s[1,2] s[1,1]"));
  CHECK(w0.length == 3);
  CHECK(w0.reduced);
  // brute force: the maximal length over S_3 is 3 and is attained once
  int maxlen = 0, count = 0;
  for (const auto& p : YoungSubgroup::full(lam).elements()) {
    int l = p.length(lam);
    if (l > maxlen) maxlen = l, count = 0;
    if (l == maxlen) ++count;
  }
  CHECK(maxlen == 3);
  CHECK(count == 1);
  CHECK(w0.product == word_product(lam, parse_word("s[1,2] s[1,1] s[1,2]")));
  CHECK_THROWS_AS(word_ops(lam, parse_word("s[1,3]")), InvalidPair);
  CHECK(parse_word("e").empty());
  CHECK_THROWS_AS(parse_word("s[1"), ParseError);
}

TEST_CASE("group axioms and reduced words") {
  Composition lam({3, 2});
  auto g = YoungSubgroup::full(lam);
  auto elems = g.elements();
  CHECK(elems.size() == 12);
  for (const auto& p : elems) {
    CHECK((p * p.inverse()).is_identity());
    auto w = reduced_word(lam, p);
    CHECK(word_product(lam, w) == p);
    CHECK(static_cast<int>(w.length()) == p.length(lam));
    for (const auto& q : elems)
      for (const auto& r : {elems[1], elems[5]}) CHECK((p * q) * r == p * (q * r));
  }
  auto under = YoungSubgroup::full(lam, false);
  CHECK(under.order() == 6);
  for (const auto& p : under.elements()) CHECK(p.in_underline(lam));
}

TEST_CASE("coset factorization is exhaustive and unique") {
  std::vector<Composition> shapes{Composition({4}), Composition({3, 2}), Composition({2, 2})};
  for (const auto& lam : shapes) {
    auto big = YoungSubgroup::full(lam);
    std::vector<YoungSubgroup> smalls{YoungSubgroup::trivial(lam), big};
    if (lam.part(1) == 4) {
      smalls.push_back(YoungSubgroup::from_segments(lam, {{2, 2}}));
      smalls.push_back(YoungSubgroup::from_segments(lam, {{1, 3}}));
      smalls.push_back(YoungSubgroup::from_segments(lam, {{2, 1, 1}}));
    }
    for (const auto& small : smalls) {
      auto reps = shortest_coset_reps(big, small);
      CHECK(reps.size() * small.order() == big.order());
      std::map<RowPermutation, int> hits;
      for (const auto& w : reps) {
        auto p = word_product(lam, w);
        for (const auto& h : small.elements()) {
          hits[p * h]++;
          CHECK((p * h).length(lam) == p.length(lam) + h.length(lam));
        }
      }
      CHECK(hits.size() == big.order());
      for (const auto& [p, n] : hits) CHECK(n == 1);
    }
  }
}

TEST_CASE("shift vectors") {
  Composition lam({2, 1});
  auto a = ShiftVector::unit(lam, {1, 1}), b = ShiftVector::unit(lam, {1, 2}, 3);
  CHECK(a + b == b + a);
  CHECK((a + (-a)).is_zero());
  CHECK(a.in_lattice(lam));
  CHECK_FALSE(ShiftVector::unit(lam, {2, 1}).in_lattice(lam));
  CHECK((a + b).render(lam) == "(1,3)");
}
