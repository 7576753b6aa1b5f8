#ifndef GZKIT_RELATIONS_HPP
#define GZKIT_RELATIONS_HPP

#include <string>
#include <vector>

#include "gzkit/combinat.hpp"

namespace gzkit {

struct RelationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

bool all_passed(const std::vector<RelationCheck>& checks);

// d_s^2 = 0, braid and commuting relations for one row of each size
// 2..max_row, and rank |S_n| of {d_w} on polynomials of degree <= n(n-1)/2.
std::vector<RelationCheck> nil_coxeter_suite(int max_row = 4);

// E_i f and F_i f for random G-invariant polynomials of degree <= max_degree.
std::vector<RelationCheck> invariance_suite(const Composition& lambda, int samples, unsigned seed, int max_degree = 4);

// Classical generators against the divided-difference form for every
// composition mu of every row, on the invariant family of the given degree.
// The divided-difference side is evaluated letter by letter.
std::vector<RelationCheck> ddiff_compare(const Composition& lambda, int degree);

// [E_i,F_j] = 0 for i != j, [E_i,F_i] a multiplication by a G-invariant
// polynomial (the identity when lambda = (1,1)), and the Serre relations
// [E_i,[E_i,E_j]] = [F_i,[F_i,F_j]] = 0 for |i-j| = 1.
std::vector<RelationCheck> gl_relations(const Composition& lambda);

}  // namespace gzkit

#endif
