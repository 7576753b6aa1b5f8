#ifndef GZKIT_DIVDIFF_HPP
#define GZKIT_DIVDIFF_HPP

#include <map>
#include <vector>

#include "gzkit/combinat.hpp"
#include "gzkit/skewops.hpp"

namespace gzkit {

// d_{a,b} = (id - (a,b)) / (x_a - x_b) as a skew operator.
SkewOperator partial(const Composition& lambda, Index a, Index b);
SkewOperator partial_simple(const Composition& lambda, Letter s);
// d_{s_1} o ... o d_{s_l}; zero for non-reduced words
SkewOperator partial_word(const Composition& lambda, const ReducedWord& w);

// Direct action on polynomials (exact division, no operator normal form).
Polynomial apply_partial(const Polynomial& f, VarId a, VarId b);
Polynomial apply_partial_word(const Composition& lambda, const ReducedWord& w, const Polynomial& f);
RationalFunction apply_partial(const RationalFunction& f, VarId a, VarId b);

SkewOperator conjugate(const RowPermutation& u, const SkewOperator& op);
SkewOperator conjugate(const AffineSymmetry& u, const SkewOperator& op);

// d_{a,b} o f o tail = d_{a,b}(f) o tail + f^{(a,b)} o d_{a,b} o tail
struct LeibnizMove {
  SkewOperator derivative_term;  // d_{a,b}(f) o tail
  SkewOperator commuted_term;    // f^{(a,b)} o d_{a,b} o tail
  SkewOperator total() const { return derivative_term + commuted_term; }
};
LeibnizMove leibniz_move(const Composition& lambda, Index a, Index b, const RationalFunction& f,
                         const SkewOperator& tail);

struct BlockData {
  int part = 0;                 // mu_j
  int min = 0;                  // min(mu_j), a column of row i
  std::vector<Index> block;     // underline{mu_j}
  ReducedWord ddiff_word;       // d(mu,j) = d_w for this word
  SkewOperator ddiff;
  RationalFunction f_plus;
  RationalFunction f_minus;
};

std::vector<BlockData> composition_block_data(const Composition& lambda, int i, const std::vector<int>& mu);

struct DdiffForm {
  SkewOperator E;
  SkewOperator F;
};

DdiffForm generators_ddiff_form(const Composition& lambda, int i, const std::vector<int>& mu);

// All compositions of n in lexicographic order.
std::vector<std::vector<int>> compositions_of(int n);

// Element of the nil-Hecke ring: sum over permutations w of c_w * d_w with
// coefficients on the left.
class NilHecke {
public:
  using TermMap = std::map<RowPermutation, RationalFunction>;

  NilHecke() = default;
  explicit NilHecke(Composition lambda) : lambda_(std::move(lambda)) {}
  static NilHecke scalar(const Composition& lambda, const RationalFunction& c);
  static NilHecke ddiff(const Composition& lambda, const ReducedWord& w);  // zero if not reduced
  static NilHecke reflection(const Composition& lambda, Letter s);      // s = 1 - (x_a - x_b) d_s
  static NilHecke group_element(const Composition& lambda, const RowPermutation& p);

  const Composition& lambda() const { return lambda_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const RowPermutation& w, const RationalFunction& c);

  NilHecke operator+(const NilHecke& o) const;
  NilHecke operator*(const NilHecke& o) const;
  NilHecke left_multiply(const RationalFunction& c) const;
  // d_s o this
  NilHecke apply_simple_left(Letter s) const;

  SkewOperator to_skew() const;
  RationalFunction apply(const RationalFunction& f) const;

private:
  Composition lambda_;
  TermMap terms_;
};

}  // namespace gzkit

#endif
