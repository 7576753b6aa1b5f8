#ifndef GZKIT_SKEWOPS_HPP
#define GZKIT_SKEWOPS_HPP

#include <map>
#include <string>
#include <vector>

#include "gzkit/combinat.hpp"
#include "gzkit/exactalg.hpp"

namespace gzkit {

// pi = (perm, shift) acts by x_a -> x_{perm(a)} + shift_{perm(a)}.
struct AffineSymmetry {
  RowPermutation perm;
  ShiftVector shift;

  static AffineSymmetry identity(const Composition& lambda);
  static AffineSymmetry translation(const Composition& lambda, const ShiftVector& shift);
  static AffineSymmetry permutation(const Composition& lambda, const RowPermutation& perm);
  static AffineSymmetry phi(const Composition& lambda, Index a, long power = 1);

  bool is_identity() const { return perm.is_identity() && shift.is_zero(); }
  AffineSymmetry operator*(const AffineSymmetry& o) const;  // (this o o)(f) = this(o(f))
  AffineSymmetry inverse() const;

  std::map<VarId, Polynomial> images(const Composition& lambda) const;
  Polynomial apply(const Composition& lambda, const Polynomial& f) const;
  RationalFunction apply(const Composition& lambda, const RationalFunction& f) const;

  auto operator<=>(const AffineSymmetry&) const = default;
  std::string render(const Composition& lambda) const;  // "perm * shift" or "id"
};

// Finite sum of f * pi in normal form: symmetries on the right, one
// coefficient per symmetry, zero coefficients dropped.
class SkewOperator {
public:
  using TermMap = std::map<AffineSymmetry, RationalFunction>;

  SkewOperator() = default;
  explicit SkewOperator(Composition lambda) : lambda_(std::move(lambda)) {}
  static SkewOperator identity(const Composition& lambda);
  static SkewOperator multiplication(const Composition& lambda, const RationalFunction& f);
  static SkewOperator symmetry(const Composition& lambda, const AffineSymmetry& pi,
                               const RationalFunction& coef = RationalFunction(1));
  static SkewOperator phi(const Composition& lambda, Index a, long power = 1);
  static SkewOperator transposition(const Composition& lambda, Index a, Index b);

  const Composition& lambda() const { return lambda_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  void add_term(const AffineSymmetry& pi, const RationalFunction& coef);
  // coefficient of the identity symmetry when that is the only term (or zero)
  bool is_pure_multiplication() const;
  RationalFunction coefficient(const AffineSymmetry& pi) const;

  SkewOperator operator+(const SkewOperator& o) const;
  SkewOperator operator-(const SkewOperator& o) const;
  SkewOperator operator-() const;
  SkewOperator operator*(const SkewOperator& o) const { return compose(o); }
  SkewOperator left_multiply(const RationalFunction& f) const;  // f o this

  SkewOperator compose(const SkewOperator& o) const;  // this o o
  RationalFunction apply(const RationalFunction& f) const;

  bool operator==(const SkewOperator& o) const { return terms_ == o.terms_; }
  std::string render() const;

private:
  Composition lambda_;
  TermMap terms_;
};

SkewOperator compose(const SkewOperator& a, const SkewOperator& b);
// op(f) over one common denominator with a single exact division; throws
// NotInvariantInput if the image is not a polynomial
Polynomial apply_to_polynomial(const SkewOperator& op, const Polynomial& f);
RationalFunction apply(const SkewOperator& op, const RationalFunction& f);
SkewOperator commutator(const SkewOperator& a, const SkewOperator& b);

struct GZGenerators {
  Composition lambda;
  std::vector<SkewOperator> E;                 // E[i-1] = E_i, i = 1..k-1
  std::vector<SkewOperator> F;                 // F[i-1] = F_i
  std::map<Index, SkewOperator> gamma;         // gamma_a

  const SkewOperator& e(int i) const { return E.at(i - 1); }
  const SkewOperator& f(int i) const { return F.at(i - 1); }
  const SkewOperator& g(Index a) const;
};

Polynomial elementary_symmetric(const Composition& lambda, int row, int degree);

// Products of per-row elementary symmetric polynomials of total degree at
// most max_degree, ordered by degree and then by exponent vector.
struct InvariantMonomial {
  std::vector<int> exponents;  // one entry per (row, degree) pair, rows ascending
  int degree = 0;
  Polynomial value;
};
std::vector<InvariantMonomial> invariant_family(const Composition& lambda, int max_degree);
// coefficient of phi_{(i,j)}^{+-1} in E_i / F_i
RationalFunction gz_coefficient(const Composition& lambda, int i, int j, int sign);
SkewOperator generator_E(const Composition& lambda, int i);
SkewOperator generator_F(const Composition& lambda, int i);
SkewOperator generator_gamma(const Composition& lambda, Index a);
GZGenerators build_generators(const Composition& lambda);

// Resolve a generator name: "E1", "F2", "gamma[1,2]" (also "E_1", "g[1,2]").
SkewOperator generator_by_name(const Composition& lambda, const std::string& name);

// Invariance under a Young subgroup, tested on the transpositions of
// neighbouring elements of every block.
bool is_invariant(const Composition& lambda, const RationalFunction& f, const YoungSubgroup& group);

struct InvarianceReport {
  RationalFunction image;
  bool is_polynomial = false;
  bool invariant = false;
  bool is_invariant_image = false;
};

InvarianceReport check_invariance(const SkewOperator& op, const Polynomial& f, const YoungSubgroup& group);

}  // namespace gzkit

#endif
