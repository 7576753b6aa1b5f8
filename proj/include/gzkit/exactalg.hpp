#ifndef GZKIT_EXACTALG_HPP
#define GZKIT_EXACTALG_HPP

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gzkit/errors.hpp"

namespace gzkit {

using Rational = mpq_class;

std::string render_rational(const Rational& q);  // "p" or "p/q"
Rational parse_rational(const std::string& text);  // throws ParseError

// A variable of the single arithmetic engine: either a module variable x[i,j]
// or a transcendental parameter z[t]. Parameters sort before module variables,
// module variables are ordered row-major.
class VarId {
public:
  constexpr VarId() = default;

  static VarId param(int t);
  static VarId x(int row, int col);

  bool is_param() const { return (key_ & kModuleBit) == 0; }
  int param_index() const { return key_; }
  int row() const { return (key_ & ~kModuleBit) >> 7; }
  int col() const { return key_ & 0x7f; }

  std::uint16_t key() const { return key_; }
  static VarId from_key(std::uint16_t key) {
    VarId v;
    v.key_ = key;
    return v;
  }

  std::string render() const;

  auto operator<=>(const VarId&) const = default;

private:
  static constexpr std::uint16_t kModuleBit = 0x8000;
  std::uint16_t key_ = 0;
};

// Sparse exponent vector with inline storage. Entries are sorted by variable.
class Monomial {
public:
  static constexpr int kCapacity = 20;

  Monomial() = default;
  static Monomial var(VarId v, std::uint32_t exp = 1);

  bool is_one() const { return size_ == 0; }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t exponent(VarId v) const;
  int size() const { return size_; }
  VarId var_at(int k) const { return VarId::from_key(static_cast<std::uint16_t>(entries_[k] >> 16)); }
  std::uint32_t exp_at(int k) const { return entries_[k] & 0xffffu; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;       // this | o
  Monomial quotient(const Monomial& o) const;  // this / o, requires o | this
  Monomial min_with(const Monomial& o) const;  // componentwise minimum
  Monomial without(VarId v) const;

  // Graded lexicographic comparison; greater means "leads".
  std::strong_ordering operator<=>(const Monomial& o) const;
  bool operator==(const Monomial& o) const;

  std::string render() const;

private:
  void push(VarId v, std::uint32_t e);

  std::array<std::uint32_t, kCapacity> entries_{};
  std::uint8_t size_ = 0;
  std::uint32_t degree_ = 0;
};

struct Term {
  Monomial mono;
  Rational coef;
};

// Sparse multivariate polynomial over Q. Terms are kept in strictly descending
// graded-lex order with no zero coefficients.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
  Polynomial(int c) : Polynomial(Rational(c)) {}   // NOLINT
  static Polynomial var(VarId v);
  static Polynomial monomial(const Monomial& m, const Rational& c);
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  Rational constant_value() const;  // requires is_constant()
  bool is_one() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  std::uint32_t total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }
  std::uint32_t degree(VarId v) const;
  std::vector<VarId> variables() const;
  bool only_params() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned n) const;
  Polynomial monic() const;

  // Exact division; nullopt when o does not divide this.
  std::optional<Polynomial> divide_exact(const Polynomial& o) const;
  Polynomial operator/(const Polynomial& o) const;  // throws if not exact
  Monomial monomial_content() const;
  Polynomial divide_monomial(const Monomial& m) const;

  // Coefficients with respect to v: result[d] is the coefficient of v^d.
  std::vector<Polynomial> coefficients_in(VarId v) const;
  static Polynomial from_coefficients(VarId v, std::span<const Polynomial> coeffs);

  Polynomial substitute(const std::map<VarId, Polynomial>& images) const;
  Polynomial swap_vars(VarId a, VarId b) const;

  bool operator==(const Polynomial& o) const;

  std::string render() const;

private:
  std::vector<Term> terms_;
};

Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Full evaluation at rational values; every variable of f must be assigned.
Rational evaluate(const Polynomial& f, const std::map<VarId, Rational>& values);

// Reduced fraction with monic denominator; the representation is canonical.
class RationalFunction {
public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(const Polynomial& p) : num_(p), den_(1) {}  // NOLINT
  RationalFunction(const Rational& c) : num_(c), den_(1) {}    // NOLINT
  RationalFunction(long c) : num_(c), den_(1) {}               // NOLINT
  RationalFunction(int c) : num_(c), den_(1) {}                // NOLINT

  static RationalFunction normalize(const Polynomial& num, const Polynomial& den);
  // Skips the gcd when the caller knows num and den are coprime.
  static RationalFunction from_coprime(const Polynomial& num, const Polynomial& den);
  static RationalFunction var(VarId v) { return RationalFunction(Polynomial::var(v)); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  bool is_scalar() const { return num_.only_params() && den_.only_params(); }
  std::vector<VarId> variables() const;

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction inverse() const;

  // Images of variables may be arbitrary rational functions; unmapped
  // variables stay fixed. Throws SingularSubstitution if the denominator dies.
  RationalFunction substitute(const std::map<VarId, RationalFunction>& images) const;
  RationalFunction substitute(const std::map<VarId, Polynomial>& images) const;
  RationalFunction swap_vars(VarId a, VarId b) const;
  // Substitution by a field automorphism: coprimality is preserved, so only
  // the denominator is rescaled.
  RationalFunction transform(const std::map<VarId, Polynomial>& images) const;

  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

  std::string render() const;

private:
  Polynomial num_;
  Polynomial den_;
};

// Values of evaluation points live in Q(z); same engine, narrower type.
using Scalar = RationalFunction;

Scalar make_scalar(const RationalFunction& f);
Rational evaluate(const RationalFunction& f, const std::map<VarId, Rational>& values);  // DivisionByZero  // throws ValidationError if f has x-variables

enum class ArithOp { Add, Sub, Mul, Div };
RationalFunction arith(const RationalFunction& a, const RationalFunction& b, ArithOp op);

}  // namespace gzkit

#endif
