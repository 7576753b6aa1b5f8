#include <algorithm>

#include "gzkit/exactalg.hpp"

namespace gzkit {

RationalFunction RationalFunction::normalize(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) return RationalFunction();
  if (den.is_constant()) return from_coprime(num, den);
  Polynomial g = gcd(num, den);
  if (g.is_one()) return from_coprime(num, den);
  return from_coprime(num / g, den / g);
}

RationalFunction RationalFunction::from_coprime(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  RationalFunction r;
  if (num.is_zero()) return r;
  const Rational& lc = den.leading().coef;
  if (lc == 1) {
    r.num_ = num;
    r.den_ = den;
  } else {
    Rational inv = 1 / lc;
    r.num_ = num.scaled(inv);
    r.den_ = den.scaled(inv);
  }
  return r;
}

std::vector<VarId> RationalFunction::variables() const {
  auto a = num_.variables(), b = den_.variables();
  std::vector<VarId> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

// Henrici: with g = gcd(b, d), gcd(a*(d/g) + c*(b/g), b*d/g) = gcd(numerator, g).
RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_.is_one() && o.den_.is_one()) return RationalFunction(num_ + o.num_);
  if (den_ == o.den_) return normalize(num_ + o.num_, den_);
  Polynomial g = gcd(den_, o.den_);
  if (g.is_one()) return from_coprime(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  Polynomial bg = den_ / g, dg = o.den_ / g;
  Polynomial n = num_ * dg + o.num_ * bg;
  if (n.is_zero()) return RationalFunction();
  Polynomial h = gcd(n, g);
  if (h.is_one()) return from_coprime(n, bg * o.den_);
  return from_coprime(n / h, bg * (o.den_ / h));
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (is_zero() || o.is_zero()) return RationalFunction();
  if (den_.is_one() && o.den_.is_one()) return RationalFunction(num_ * o.num_);
  Polynomial g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  Polynomial a = g1.is_one() ? num_ : num_ / g1;
  Polynomial d = g1.is_one() ? o.den_ : o.den_ / g1;
  Polynomial c = g2.is_one() ? o.num_ : o.num_ / g2;
  Polynomial b = g2.is_one() ? den_ : den_ / g2;
  return from_coprime(a * c, b * d);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  return from_coprime(den_, num_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw DivisionByZero("division by zero rational function");
  return *this * o.inverse();
}

RationalFunction RationalFunction::substitute(const std::map<VarId, Polynomial>& images) const {
  Polynomial n = num_.substitute(images), d = den_.substitute(images);
  if (d.is_zero()) throw SingularSubstitution("denominator " + den_.render() + " vanishes after substitution");
  return normalize(n, d);
}

RationalFunction RationalFunction::substitute(const std::map<VarId, RationalFunction>& images) const {
  bool polynomial_images = std::all_of(images.begin(), images.end(),
                                       [](const auto& kv) { return kv.second.is_polynomial(); });
  if (polynomial_images) {
    std::map<VarId, Polynomial> polys;
    for (const auto& [v, f] : images) polys.emplace(v, f.num());
    return substitute(polys);
  }
  auto eval = [&](const Polynomial& p) {
    RationalFunction acc;
    for (const auto& t : p.terms()) {
      RationalFunction term(t.coef);
      for (int k = 0; k < t.mono.size(); ++k) {
        VarId v = t.mono.var_at(k);
        auto it = images.find(v);
        RationalFunction base = it == images.end() ? RationalFunction::var(v) : it->second;
        for (std::uint32_t e = 0; e < t.mono.exp_at(k); ++e) term *= base;
      }
      acc += term;
    }
    return acc;
  };
  RationalFunction d = eval(den_);
  if (d.is_zero()) throw SingularSubstitution("denominator " + den_.render() + " vanishes after substitution");
  return eval(num_) / d;
}

RationalFunction RationalFunction::swap_vars(VarId a, VarId b) const {
  return from_coprime(num_.swap_vars(a, b), den_.swap_vars(a, b));
}

RationalFunction RationalFunction::transform(const std::map<VarId, Polynomial>& images) const {
  if (den_.is_one()) return RationalFunction(num_.substitute(images));
  return from_coprime(num_.substitute(images), den_.substitute(images));
}

std::string RationalFunction::render() const {
  if (den_.is_one()) return num_.render();
  return "(" + num_.render() + ")/(" + den_.render() + ")";
}

Scalar make_scalar(const RationalFunction& f) {
  if (!f.is_scalar()) throw ValidationError("scalar expected, got " + f.render());
  return f;
}

Rational evaluate(const RationalFunction& f, const std::map<VarId, Rational>& values) {
  Rational d = evaluate(f.den(), values);
  if (sgn(d) == 0) throw DivisionByZero("denominator " + f.den().render() + " vanishes at the evaluation point");
  return evaluate(f.num(), values) / d;
}

RationalFunction arith(const RationalFunction& a, const RationalFunction& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  return {};
}

}  // namespace gzkit
