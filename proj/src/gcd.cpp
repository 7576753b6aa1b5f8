#include <algorithm>

#include "gzkit/exactalg.hpp"

namespace gzkit {

namespace {

// Dense univariate view over the polynomial ring in the remaining variables.
using UPoly = std::vector<Polynomial>;

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  const int db = udeg(b);
  const Polynomial& lcb = b.back();
  int unused = udeg(a) - db + 1;
  while (!a.empty() && udeg(a) >= db) {
    Polynomial lca = a.back();
    int shift = udeg(a) - db;
    for (auto& c : a) c *= lcb;
    for (int k = 0; k <= db; ++k) a[k + shift] -= lca * b[k];
    a.back() = Polynomial();
    trim(a);
    --unused;
  }
  if (unused > 0) {
    Polynomial f = lcb.pow(static_cast<unsigned>(unused));
    for (auto& c : a) c *= f;
  }
  return a;
}

Polynomial content(const UPoly& p);

UPoly primitive_part(const UPoly& p, const Polynomial& cont) {
  UPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(c / cont);
  return out;
}

// gcd of primitive polynomials of positive degree in the main variable.
UPoly subresultant_gcd(UPoly a, UPoly b) {
  if (udeg(a) < udeg(b)) std::swap(a, b);
  Polynomial g(1), h(1);
  while (true) {
    int delta = udeg(a) - udeg(b);
    UPoly r = pseudo_remainder(a, b);
    if (r.empty()) break;
    if (udeg(r) == 0) return UPoly{Polynomial(1)};
    a = std::move(b);
    Polynomial divisor = g * h.pow(static_cast<unsigned>(delta));
    b.clear();
    for (const auto& c : r) b.push_back(c / divisor);
    g = a.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = g.pow(static_cast<unsigned>(delta)) / h.pow(static_cast<unsigned>(delta - 1));
    }
  }
  return primitive_part(b, content(b));
}

Polynomial gcd_core(const Polynomial& a, const Polynomial& b);

Polynomial content(const UPoly& p) {
  // start from the sparsest coefficient: cheapest gcds first
  std::vector<const Polynomial*> order;
  for (const auto& c : p)
    if (!c.is_zero()) order.push_back(&c);
  std::sort(order.begin(), order.end(),
            [](const Polynomial* x, const Polynomial* y) { return x->term_count() < y->term_count(); });
  Polynomial g;
  for (const auto* c : order) {
    g = g.is_zero() ? c->monic() : gcd(g, *c);
    if (g.is_constant()) return Polynomial(1);
  }
  return g;
}

// Common factors of a and b when v occurs in a only: they divide every
// coefficient of a with respect to v.
Polynomial gcd_with_coefficients(const Polynomial& a, VarId v, const Polynomial& b) {
  auto coeffs = a.coefficients_in(v);
  std::sort(coeffs.begin(), coeffs.end(),
            [](const Polynomial& x, const Polynomial& y) { return x.term_count() < y.term_count(); });
  Polynomial g = b;
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return Polynomial(1);
  }
  return g;
}

Polynomial gcd_core(const Polynomial& a, const Polynomial& b) {
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a.monic() == b.monic()) return a.monic();

  auto va = a.variables(), vb = b.variables();
  for (VarId v : va)
    if (!std::binary_search(vb.begin(), vb.end(), v)) return gcd_with_coefficients(a, v, b);
  for (VarId v : vb)
    if (!std::binary_search(va.begin(), va.end(), v)) return gcd_with_coefficients(b, v, a);

  // trial division by the smaller operand
  const Polynomial& small = a.term_count() <= b.term_count() ? a : b;
  const Polynomial& large = a.term_count() <= b.term_count() ? b : a;
  if (small.total_degree() <= large.total_degree() && large.divide_exact(small)) return small.monic();

  // main variable: smallest degree in either operand
  VarId main = va.front();
  auto best = std::make_pair(~0u, ~0u);
  for (VarId v : va) {
    auto da = a.degree(v), db = b.degree(v);
    auto key = std::make_pair(std::min(da, db), std::max(da, db));
    if (key < best) best = key, main = v;
  }
  UPoly ua = a.coefficients_in(main), ub = b.coefficients_in(main);
  Polynomial ca = content(ua), cb = content(ub);
  Polynomial c = gcd(ca, cb);
  UPoly pa = primitive_part(ua, ca), pb = primitive_part(ub, cb);
  UPoly g = subresultant_gcd(std::move(pa), std::move(pb));
  return (c * Polynomial::from_coefficients(main, g)).monic();
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  Monomial ma = a.monomial_content(), mb = b.monomial_content();
  Monomial common = ma.min_with(mb);
  Polynomial ra = a.divide_monomial(ma), rb = b.divide_monomial(mb);
  Polynomial g = gcd_core(ra, rb);
  return g.times_monomial(common, 1).monic();
}

}  // namespace gzkit
