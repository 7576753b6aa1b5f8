#include <algorithm>
#include <cassert>
#include <sstream>

#include "gzkit/exactalg.hpp"

namespace gzkit {

std::string render_rational(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  std::size_t pos = 0;
  auto digits = [&](std::size_t start) {
    std::size_t p = start;
    while (p < text.size() && text[p] >= '0' && text[p] <= '9') ++p;
    return p;
  };
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  std::size_t end = digits(pos);
  if (end == pos) throw ParseError("expected digits in rational '" + text + "'", pos);
  if (end < text.size() && text[end] == '/') {
    std::size_t dstart = end + 1;
    std::size_t dend = digits(dstart);
    if (dend == dstart) throw ParseError("expected denominator in rational '" + text + "'", dstart);
    end = dend;
  }
  if (end != text.size()) throw ParseError("trailing characters in rational '" + text + "'", end);
  std::string body = text[0] == '+' ? text.substr(1) : text;
  Rational q;
  if (q.set_str(body, 10) != 0) throw ParseError("malformed rational '" + text + "'", 0);
  if (q.get_den() == 0) throw DivisionByZero("zero denominator in rational '" + text + "'");
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------- VarId

VarId VarId::param(int t) {
  if (t < 1 || t >= 0x8000) throw InvalidIndex("parameter index out of range: " + std::to_string(t));
  return from_key(static_cast<std::uint16_t>(t));
}

VarId VarId::x(int row, int col) {
  if (row < 1 || row > 255 || col < 1 || col > 127)
    throw InvalidIndex("module variable index out of range: (" + std::to_string(row) + "," +
                       std::to_string(col) + ")");
  return from_key(static_cast<std::uint16_t>(kModuleBit | (row << 7) | col));
}

std::string VarId::render() const {
  if (is_param()) return "z[" + std::to_string(param_index()) + "]";
  return "x[" + std::to_string(row()) + "," + std::to_string(col()) + "]";
}

// ---------------------------------------------------------------- Monomial

namespace {
inline std::uint32_t pack(VarId v, std::uint32_t e) { return (std::uint32_t(v.key()) << 16) | e; }
inline std::uint16_t key_of(std::uint32_t entry) { return static_cast<std::uint16_t>(entry >> 16); }
inline std::uint32_t exp_of(std::uint32_t entry) { return entry & 0xffffu; }
}  // namespace

void Monomial::push(VarId v, std::uint32_t e) {
  if (e == 0) return;
  if (size_ >= kCapacity) throw InvalidIndex("too many distinct variables in one monomial");
  if (e > 0xffffu) throw InvalidIndex("exponent overflow");
  entries_[size_++] = pack(v, e);
  degree_ += e;
}

Monomial Monomial::var(VarId v, std::uint32_t exp) {
  Monomial m;
  m.push(v, exp);
  return m;
}

std::uint32_t Monomial::exponent(VarId v) const {
  for (int k = 0; k < size_; ++k)
    if (key_of(entries_[k]) == v.key()) return exp_of(entries_[k]);
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  int i = 0, j = 0;
  while (i < size_ && j < o.size_) {
    auto ka = key_of(entries_[i]), kb = key_of(o.entries_[j]);
    if (ka == kb) {
      r.push(VarId::from_key(ka), exp_of(entries_[i]) + exp_of(o.entries_[j]));
      ++i, ++j;
    } else if (ka < kb) {
      r.push(VarId::from_key(ka), exp_of(entries_[i++]));
    } else {
      r.push(VarId::from_key(kb), exp_of(o.entries_[j++]));
    }
  }
  for (; i < size_; ++i) r.push(VarId::from_key(key_of(entries_[i])), exp_of(entries_[i]));
  for (; j < o.size_; ++j) r.push(VarId::from_key(key_of(o.entries_[j])), exp_of(o.entries_[j]));
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (degree_ > o.degree_) return false;
  int j = 0;
  for (int i = 0; i < size_; ++i) {
    auto k = key_of(entries_[i]);
    while (j < o.size_ && key_of(o.entries_[j]) < k) ++j;
    if (j == o.size_ || key_of(o.entries_[j]) != k) return false;
    if (exp_of(o.entries_[j]) < exp_of(entries_[i])) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& o) const {
  Monomial r;
  int j = 0;
  for (int i = 0; i < size_; ++i) {
    auto k = key_of(entries_[i]);
    std::uint32_t e = exp_of(entries_[i]);
    if (j < o.size_ && key_of(o.entries_[j]) == k) {
      assert(exp_of(o.entries_[j]) <= e);
      e -= exp_of(o.entries_[j]);
      ++j;
    }
    r.push(VarId::from_key(k), e);
  }
  assert(j == o.size_);
  return r;
}

Monomial Monomial::min_with(const Monomial& o) const {
  Monomial r;
  int i = 0, j = 0;
  while (i < size_ && j < o.size_) {
    auto ka = key_of(entries_[i]), kb = key_of(o.entries_[j]);
    if (ka == kb) {
      r.push(VarId::from_key(ka), std::min(exp_of(entries_[i]), exp_of(o.entries_[j])));
      ++i, ++j;
    } else if (ka < kb) {
      ++i;
    } else {
      ++j;
    }
  }
  return r;
}

Monomial Monomial::without(VarId v) const {
  Monomial r;
  for (int i = 0; i < size_; ++i)
    if (key_of(entries_[i]) != v.key()) r.push(VarId::from_key(key_of(entries_[i])), exp_of(entries_[i]));
  return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (degree_ != o.degree_) return degree_ <=> o.degree_;
  int i = 0, j = 0;
  while (i < size_ && j < o.size_) {
    auto ka = key_of(entries_[i]), kb = key_of(o.entries_[j]);
    if (ka == kb) {
      auto ea = exp_of(entries_[i]), eb = exp_of(o.entries_[j]);
      if (ea != eb) return ea <=> eb;
      ++i, ++j;
    } else {
      // the side holding the earlier variable has the larger exponent there
      return ka < kb ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  if (i < size_) return std::strong_ordering::greater;
  if (j < o.size_) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

bool Monomial::operator==(const Monomial& o) const {
  if (size_ != o.size_ || degree_ != o.degree_) return false;
  for (int i = 0; i < size_; ++i)
    if (entries_[i] != o.entries_[i]) return false;
  return true;
}

std::string Monomial::render() const {
  std::string out;
  for (int i = 0; i < size_; ++i) {
    if (i) out += '*';
    out += VarId::from_key(key_of(entries_[i])).render();
    if (exp_of(entries_[i]) != 1) out += "^" + std::to_string(exp_of(entries_[i]));
  }
  return out;
}

// ---------------------------------------------------------------- Polynomial

namespace {

bool term_greater(const Term& a, const Term& b) { return a.mono > b.mono; }

// Sorts and merges equal monomials; drops zeros.
std::vector<Term> canonicalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && sgn(out.back().coef) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coef) == 0) out.pop_back();
  return out;
}

}  // namespace

Polynomial::Polynomial(const Rational& c) {
  if (sgn(c) != 0) terms_.push_back({Monomial(), c});
}

Polynomial Polynomial::var(VarId v) { return monomial(Monomial::var(v), 1); }

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p;
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = canonicalize(std::move(terms));
  return p;
}

Rational Polynomial::constant_value() const {
  assert(is_constant());
  return terms_.empty() ? Rational(0) : terms_[0].coef;
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coef == 1;
}

std::uint32_t Polynomial::degree(VarId v) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

std::vector<VarId> Polynomial::variables() const {
  std::vector<VarId> vars;
  for (const auto& t : terms_)
    for (int k = 0; k < t.mono.size(); ++k) vars.push_back(t.mono.var_at(k));
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

bool Polynomial::only_params() const {
  for (const auto& t : terms_)
    for (int k = 0; k < t.mono.size(); ++k)
      if (!t.mono.var_at(k).is_param()) return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  Polynomial r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    auto c = terms_[i].mono <=> o.terms_[j].mono;
    if (c == 0) {
      Rational s = terms_[i].coef + o.terms_[j].coef;
      if (sgn(s) != 0) r.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i, ++j;
    } else if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else {
      r.terms_.push_back(o.terms_[j++]);
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.terms_.size() == 1) return times_monomial(o.terms_[0].mono, o.terms_[0].coef);
  if (terms_.size() == 1) return o.times_monomial(terms_[0].mono, terms_[0].coef);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, a.coef * b.coef});
  return from_terms(std::move(prod));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (sgn(c) == 0) return {};
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  if (sgn(c) == 0) return {};
  Polynomial r;
  r.terms_.reserve(terms_.size());
  // multiplication by a monomial preserves the term order
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
  return r;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result(1), base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  const Rational& lc = terms_[0].coef;
  if (lc == 1) return *this;
  Rational inv = 1 / lc;
  return scaled(inv);
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& o) const {
  if (o.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (is_zero()) return Polynomial();
  if (o.terms_.size() == 1) {
    const auto& d = o.terms_[0];
    Polynomial q;
    q.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!d.mono.divides(t.mono)) return std::nullopt;
      q.terms_.push_back({t.mono.quotient(d.mono), t.coef / d.coef});
    }
    return q;
  }
  if (o.total_degree() > total_degree()) return std::nullopt;
  const Term& lead = o.terms_[0];
  std::vector<Term> quotient;
  Polynomial rem = *this;
  while (!rem.is_zero()) {
    const Term& lt = rem.terms_[0];
    if (!lead.mono.divides(lt.mono)) return std::nullopt;
    Monomial qm = lt.mono.quotient(lead.mono);
    Rational qc = lt.coef / lead.coef;
    rem = rem - o.times_monomial(qm, qc);
    quotient.push_back({qm, std::move(qc)});
  }
  Polynomial q;
  q.terms_ = std::move(quotient);  // produced in descending order
  return q;
}

Polynomial Polynomial::operator/(const Polynomial& o) const {
  auto q = divide_exact(o);
  if (!q) throw Error("InexactDivision", "polynomial division is not exact");
  return *q;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial m = terms_[0].mono;
  for (std::size_t k = 1; k < terms_.size() && !m.is_one(); ++k) m = m.min_with(terms_[k].mono);
  return m;
}

Polynomial Polynomial::divide_monomial(const Monomial& m) const {
  if (m.is_one()) return *this;
  Polynomial r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono.quotient(m), t.coef});
  return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(VarId v) const {
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const auto& t : terms_) {
    auto e = t.mono.exponent(v);
    buckets[e].push_back({t.mono.without(v), t.coef});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    Polynomial p;
    p.terms_ = std::move(b);
    std::sort(p.terms_.begin(), p.terms_.end(), term_greater);
    out.push_back(std::move(p));
  }
  return out;
}

Polynomial Polynomial::from_coefficients(VarId v, std::span<const Polynomial> coeffs) {
  std::vector<Term> all;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    Monomial m = d ? Monomial::var(v, static_cast<std::uint32_t>(d)) : Monomial();
    for (const auto& t : coeffs[d].terms_) all.push_back({t.mono * m, t.coef});
  }
  return from_terms(std::move(all));
}

Polynomial Polynomial::substitute(const std::map<VarId, Polynomial>& images) const {
  if (images.empty() || is_zero()) return *this;
  // cache powers of the images per variable
  std::map<VarId, std::vector<Polynomial>> powers;
  auto power = [&](VarId v, std::uint32_t e) -> const Polynomial& {
    auto& list = powers[v];
    if (list.empty()) list.push_back(Polynomial(1));
    while (list.size() <= e) list.push_back(list.back() * images.at(v));
    return list[e];
  };
  std::vector<Term> all;
  for (const auto& t : terms_) {
    Monomial kept;
    Polynomial factor(t.coef);
    for (int k = 0; k < t.mono.size(); ++k) {
      VarId v = t.mono.var_at(k);
      auto e = t.mono.exp_at(k);
      if (images.count(v)) {
        factor = factor * power(v, e);
      } else {
        kept = kept * Monomial::var(v, e);
      }
    }
    for (const auto& ft : factor.terms_) all.push_back({ft.mono * kept, ft.coef});
  }
  return from_terms(std::move(all));
}

Polynomial Polynomial::swap_vars(VarId a, VarId b) const {
  std::vector<Term> all;
  all.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    auto ea = t.mono.exponent(a), eb = t.mono.exponent(b);
    m = t.mono.without(a).without(b) * Monomial::var(a, eb) * Monomial::var(b, ea);
    all.push_back({m, t.coef});
  }
  return from_terms(std::move(all));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t k = 0; k < terms_.size(); ++k)
    if (!(terms_[k].mono == o.terms_[k].mono) || terms_[k].coef != o.terms_[k].coef) return false;
  return true;
}

std::string Polynomial::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    bool negative = sgn(t.coef) < 0;
    if (negative) {
      out += '-';
    } else if (k) {
      out += '+';
    }
    Rational mag = abs(t.coef);
    if (t.mono.is_one()) {
      out += render_rational(mag);
    } else {
      if (mag != 1) out += render_rational(mag) + "*";
      out += t.mono.render();
    }
  }
  return out;
}

Rational evaluate(const Polynomial& f, const std::map<VarId, Rational>& values) {
  Rational out = 0;
  for (const auto& t : f.terms()) {
    Rational term = t.coef;
    for (int k = 0; k < t.mono.size(); ++k) {
      auto it = values.find(t.mono.var_at(k));
      if (it == values.end()) throw ValidationError("no value for " + t.mono.var_at(k).render());
      for (std::uint32_t e = 0; e < t.mono.exp_at(k); ++e) term *= it->second;
    }
    out += term;
  }
  return out;
}

}  // namespace gzkit
