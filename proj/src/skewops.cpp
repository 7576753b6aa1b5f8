#include <algorithm>
#include <cctype>

#include "gzkit/skewops.hpp"

namespace gzkit {

// ---------------------------------------------------------------- AffineSymmetry

AffineSymmetry AffineSymmetry::identity(const Composition& lambda) {
  return AffineSymmetry{RowPermutation::identity(lambda), ShiftVector(lambda.size())};
}

AffineSymmetry AffineSymmetry::translation(const Composition& lambda, const ShiftVector& shift) {
  if (shift.size() != lambda.size()) throw InvalidIndex("shift vector has the wrong length");
  return AffineSymmetry{RowPermutation::identity(lambda), shift};
}

AffineSymmetry AffineSymmetry::permutation(const Composition& lambda, const RowPermutation& perm) {
  return AffineSymmetry{perm, ShiftVector(lambda.size())};
}

AffineSymmetry AffineSymmetry::phi(const Composition& lambda, Index a, long power) {
  return translation(lambda, ShiftVector::unit(lambda, a, power));
}

AffineSymmetry AffineSymmetry::operator*(const AffineSymmetry& o) const {
  // shift'_b = c_b + d_{sigma^{-1}(b)}
  AffineSymmetry r;
  r.perm = perm * o.perm;
  RowPermutation inv = perm.inverse();
  r.shift = ShiftVector(shift.size());
  for (int b = 0; b < shift.size(); ++b) r.shift[b] = shift[b] + o.shift[inv(b)];
  return r;
}

AffineSymmetry AffineSymmetry::inverse() const {
  AffineSymmetry r;
  r.perm = perm.inverse();
  r.shift = ShiftVector(shift.size());
  for (int b = 0; b < shift.size(); ++b) r.shift[b] = -shift[perm(b)];
  return r;
}

std::map<VarId, Polynomial> AffineSymmetry::images(const Composition& lambda) const {
  std::map<VarId, Polynomial> out;
  for (int a = 0; a < lambda.size(); ++a) {
    int b = perm(a);
    if (b == a && shift[b] == 0) continue;
    out.emplace(lambda.var_flat(a), Polynomial::var(lambda.var_flat(b)) + Polynomial(shift[b]));
  }
  return out;
}

Polynomial AffineSymmetry::apply(const Composition& lambda, const Polynomial& f) const {
  if (is_identity()) return f;
  return f.substitute(images(lambda));
}

RationalFunction AffineSymmetry::apply(const Composition& lambda, const RationalFunction& f) const {
  if (is_identity()) return f;
  return f.transform(images(lambda));
}

std::string AffineSymmetry::render(const Composition& lambda) const {
  std::vector<std::string> parts;
  if (!perm.is_identity()) parts.push_back(perm.render_cycles(lambda));
  for (int a = 0; a < shift.size(); ++a) {
    if (shift[a] == 0) continue;
    Index ix = lambda.index(a);
    parts.push_back("phi[" + std::to_string(ix.row) + "," + std::to_string(ix.col) + "]^" +
                    std::to_string(shift[a]));
  }
  if (parts.empty()) return "id";
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? " * " : "") + parts[k];
  return out;
}

// ---------------------------------------------------------------- SkewOperator

SkewOperator SkewOperator::identity(const Composition& lambda) {
  return symmetry(lambda, AffineSymmetry::identity(lambda));
}

SkewOperator SkewOperator::multiplication(const Composition& lambda, const RationalFunction& f) {
  return symmetry(lambda, AffineSymmetry::identity(lambda), f);
}

SkewOperator SkewOperator::symmetry(const Composition& lambda, const AffineSymmetry& pi, const RationalFunction& coef) {
  SkewOperator op(lambda);
  op.add_term(pi, coef);
  return op;
}

SkewOperator SkewOperator::phi(const Composition& lambda, Index a, long power) {
  return symmetry(lambda, AffineSymmetry::phi(lambda, a, power));
}

SkewOperator SkewOperator::transposition(const Composition& lambda, Index a, Index b) {
  return symmetry(lambda, AffineSymmetry::permutation(lambda, RowPermutation::transposition(lambda, a, b)));
}

void SkewOperator::add_term(const AffineSymmetry& pi, const RationalFunction& coef) {
  if (coef.is_zero()) return;
  auto it = terms_.find(pi);
  if (it == terms_.end()) {
    terms_.emplace(pi, coef);
    return;
  }
  it->second += coef;
  if (it->second.is_zero()) terms_.erase(it);
}

bool SkewOperator::is_pure_multiplication() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first.is_identity();
}

RationalFunction SkewOperator::coefficient(const AffineSymmetry& pi) const {
  auto it = terms_.find(pi);
  return it == terms_.end() ? RationalFunction() : it->second;
}

SkewOperator SkewOperator::operator+(const SkewOperator& o) const {
  SkewOperator r = is_zero() && lambda_.rows() == 0 ? SkewOperator(o.lambda_) : *this;
  for (const auto& [pi, c] : o.terms_) r.add_term(pi, c);
  return r;
}

SkewOperator SkewOperator::operator-(const SkewOperator& o) const { return *this + (-o); }

SkewOperator SkewOperator::operator-() const {
  SkewOperator r(lambda_);
  for (const auto& [pi, c] : terms_) r.terms_.emplace(pi, -c);
  return r;
}

SkewOperator SkewOperator::left_multiply(const RationalFunction& f) const {
  SkewOperator r(lambda_);
  if (f.is_zero()) return r;
  for (const auto& [pi, c] : terms_) r.terms_.emplace(pi, f * c);
  return r;
}

SkewOperator SkewOperator::compose(const SkewOperator& o) const {
  SkewOperator r(lambda_.rows() ? lambda_ : o.lambda_);
  for (const auto& [pi, f] : terms_)
    for (const auto& [rho, g] : o.terms_) r.add_term(pi * rho, f * pi.apply(lambda_, g));
  return r;
}

RationalFunction SkewOperator::apply(const RationalFunction& f) const {
  RationalFunction out;
  if (f.is_zero()) return out;
  for (const auto& [pi, c] : terms_) out += c * pi.apply(lambda_, f);
  return out;
}

std::string SkewOperator::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [pi, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    std::string coef = c.render();
    bool compound = !c.is_polynomial() || c.num().term_count() > 1;
    out += compound ? "(" + coef + ")" : coef;
    out += " * " + pi.render(lambda_);
  }
  return out;
}

Polynomial apply_to_polynomial(const SkewOperator& op, const Polynomial& f) {
  const Composition& lambda = op.lambda();
  Polynomial common(1);
  for (const auto& [pi, c] : op.terms()) {
    if (c.den().is_one()) continue;
    common = common * (c.den() / gcd(common, c.den()));
  }
  Polynomial num;
  for (const auto& [pi, c] : op.terms()) num += c.num() * (common / c.den()) * pi.apply(lambda, f);
  std::optional<Polynomial> q = num.divide_exact(common);
  if (!q) throw NotInvariantInput("operator image is not a polynomial");
  return *q;
}

SkewOperator compose(const SkewOperator& a, const SkewOperator& b) { return a.compose(b); }

RationalFunction apply(const SkewOperator& op, const RationalFunction& f) { return op.apply(f); }

SkewOperator commutator(const SkewOperator& a, const SkewOperator& b) { return a.compose(b) - b.compose(a); }

// ---------------------------------------------------------------- generators

const SkewOperator& GZGenerators::g(Index a) const {
  auto it = gamma.find(a);
  if (it == gamma.end()) throw InvalidIndex("no generator gamma for this index");
  return it->second;
}

Polynomial elementary_symmetric(const Composition& lambda, int row, int degree) {
  // e_d via the recursion on the row variables
  std::vector<Polynomial> e(degree + 1);
  e[0] = Polynomial(1);
  for (const auto& a : lambda.row_indices(row)) {
    Polynomial x = Polynomial::var(lambda.var(a));
    for (int d = degree; d >= 1; --d) e[d] += e[d - 1] * x;
  }
  return e[degree];
}

std::vector<InvariantMonomial> invariant_family(const Composition& lambda, int max_degree) {
  struct Gen {
    int degree;
    Polynomial value;
  };
  std::vector<Gen> gens;
  for (int i = 1; i <= lambda.rows(); ++i)
    for (int d = 1; d <= lambda.part(i); ++d) gens.push_back({d, elementary_symmetric(lambda, i, d)});
  std::vector<InvariantMonomial> out;
  InvariantMonomial current{std::vector<int>(gens.size(), 0), 0, Polynomial(1)};
  // depth-first over exponent vectors, last generator varying fastest
  auto recurse = [&](auto&& self, std::size_t g) -> void {
    if (g == gens.size()) {
      out.push_back(current);
      return;
    }
    InvariantMonomial saved = current;
    while (true) {
      self(self, g + 1);
      if (current.degree + gens[g].degree > max_degree) break;
      current.exponents[g]++;
      current.degree += gens[g].degree;
      current.value *= gens[g].value;
    }
    current = saved;
  };
  recurse(recurse, 0);
  std::stable_sort(out.begin(), out.end(), [](const InvariantMonomial& a, const InvariantMonomial& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.exponents < b.exponents;
  });
  return out;
}

RationalFunction gz_coefficient(const Composition& lambda, int i, int j, int sign) {
  Polynomial xij = Polynomial::var(VarId::x(i, j));
  Polynomial num(1), den(1);
  for (const auto& a : lambda.row_indices(i + sign)) num *= xij - Polynomial::var(lambda.var(a));
  for (const auto& b : lambda.row_indices(i))
    if (b.col != j) den *= xij - Polynomial::var(lambda.var(b));
  return RationalFunction::from_coprime(num, den);
}

namespace {

void check_generator_row(const Composition& lambda, int i) {
  if (i < 1 || i >= lambda.rows())
    throw InvalidIndex("generator index " + std::to_string(i) + " outside 1.." + std::to_string(lambda.rows() - 1));
}

SkewOperator gz_generator(const Composition& lambda, int i, int sign) {
  check_generator_row(lambda, i);
  SkewOperator op(lambda);
  for (int j = 1; j <= lambda.part(i); ++j)
    op.add_term(AffineSymmetry::phi(lambda, {i, j}, sign), gz_coefficient(lambda, i, j, sign));
  return op;
}

}  // namespace

SkewOperator generator_E(const Composition& lambda, int i) { return gz_generator(lambda, i, +1); }

SkewOperator generator_F(const Composition& lambda, int i) { return gz_generator(lambda, i, -1); }

SkewOperator generator_gamma(const Composition& lambda, Index a) {
  if (!lambda.contains(a)) throw InvalidIndex("gamma index outside I");
  return SkewOperator::multiplication(lambda, elementary_symmetric(lambda, a.row, a.col));
}

GZGenerators build_generators(const Composition& lambda) {
  GZGenerators g;
  g.lambda = lambda;
  for (int i = 1; i < lambda.rows(); ++i) {
    g.E.push_back(generator_E(lambda, i));
    g.F.push_back(generator_F(lambda, i));
  }
  for (const auto& a : lambda.indices()) g.gamma.emplace(a, generator_gamma(lambda, a));
  return g;
}

SkewOperator generator_by_name(const Composition& lambda, const std::string& name) {
  std::string s;
  for (char c : name)
    if (c != '_' && c != ' ') s += c;
  auto parse_int = [&](const std::string& t) {
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw NameError("unknown generator '" + name + "'");
    return std::stoi(t);
  };
  if (!s.empty() && (s[0] == 'E' || s[0] == 'F')) {
    int i = parse_int(s.substr(1));
    if (i < 1 || i >= lambda.rows()) throw NameError("generator '" + name + "' out of range");
    return s[0] == 'E' ? generator_E(lambda, i) : generator_F(lambda, i);
  }
  std::size_t open = s.find('[');
  std::string head = s.substr(0, open);
  if (open != std::string::npos && (head == "gamma" || head == "g") && s.back() == ']') {
    std::string inner = s.substr(open + 1, s.size() - open - 2);
    std::size_t comma = inner.find(',');
    if (comma == std::string::npos) throw NameError("unknown generator '" + name + "'");
    Index a{parse_int(inner.substr(0, comma)), parse_int(inner.substr(comma + 1))};
    if (!lambda.contains(a)) throw NameError("generator '" + name + "' out of range");
    return generator_gamma(lambda, a);
  }
  throw NameError("unknown generator '" + name + "'");
}

// ---------------------------------------------------------------- invariance

bool is_invariant(const Composition& lambda, const RationalFunction& f, const YoungSubgroup& group) {
  for (int i = 1; i <= lambda.rows(); ++i)
    for (const auto& block : group.blocks(i))
      for (std::size_t t = 0; t + 1 < block.size(); ++t)
        if (!(f.swap_vars(VarId::x(i, block[t]), VarId::x(i, block[t + 1])) == f)) return false;
  return true;
}

InvarianceReport check_invariance(const SkewOperator& op, const Polynomial& f, const YoungSubgroup& group) {
  const Composition& lambda = op.lambda();
  if (!is_invariant(lambda, RationalFunction(f), group))
    throw NotInvariantInput("input polynomial is not invariant under " + group.render());
  InvarianceReport report;
  report.image = op.apply(RationalFunction(f));
  report.is_polynomial = report.image.is_polynomial();
  report.invariant = is_invariant(lambda, report.image, group);
  report.is_invariant_image = report.is_polynomial && report.invariant;
  return report;
}

}  // namespace gzkit
