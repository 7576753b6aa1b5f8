#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>

#include "gzkit/errors.hpp"
#include "gzkit/gzmod.hpp"

namespace gzkit {

Scalar PointValue::scalar() const {
  return RationalFunction(Polynomial::var(VarId::param(tag)) + Polynomial(offset));
}

std::string PointValue::render() const {
  std::string out = "z[" + std::to_string(tag) + "]";
  if (sgn(offset) > 0) out += "+" + render_rational(offset);
  if (sgn(offset) < 0) out += render_rational(offset);
  return out;
}

Rational specialization_value(int tag) {
  Rational q(7919L * tag + 13, 101L * tag + 3);
  q.canonicalize();
  return q;
}

EvalPoint::EvalPoint(Composition lambda, std::vector<PointValue> values)
    : lambda_(std::move(lambda)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != lambda_.size())
    throw ValidationError("evaluation point needs " + std::to_string(lambda_.size()) + " values");
  for (const PointValue& p : values_)
    if (p.tag < 1) throw ValidationError("parameter tags start at 1");
}

EvalPoint EvalPoint::generic(const Composition& lambda) {
  std::vector<PointValue> values;
  for (int a = 0; a < lambda.size(); ++a) values.push_back(PointValue{a + 1, 0});
  return EvalPoint(lambda, std::move(values));
}

bool EvalPoint::integral_difference(int a, int b) const {
  if (values_[a].tag != values_[b].tag) return false;
  Rational d = values_[a].offset - values_[b].offset;
  return d.get_den() == 1;
}

bool EvalPoint::is_regular() const {
  for (int i = 1; i < lambda_.rows(); ++i) {
    int begin = lambda_.row_begin(i);
    for (int a = begin; a < begin + lambda_.part(i); ++a)
      for (int b = a + 1; b < begin + lambda_.part(i); ++b)
        if (integral_difference(a, b)) return false;
  }
  return true;
}

EvalPoint EvalPoint::shifted(const ShiftVector& s) const {
  EvalPoint r = *this;
  for (int a = 0; a < lambda_.size(); ++a) r.values_[a].offset += s[a];
  return r;
}

std::map<VarId, Polynomial> EvalPoint::substitution() const {
  std::map<VarId, Polynomial> out;
  for (int a = 0; a < lambda_.size(); ++a) out.emplace(lambda_.var_flat(a), values_[a].scalar().num());
  return out;
}

std::map<VarId, Rational> EvalPoint::specialized_substitution() const {
  std::map<VarId, Rational> out;
  for (int a = 0; a < lambda_.size(); ++a)
    out.emplace(lambda_.var_flat(a), specialization_value(values_[a].tag) + values_[a].offset);
  return out;
}

std::string EvalPoint::render() const {
  std::string out = "{";
  for (int a = 0; a < lambda_.size(); ++a) {
    Index ix = lambda_.index(a);
    if (a) out += ", ";
    out += "x[" + std::to_string(ix.row) + "," + std::to_string(ix.col) + "]=" + values_[a].render();
  }
  return out + "}";
}

EvalPoint point_action(const ShiftVector& gamma, const EvalPoint& v) {
  if (gamma.size() != v.lambda().size()) throw InvalidIndex("shift vector has the wrong length");
  return v.shifted(-gamma);
}

Scalar GZCharacter::evaluate(Index a) const {
  const std::vector<PointValue>& row = rows.at(a.row - 1);
  int degree = a.col;
  if (degree < 0 || degree > static_cast<int>(row.size())) throw InvalidIndex("character index out of range");
  std::vector<Scalar> e(degree + 1, Scalar(0));
  e[0] = Scalar(1);
  for (const PointValue& p : row) {
    Scalar s = p.scalar();
    for (int d = degree; d >= 1; --d) e[d] += e[d - 1] * s;
  }
  return e[degree];
}

std::string GZCharacter::render() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += " | ";
    for (std::size_t j = 0; j < rows[i].size(); ++j) out += (j ? ", " : "") + rows[i][j].render();
  }
  return out + "]";
}

GZCharacter character_of(const EvalPoint& v) {
  GZCharacter chi;
  const Composition& lambda = v.lambda();
  for (int i = 1; i <= lambda.rows(); ++i) {
    int begin = lambda.row_begin(i);
    std::vector<PointValue> row(v.values().begin() + begin, v.values().begin() + begin + lambda.part(i));
    std::sort(row.begin(), row.end());
    chi.rows.push_back(std::move(row));
  }
  return chi;
}

namespace {

std::vector<bool> touched_by(const Composition& lambda, const ReducedWord& w) {
  std::vector<bool> touched(lambda.size(), false);
  for (const Letter& s : w.letters) {
    if (s.row < 1 || s.row > lambda.rows() || s.pos < 1 || s.pos >= lambda.part(s.row))
      throw InvalidPair("letter s[" + std::to_string(s.row) + "," + std::to_string(s.pos) + "] out of range");
    touched[lambda.flat(s.row, s.pos)] = true;
    touched[lambda.flat(s.row, s.pos + 1)] = true;
  }
  return touched;
}

// ev_v(d_w(xi(f))) with v(x_a) given by value(a); values are substituted for
// the variables d_w does not touch before differentiating.
template <typename ValueFn>
Polynomial evaluate_core(const Composition& lambda, const ReducedWord& w, const ShiftVector& xi,
                         const Polynomial& f, ValueFn value) {
  std::vector<bool> touched = touched_by(lambda, w);
  std::map<VarId, Polynomial> first;
  std::map<VarId, Polynomial> second;
  for (int a = 0; a < lambda.size(); ++a) {
    VarId x = lambda.var_flat(a);
    if (touched[a]) {
      if (xi[a] != 0) first.emplace(x, Polynomial::var(x) + Polynomial(xi[a]));
      second.emplace(x, value(a));
    } else {
      first.emplace(x, value(a) + Polynomial(xi[a]));
    }
  }
  Polynomial g = f.substitute(first);
  if (w.empty()) return g;
  g = apply_partial_word(lambda, w, g);
  return g.substitute(second);
}

}  // namespace

Scalar eval_functional(const Functional& beta, const Polynomial& f) {
  const EvalPoint& v = beta.base;
  Polynomial r = evaluate_core(v.lambda(), beta.word, beta.shift, f,
                               [&](int a) { return v.value(a).scalar().num(); });
  return Scalar(r);
}

Rational eval_functional_specialized(const Functional& beta, const Polynomial& f) {
  const EvalPoint& v = beta.base;
  Polynomial r = evaluate_core(v.lambda(), beta.word, beta.shift, f, [&](int a) {
    return Polynomial(specialization_value(v.value(a).tag) + v.value(a).offset);
  });
  return r.constant_value();
}

std::vector<Scalar> eval_conjugated(const Functional& beta, const RowPermutation& rho,
                                    const std::vector<Polynomial>& fs) {
  const Composition& lambda = beta.base.lambda();
  AffineSymmetry r = AffineSymmetry::permutation(lambda, rho);
  AffineSymmetry xi_rho = r * AffineSymmetry::translation(lambda, beta.shift) * r.inverse();
  NilHecke conj = NilHecke::group_element(lambda, rho) * NilHecke::ddiff(lambda, beta.word) *
                  NilHecke::group_element(lambda, rho.inverse());
  std::map<VarId, Polynomial> at_v = beta.base.substitution();
  std::vector<std::pair<Scalar, ReducedWord>> terms;
  for (const auto& [y, q] : conj.terms()) {
    Scalar qv = q.transform(at_v);
    if (!qv.is_zero()) terms.emplace_back(qv, reduced_word(lambda, y));
  }
  std::vector<Scalar> out;
  out.reserve(fs.size());
  for (const Polynomial& f : fs) {
    Polynomial shifted = xi_rho.apply(lambda, f);
    Scalar total(0);
    for (const auto& [qv, y] : terms)
      total += qv * Scalar(apply_partial_word(lambda, y, shifted).substitute(at_v));
    out.push_back(total);
  }
  return out;
}

Scalar eval_conjugated(const Functional& beta, const RowPermutation& rho, const Polynomial& f) {
  return eval_conjugated(beta, rho, std::vector<Polynomial>{f}).front();
}

YoungSubgroup point_stabilizer(const EvalPoint& v) {
  const Composition& lambda = v.lambda();
  std::vector<std::vector<std::vector<int>>> rows;
  for (int i = 1; i <= lambda.rows(); ++i) {
    std::vector<std::vector<int>> blocks;
    std::map<PointValue, int> slot;
    for (int j = 1; j <= lambda.part(i); ++j) {
      if (i == lambda.rows()) {
        blocks.push_back({j});
        continue;
      }
      const PointValue& p = v.value(Index{i, j});
      auto it = slot.find(p);
      if (it == slot.end()) {
        slot.emplace(p, static_cast<int>(blocks.size()));
        blocks.push_back({j});
      } else {
        blocks[it->second].push_back(j);
      }
    }
    rows.push_back(std::move(blocks));
  }
  return YoungSubgroup(lambda, std::move(rows));
}

std::vector<ShiftVector> window_points(const Composition& lambda, int radius) {
  if (radius < 0) throw ValidationError("radius must be non-negative");
  int n = lambda.lattice_rank();
  std::vector<ShiftVector> out;
  ShiftVector cur(lambda.size());
  for (int a = 0; a < n; ++a) cur[a] = -radius;
  while (true) {
    out.push_back(cur);
    int a = n - 1;
    while (a >= 0 && cur[a] == radius) {
      cur[a] = -radius;
      --a;
    }
    if (a < 0) break;
    ++cur[a];
  }
  return out;
}

SetupReport singularity_setup_check(const EvalPoint& v, int radius) {
  const Composition& lambda = v.lambda();
  SetupReport report;
  YoungSubgroup gv = point_stabilizer(v);
  report.stabilizer = gv.render();
  for (int i = 1; i <= lambda.rows(); ++i) {
    OrbitReport orb = orbits_and_stabilizer(lambda.part(i), gv.blocks(i));
    report.segments.push_back(orb.orbits);
    if (!orb.contiguous) report.contiguous_orbits = false;
  }
  // a shift equalising two values with integral difference enlarges the stabilizer
  for (int i = 1; i < lambda.rows() && !report.witness; ++i) {
    int begin = lambda.row_begin(i);
    for (int a = begin; a < begin + lambda.part(i) && !report.witness; ++a)
      for (int b = a + 1; b < begin + lambda.part(i) && !report.witness; ++b) {
        if (!v.integral_difference(a, b) || v.value(a) == v.value(b)) continue;
        report.maximal_stabilizer = false;
        Rational d = v.value(a).offset - v.value(b).offset;  // need xi_b - xi_a = d
        long dl = d.get_num().get_si();
        ShiftVector w(lambda.size());
        long base = -dl / 2;
        w[a] = base;
        w[b] = base + dl;
        report.witness = w;
        report.witness_in_window = std::max(std::labs(w[a]), std::labs(w[b])) <= radius;
      }
  }
  return report;
}

ShiftVector canonical_shift(const YoungSubgroup& gv, const ShiftVector& xi) {
  const Composition& lambda = gv.lambda();
  ShiftVector out = xi;
  for (int i = 1; i <= lambda.rows(); ++i) {
    for (const std::vector<int>& block : gv.blocks(i)) {
      std::vector<long> vals;
      for (int j : block) vals.push_back(xi[lambda.flat(i, j)]);
      std::sort(vals.rbegin(), vals.rend());
      for (std::size_t k = 0; k < block.size(); ++k) out[lambda.flat(i, block[k])] = vals[k];
    }
  }
  return out;
}

namespace {

YoungSubgroup shift_stabilizer(const YoungSubgroup& gv, const ShiftVector& c) {
  const Composition& lambda = gv.lambda();
  std::vector<std::vector<std::vector<int>>> rows;
  for (int i = 1; i <= lambda.rows(); ++i) {
    std::vector<std::vector<int>> blocks;
    for (const std::vector<int>& block : gv.blocks(i)) {
      std::map<long, std::vector<int>> by_value;
      for (int j : block) by_value[c[lambda.flat(i, j)]].push_back(j);
      for (auto& [val, cols] : by_value) blocks.push_back(cols);
    }
    rows.push_back(std::move(blocks));
  }
  return YoungSubgroup(lambda, std::move(rows));
}

long max_abs(const ShiftVector& s) {
  long m = 0;
  for (long x : s.offsets()) m = std::max(m, x < 0 ? -x : x);
  return m;
}

}  // namespace

std::vector<OrbitData> canonical_representatives(const EvalPoint& v, int radius) {
  const Composition& lambda = v.lambda();
  YoungSubgroup gv = point_stabilizer(v);
  std::map<ShiftVector, std::vector<ShiftVector>> grouped;
  for (const ShiftVector& xi : window_points(lambda, radius)) grouped[canonical_shift(gv, xi)].push_back(xi);
  std::vector<OrbitData> out;
  for (auto& [c, members] : grouped) {
    OrbitData o;
    o.members = std::move(members);
    o.canonical = c;
    o.stabilizer = shift_stabilizer(gv, c);
    o.reps = shortest_coset_reps(gv, o.stabilizer);
    o.character = character_of(v.shifted(c));
    o.interior = max_abs(c) <= radius - 1;
    if (o.reps.size() != o.members.size())
      throw InvalidSingularSetup("orbit of " + c.render(lambda) + " does not match its coset representatives");
    out.push_back(std::move(o));
  }
  return out;
}

std::string GeneratorRef::name() const {
  switch (kind) {
    case Kind::E: return "E" + std::to_string(row);
    case Kind::F: return "F" + std::to_string(row);
    case Kind::Gamma: break;
  }
  return "gamma[" + std::to_string(index.row) + "," + std::to_string(index.col) + "]";
}

std::vector<GeneratorRef> module_generators(const Composition& lambda) {
  std::vector<GeneratorRef> out;
  for (int i = 1; i < lambda.rows(); ++i) {
    out.push_back(GeneratorRef{GeneratorRef::Kind::E, i, {}});
    out.push_back(GeneratorRef{GeneratorRef::Kind::F, i, {}});
  }
  for (const Index& a : lambda.indices()) out.push_back(GeneratorRef{GeneratorRef::Kind::Gamma, 0, a});
  return out;
}

GeneratorRef parse_generator(const Composition& lambda, const std::string& name) {
  std::string s;
  for (char ch : name)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '_') s += ch;
  for (const GeneratorRef& g : module_generators(lambda)) {
    std::string n = g.name();
    if (s == n) return g;
    if (g.kind == GeneratorRef::Kind::Gamma && s == "g" + n.substr(5)) return g;
  }
  throw NameError("unknown generator '" + name + "' for lambda " + lambda.render());
}

SkewOperator generator_operator(const Composition& lambda, const GeneratorRef& g) {
  switch (g.kind) {
    case GeneratorRef::Kind::E: return generator_E(lambda, g.row);
    case GeneratorRef::Kind::F: return generator_F(lambda, g.row);
    case GeneratorRef::Kind::Gamma: break;
  }
  return generator_gamma(lambda, g.index);
}

}  // namespace gzkit
