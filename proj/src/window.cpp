#include <algorithm>
#include <set>

#include "gzkit/errors.hpp"
#include "gzkit/gzmod.hpp"
#include "gzkit/linalg.hpp"

namespace gzkit {

Functional ModuleWindow::functional(int index) const {
  const BasisEntry& b = basis_.at(index);
  return Functional{v_, b.word, b.shift};
}

int ModuleWindow::find(int orbit, const ReducedWord& word) const {
  auto it = lookup_.find({orbit, word});
  return it == lookup_.end() ? -1 : it->second;
}

int ModuleWindow::orbit_of_shift(const ShiftVector& xi) const {
  auto it = orbit_lookup_.find(canonical_shift(gv_, xi));
  return it == orbit_lookup_.end() ? -1 : it->second;
}

int ModuleWindow::center_index() const {
  return find(orbit_of_shift(ShiftVector(lambda().size())), ReducedWord{});
}

const std::vector<Scalar>& ModuleWindow::evaluation_row(int index) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto it = cache_->rows.find(index);
  if (it != cache_->rows.end()) return it->second;
  Functional beta = functional(index);
  std::vector<Scalar> row;
  row.reserve(family_.size());
  for (const InvariantMonomial& f : family_) row.push_back(eval_functional(beta, f.value));
  return cache_->rows.emplace(index, std::move(row)).first->second;
}

const std::vector<Polynomial>& ModuleWindow::generator_images(const GeneratorRef& g) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  std::string key = g.name();
  auto it = cache_->images.find(key);
  if (it != cache_->images.end()) return it->second;
  std::vector<Polynomial> images;
  images.reserve(family_.size());
  if (g.kind == GeneratorRef::Kind::Gamma) {
    Polynomial e = elementary_symmetric(lambda(), g.index.row, g.index.col);
    for (const InvariantMonomial& f : family_) images.push_back(e * f.value);
  } else {
    SkewOperator op = generator_operator(lambda(), g);
    for (const InvariantMonomial& f : family_) images.push_back(apply_to_polynomial(op, f.value));
  }
  return cache_->images.emplace(key, std::move(images)).first->second;
}

ModuleWindow build_basis_B(const EvalPoint& v, int radius, int start_degree, int max_degree) {
  const Composition& lambda = v.lambda();
  SetupReport setup = singularity_setup_check(v, radius);
  if (!setup.passed()) {
    std::string msg = "evaluation point fails the singular setup:";
    if (!setup.contiguous_orbits) msg += " stabilizer orbits are not contiguous;";
    if (!setup.maximal_stabilizer) msg += " shift " + setup.witness->render(lambda) + " enlarges the stabilizer;";
    throw InvalidSingularSetup(msg);
  }

  ModuleWindow w;
  w.v_ = v;
  w.radius_ = radius;
  w.gv_ = point_stabilizer(v);
  w.orbits_ = canonical_representatives(v, radius);
  w.point_count_ = window_points(lambda, radius).size();
  for (std::size_t j = 0; j < w.orbits_.size(); ++j) {
    const OrbitData& o = w.orbits_[j];
    w.orbit_lookup_.emplace(o.canonical, static_cast<int>(j));
    for (const ReducedWord& word : o.reps) {
      BasisEntry b;
      b.orbit = static_cast<int>(j);
      b.word = word;
      b.shift = o.canonical;
      RowPermutation p = word_product(lambda, word);
      b.point = ShiftVector(lambda.size());
      for (int a = 0; a < lambda.size(); ++a) b.point[p(a)] = o.canonical[a];
      w.lookup_.emplace(std::make_pair(b.orbit, word), static_cast<int>(w.basis_.size()));
      w.basis_.push_back(std::move(b));
    }
  }
  if (w.basis_.size() != w.point_count_)
    throw InvalidSingularSetup("basis size does not match the number of window points");

  // numeric rank certificate: a nonzero minor after specialising the
  // parameters is nonzero over Q(z)
  int degree = start_degree > 0 ? start_degree : lambda.max_part();
  Matrix<Rational> spec(w.basis_.size());
  std::vector<Functional> funcs;
  for (std::size_t b = 0; b < w.basis_.size(); ++b) funcs.push_back(w.functional(static_cast<int>(b)));
  std::vector<InvariantMonomial> family;
  std::vector<int> history;
  while (true) {
    family = invariant_family(lambda, degree);
    std::size_t done = spec.empty() ? 0 : spec[0].size();
    for (std::size_t b = 0; b < funcs.size(); ++b)
      for (std::size_t f = done; f < family.size(); ++f)
        spec[b].push_back(eval_functional_specialized(funcs[b], family[f].value));
    int r = rank(spec);
    history.push_back(r);
    if (r == static_cast<int>(w.basis_.size())) {
      w.rank_ = r;
      break;
    }
    std::size_t n = history.size();
    bool stalled = n >= 3 && history[n - 1] == history[n - 2] && history[n - 2] == history[n - 3];
    if (stalled || degree >= max_degree)
      throw WindowRankError("evaluation matrix has rank " + std::to_string(r) + " < " +
                            std::to_string(w.basis_.size()) + " at test degree " + std::to_string(degree));
    ++degree;
  }
  w.degree_ = degree;
  w.family_ = std::move(family);
  return w;
}

namespace {

struct Support {
  std::vector<int> indices;
  bool leaks = false;
};

Support candidate_support(const ModuleWindow& window, const GeneratorRef& gen, int beta) {
  const Composition& lambda = window.lambda();
  const BasisEntry& b = window.basis().at(beta);
  std::set<int> orbits;
  Support s;
  if (gen.kind == GeneratorRef::Kind::Gamma) {
    orbits.insert(b.orbit);
  } else {
    long sign = gen.kind == GeneratorRef::Kind::E ? 1 : -1;
    for (const Index& a : lambda.row_indices(gen.row)) {
      int o = window.orbit_of_shift(b.shift + ShiftVector::unit(lambda, a, sign));
      if (o < 0) s.leaks = true;
      else orbits.insert(o);
    }
  }
  for (std::size_t k = 0; k < window.size(); ++k)
    if (orbits.count(window.basis()[k].orbit)) s.indices.push_back(static_cast<int>(k));
  return s;
}

std::vector<Scalar> lhs_values(const ModuleWindow& window, const GeneratorRef& gen, int beta) {
  const std::vector<Polynomial>& images = window.generator_images(gen);
  Functional f = window.functional(beta);
  std::vector<Scalar> out;
  out.reserve(images.size());
  for (const Polynomial& g : images) out.push_back(eval_functional(f, g));
  return out;
}

bool residual_zero(const ModuleWindow& window, const std::vector<Scalar>& lhs, const CoefficientVector& c) {
  std::vector<const std::vector<Scalar>*> rows;
  for (const auto& [idx, coef] : c) rows.push_back(&window.evaluation_row(idx));
  for (std::size_t f = 0; f < lhs.size(); ++f) {
    Scalar sum(0);
    std::size_t k = 0;
    for (const auto& [idx, coef] : c) sum += coef * (*rows[k++])[f];
    if (!(sum - lhs[f]).is_zero()) return false;
  }
  return true;
}

std::optional<CoefficientVector> solve_on_support(const ModuleWindow& window, const std::vector<int>& support,
                                                  const std::vector<Scalar>& lhs) {
  if (support.empty()) {
    for (const Scalar& s : lhs)
      if (!s.is_zero()) return std::nullopt;
    return CoefficientVector{};
  }
  std::size_t nf = window.family().size();
  std::map<VarId, Rational> params;
  for (const PointValue& p : window.center().values()) params[VarId::param(p.tag)] = specialization_value(p.tag);
  Matrix<Rational> spec;
  for (int idx : support) {
    const std::vector<Scalar>& row = window.evaluation_row(idx);
    std::vector<Rational> r;
    r.reserve(nf);
    for (const Scalar& s : row) r.push_back(evaluate(s, params));
    spec.push_back(std::move(r));
  }
  Echelon<Rational> e = row_reduce(spec, static_cast<int>(nf));
  if (e.rank() < static_cast<int>(support.size()))
    throw WindowRankError("candidate support is dependent on the test family");

  int n = static_cast<int>(support.size());
  Matrix<Scalar> a(n, std::vector<Scalar>(n, Scalar(0)));
  std::vector<Scalar> rhs(n);
  for (int r = 0; r < n; ++r) {
    int col = e.pivots[r];
    for (int c = 0; c < n; ++c) a[r][c] = window.evaluation_row(support[c])[col];
    rhs[r] = lhs[col];
  }
  std::optional<std::vector<Scalar>> x = solve(a, rhs, n);
  if (!x) return std::nullopt;
  CoefficientVector out;
  for (int c = 0; c < n; ++c)
    if (!(*x)[c].is_zero()) out.emplace(support[c], (*x)[c]);
  if (!residual_zero(window, lhs, out)) return std::nullopt;
  return out;
}

Scalar evaluate_at(const RationalFunction& q, const std::map<VarId, Polynomial>& at_v) {
  Polynomial den = q.den().substitute(at_v);
  if (den.is_zero())
    throw HypothesisViolation("coefficient " + q.render() + " has a pole at the evaluation point");
  return RationalFunction::normalize(q.num().substitute(at_v), den);
}

}  // namespace

bool verify_expansion(const ModuleWindow& window, const GeneratorRef& gen, int beta, const CoefficientVector& c) {
  return residual_zero(window, lhs_values(window, gen, beta), c);
}

CoefficientVector act(const ModuleWindow& window, const GeneratorRef& gen, int beta) {
  if (beta < 0 || beta >= static_cast<int>(window.size())) throw InvalidIndex("basis index out of range");
  if (gen.kind != GeneratorRef::Kind::Gamma && !window.is_interior(beta))
    throw WindowLeakage("basis element " + std::to_string(beta) + " lies on the window boundary");
  Support s = candidate_support(window, gen, beta);
  if (s.leaks) throw WindowLeakage("image of basis element " + std::to_string(beta) + " leaves the window");
  std::vector<Scalar> lhs = lhs_values(window, gen, beta);
  if (auto c = solve_on_support(window, s.indices, lhs)) return *c;
  std::vector<int> all(window.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = static_cast<int>(k);
  if (auto c = solve_on_support(window, all, lhs)) return *c;
  throw WindowLeakage(gen.name() + " applied to basis element " + std::to_string(beta) +
                      " is not in the span of the window");
}

CoefficientVector act_structural(const ModuleWindow& window, const GeneratorRef& gen, int beta) {
  if (gen.kind == GeneratorRef::Kind::Gamma) return act(window, gen, beta);
  if (beta < 0 || beta >= static_cast<int>(window.size())) throw InvalidIndex("basis index out of range");
  if (!window.is_interior(beta))
    throw WindowLeakage("basis element " + std::to_string(beta) + " lies on the window boundary");

  const Composition& lambda = window.lambda();
  const BasisEntry& b = window.basis()[beta];
  const OrbitData& orbit = window.orbits()[b.orbit];
  int i = gen.row;
  long sign = gen.kind == GeneratorRef::Kind::E ? 1 : -1;
  std::vector<int> mu = orbit.stabilizer.segment_composition(i);
  std::map<VarId, Polynomial> at_v = window.center().substitution();
  AffineSymmetry xi = AffineSymmetry::translation(lambda, b.shift);
  NilHecke dw = NilHecke::ddiff(lambda, b.word);
  std::vector<RowPermutation> gv_elements = window.stabilizer().elements();

  CoefficientVector out;
  auto add = [&](int idx, const Scalar& c) {
    auto [it, fresh] = out.emplace(idx, c);
    if (!fresh) it->second += c;
  };

  for (const BlockData& block : composition_block_data(lambda, i, mu)) {
    RationalFunction g = xi.apply(lambda, sign > 0 ? block.f_plus : block.f_minus);
    NilHecke product = dw * NilHecke::ddiff(lambda, block.ddiff_word) * NilHecke::scalar(lambda, g);
    ShiftVector target = b.shift + ShiftVector::unit(lambda, Index{i, block.min}, sign);
    int j2 = window.orbit_of_shift(target);
    if (j2 < 0) throw WindowLeakage("shift " + target.render(lambda) + " leaves the window");
    const ShiftVector& canon = window.orbits()[j2].canonical;

    // rho in G_v moving the shift to its canonical representative
    const RowPermutation* rho = nullptr;
    AffineSymmetry t = AffineSymmetry::translation(lambda, target);
    for (const RowPermutation& r : gv_elements) {
      AffineSymmetry rs = AffineSymmetry::permutation(lambda, r);
      if ((rs * t * rs.inverse()).shift == canon) {
        rho = &r;
        break;
      }
    }
    if (!rho) throw InvalidSingularSetup("no stabilizer element reaches the canonical shift");
    NilHecke left = NilHecke::group_element(lambda, *rho);
    NilHecke right = NilHecke::group_element(lambda, rho->inverse());

    for (const auto& [z, p] : product.terms()) {
      Scalar pv = evaluate_at(p, at_v);
      if (pv.is_zero()) continue;
      NilHecke conj = left * NilHecke::ddiff(lambda, reduced_word(lambda, z)) * right;
      for (const auto& [y, q] : conj.terms()) {
        Scalar qv = evaluate_at(q, at_v);
        if (qv.is_zero()) continue;
        if (!window.stabilizer().contains(y))
          throw InvalidSingularSetup("conjugated divided difference leaves the stabilizer");
        int idx = window.find(j2, reduced_word(lambda, y));
        if (idx < 0) continue;  // vanishes on invariants
        add(idx, pv * qv);
      }
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace gzkit
