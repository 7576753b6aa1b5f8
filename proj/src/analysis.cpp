#include <algorithm>
#include <numeric>
#include <sstream>

#include "gzkit/errors.hpp"
#include "gzkit/gzmod.hpp"
#include "gzkit/linalg.hpp"

namespace gzkit {

int BlockTable::block_of(int basis_index) const {
  for (std::size_t b = 0; b < members.size(); ++b)
    if (std::find(members[b].begin(), members[b].end(), basis_index) != members[b].end())
      return static_cast<int>(b);
  throw InvalidIndex("basis index " + std::to_string(basis_index) + " is in no block");
}

BlockTable block_decompose(const ModuleWindow& window) {
  BlockTable t;
  for (std::size_t k = 0; k < window.size(); ++k) {
    const GZCharacter& chi = window.orbits()[window.basis()[k].orbit].character;
    auto it = std::find(t.characters.begin(), t.characters.end(), chi);
    if (it == t.characters.end()) {
      t.characters.push_back(chi);
      t.members.push_back({static_cast<int>(k)});
    } else {
      t.members[it - t.characters.begin()].push_back(static_cast<int>(k));
    }
  }
  return t;
}

CoefficientVector project(const BlockTable& blocks, int block, const CoefficientVector& c) {
  const std::vector<int>& m = blocks.members.at(block);
  CoefficientVector out;
  for (const auto& [idx, coef] : c)
    if (std::find(m.begin(), m.end(), idx) != m.end()) out.emplace(idx, coef);
  return out;
}

namespace {

GeneratorRef gamma_ref(Index a) { return GeneratorRef{GeneratorRef::Kind::Gamma, 0, a}; }

// (gamma_a - chi(gamma_a)) restricted to a block, columns = images of members
Matrix<Scalar> shifted_gamma_matrix(const ModuleWindow& window, const BlockTable& blocks, int block, Index a) {
  const std::vector<int>& m = blocks.members[block];
  int d = static_cast<int>(m.size());
  Scalar chi = blocks.characters[block].evaluate(a);
  Matrix<Scalar> mat(d, std::vector<Scalar>(d, Scalar(0)));
  for (int c = 0; c < d; ++c) {
    CoefficientVector img = act(window, gamma_ref(a), m[c]);
    for (const auto& [idx, coef] : img) {
      auto pos = std::find(m.begin(), m.end(), idx);
      if (pos == m.end()) throw WindowLeakage("gamma moves a functional out of its block");
      mat[pos - m.begin()][c] = coef;
    }
    mat[c][c] -= chi;
  }
  return mat;
}

Matrix<Scalar> multiply(const Matrix<Scalar>& x, const Matrix<Scalar>& y) {
  std::size_t n = x.size();
  Matrix<Scalar> r(n, std::vector<Scalar>(n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!y[k][j].is_zero()) r[i][j] += x[i][k] * y[k][j];
    }
  return r;
}

}  // namespace

SocleResult socle_check(const ModuleWindow& window, const BlockTable& blocks, int block) {
  const std::vector<int>& m = blocks.members.at(block);
  int d = static_cast<int>(m.size());
  SocleResult r;
  Matrix<Scalar> stacked;
  for (const Index& a : window.lambda().indices()) {
    Matrix<Scalar> n = shifted_gamma_matrix(window, blocks, block, a);
    for (const auto& row : n) stacked.push_back(row);
    Matrix<Scalar> power = n;
    for (int k = 1; k < d; ++k) power = multiply(power, n);
    for (const auto& row : power)
      for (const Scalar& s : row)
        if (!s.is_zero()) r.nilpotent = false;
  }
  r.dimension = d - row_reduce(stacked, d).rank();
  return r;
}

ComponentGraph component_graph(const EvalPoint& v, int radius, EdgeRule rule) {
  if (!v.is_regular()) throw RegularityError("component graph needs a regular evaluation point");
  const Composition& lambda = v.lambda();
  ComponentGraph g;
  g.lambda = lambda;
  g.rule = rule;
  g.vertices = window_points(lambda, radius);
  std::map<ShiftVector, int> where;
  for (std::size_t k = 0; k < g.vertices.size(); ++k) where.emplace(g.vertices[k], static_cast<int>(k));

  std::vector<int> parent(g.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (std::size_t k = 0; k < g.vertices.size(); ++k) {
    EvalPoint w = v.shifted(g.vertices[k]);
    for (int a = 0; a < lambda.lattice_rank(); ++a) {
      Index ix = lambda.index(a);
      ShiftVector next = g.vertices[k] + ShiftVector::unit(lambda, ix);
      auto it = where.find(next);
      if (it == where.end()) continue;
      EvalPoint w2 = v.shifted(next);
      GraphEdge e;
      e.source = static_cast<int>(k);
      e.target = it->second;
      e.direction = ix;
      e.e_numerator = Scalar(1);
      for (const Index& b : lambda.row_indices(ix.row + 1))
        e.e_numerator *= w.value(ix).scalar() - w.value(b).scalar();
      e.f_numerator = Scalar(1);
      for (const Index& b : lambda.row_indices(ix.row - 1))
        e.f_numerator *= w2.value(ix).scalar() - w2.value(b).scalar();
      bool en = !e.e_numerator.is_zero();
      bool fn = !e.f_numerator.is_zero();
      e.kept = rule == EdgeRule::Both ? (en && fn) : (en || fn);
      if (e.kept) parent[root(e.source)] = root(e.target);
      g.edges.push_back(std::move(e));
    }
  }
  std::map<int, int> label;
  for (std::size_t k = 0; k < g.vertices.size(); ++k) {
    int r = root(static_cast<int>(k));
    auto [it, fresh] = label.emplace(r, static_cast<int>(label.size()));
    g.component.push_back(it->second);
  }
  g.component_count = static_cast<int>(label.size());
  return g;
}

std::string ComponentGraph::to_dot() const {
  std::ostringstream out;
  out << "graph components {\n";
  for (std::size_t k = 0; k < vertices.size(); ++k)
    out << "  n" << k << " [label=\"" << vertices[k].render(lambda) << "\", component=" << component[k] << "];\n";
  for (const GraphEdge& e : edges) {
    out << "  n" << e.source << " -- n" << e.target;
    if (!e.kept) out << " [style=dashed]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

bool hypothesis_holds(const EvalPoint& v) {
  const Composition& lambda = v.lambda();
  for (int i = 1; i < lambda.rows(); ++i)
    for (const Index& a : lambda.row_indices(i))
      for (const Index& b : lambda.row_indices(i + 1))
        if (v.integral_difference(lambda.flat(a), lambda.flat(b))) return false;
  return true;
}

class ActionCache {
public:
  explicit ActionCache(const ModuleWindow& w) : window_(w) {}

  const CoefficientVector& get(const GeneratorRef& g, int beta) {
    auto key = std::make_pair(g.name(), beta);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    return memo_.emplace(key, act(window_, g, beta)).first->second;
  }

  CoefficientVector apply(const GeneratorRef& g, const CoefficientVector& x) {
    CoefficientVector out;
    for (const auto& [idx, coef] : x)
      for (const auto& [j, c] : get(g, idx)) {
        auto [it, fresh] = out.emplace(j, coef * c);
        if (!fresh) it->second += coef * c;
      }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
  }

private:
  const ModuleWindow& window_;
  std::map<std::pair<std::string, int>, CoefficientVector> memo_;
};

GeneratorRef row_generator(bool raise, int row) {
  return GeneratorRef{raise ? GeneratorRef::Kind::E : GeneratorRef::Kind::F, row, {}};
}

// Walk from a block vector towards ev_v. Each step applies E_i or F_i and
// keeps the component in the block of the adjacent shift one step closer to
// the origin; inside a block, gamma_a - chi(gamma_a) is tried when no move
// survives the projection.
std::optional<std::string> walk_to_center(const ModuleWindow& window, const BlockTable& blocks, ActionCache& cache,
                                          CoefficientVector x) {
  const Composition& lambda = window.lambda();
  std::string word;
  int guard = 0;
  while (true) {
    int orbit = window.basis()[x.begin()->first].orbit;
    const ShiftVector& c = window.orbits()[orbit].canonical;
    if (c.is_zero()) {
      int center = window.center_index();
      if (x.count(center) && !x[center].is_zero()) return word;
      return std::nullopt;
    }
    if (++guard > 64) return std::nullopt;
    bool moved = false;
    for (int a = 0; a < lambda.lattice_rank() && !moved; ++a) {
      if (c[a] == 0) continue;
      Index ix = lambda.index(a);
      bool raise = c[a] < 0;
      ShiftVector target = c + ShiftVector::unit(lambda, ix, raise ? 1 : -1);
      int o = window.orbit_of_shift(target);
      int block = blocks.block_of(window.find(o, ReducedWord{}));
      GeneratorRef g = row_generator(raise, ix.row);
      CoefficientVector y = project(blocks, block, cache.apply(g, x));
      if (y.empty()) continue;
      word += (word.empty() ? "" : " ") + g.name();
      x = std::move(y);
      moved = true;
    }
    if (moved) continue;
    int block = blocks.block_of(x.begin()->first);
    for (const Index& a : lambda.indices()) {
      CoefficientVector y = cache.apply(gamma_ref(a), x);
      Scalar chi = blocks.characters[block].evaluate(a);
      for (const auto& [idx, coef] : x) {
        auto [it, fresh] = y.emplace(idx, -chi * coef);
        if (!fresh) it->second -= chi * coef;
      }
      for (auto it = y.begin(); it != y.end();) it = it->second.is_zero() ? y.erase(it) : std::next(it);
      if (y.empty()) continue;
      word += (word.empty() ? "" : " ") + std::string("(") + gamma_ref(a).name() + "-chi)";
      x = std::move(y);
      moved = true;
      break;
    }
    if (!moved) return std::nullopt;
  }
}

}  // namespace

ProbeReport simplicity_probe(const ModuleWindow& window) {
  const Composition& lambda = window.lambda();
  ProbeReport report;
  report.hypothesis = hypothesis_holds(window.center());
  report.setup = singularity_setup_check(window.center(), window.radius()).passed();
  BlockTable blocks = block_decompose(window);
  ActionCache cache(window);

  report.step1 = true;
  for (std::size_t j = 0; j < window.orbits().size(); ++j) {
    const OrbitData& o = window.orbits()[j];
    if (!o.interior) continue;
    int beta = window.find(static_cast<int>(j), ReducedWord{});
    for (int i = 1; i < lambda.rows(); ++i)
      for (bool raise : {true, false}) {
        GeneratorRef g = row_generator(raise, i);
        const CoefficientVector& img = cache.get(g, beta);
        for (const Index& a : lambda.row_indices(i)) {
          ShiftVector target = o.canonical + ShiftVector::unit(lambda, a, raise ? 1 : -1);
          int block = blocks.block_of(window.find(window.orbit_of_shift(target), ReducedWord{}));
          if (!project(blocks, block, img).empty()) continue;
          report.step1 = false;
          report.failures.push_back(g.name() + " from " + o.canonical.render(lambda) + " misses " +
                                    target.render(lambda));
        }
      }
  }

  report.cyclicity = true;
  for (std::size_t k = 0; k < window.size(); ++k) {
    if (!window.is_interior(static_cast<int>(k))) continue;
    ++report.interior_points;
    CoefficientVector x{{static_cast<int>(k), Scalar(1)}};
    std::optional<std::string> word;
    try {
      word = walk_to_center(window, blocks, cache, x);
    } catch (const WindowLeakage&) {
      word.reset();
    }
    if (word) {
      report.cyclic_words.emplace_back(static_cast<int>(k), word->empty() ? "e" : *word);
    } else {
      report.cyclicity = false;
      report.failures.push_back("no path to ev_v from basis element " + std::to_string(k));
    }
  }
  return report;
}

ProbeReport simplicity_probe(const EvalPoint& v, int radius, int start_degree) {
  return simplicity_probe(build_basis_B(v, radius, start_degree));
}

LemmaReport lemma_checks(const ModuleWindow& window) {
  const Composition& lambda = window.lambda();
  LemmaReport report;
  std::vector<Polynomial> fs;
  for (const InvariantMonomial& f : window.family()) fs.push_back(f.value);
  std::vector<RowPermutation> elements = window.stabilizer().elements();

  for (std::size_t j = 0; j < window.orbits().size(); ++j) {
    const OrbitData& o = window.orbits()[j];
    for (const RowPermutation& w : elements) {
      ReducedWord word = reduced_word(lambda, w);
      if (window.find(static_cast<int>(j), word) >= 0) continue;
      Functional beta{window.center(), word, o.canonical};
      ++report.vanishing_checked;
      for (const Polynomial& f : fs)
        if (!eval_functional(beta, f).is_zero()) {
          report.vanishing = false;
          break;
        }
    }
  }

  for (std::size_t k = 0; k < window.size(); ++k) {
    const std::vector<Scalar>& row = window.evaluation_row(static_cast<int>(k));
    Functional beta = window.functional(static_cast<int>(k));
    for (const RowPermutation& rho : elements) {
      if (rho.is_identity()) continue;
      ++report.conjugation_checked;
      if (eval_conjugated(beta, rho, fs) != row) report.conjugation = false;
    }
  }
  return report;
}

}  // namespace gzkit
