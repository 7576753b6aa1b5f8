#ifndef GZKIT_GZMOD_HPP
#define GZKIT_GZMOD_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gzkit/combinat.hpp"
#include "gzkit/divdiff.hpp"
#include "gzkit/exactalg.hpp"
#include "gzkit/skewops.hpp"

namespace gzkit {

// v(x_a) = z[tag] + offset
struct PointValue {
  int tag = 1;
  Rational offset = 0;

  Scalar scalar() const;
  bool operator==(const PointValue& o) const { return tag == o.tag && offset == o.offset; }
  bool operator<(const PointValue& o) const { return tag != o.tag ? tag < o.tag : offset < o.offset; }
  std::string render() const;  // "z[1]+1/2"
};

// Rational values substituted for the parameters when a numeric
// certificate is enough (rank lower bounds, pivot selection).
Rational specialization_value(int tag);

class EvalPoint {
public:
  EvalPoint() = default;
  EvalPoint(Composition lambda, std::vector<PointValue> values);
  // every coordinate gets its own tag, offsets zero
  static EvalPoint generic(const Composition& lambda);

  const Composition& lambda() const { return lambda_; }
  const PointValue& value(int flat) const { return values_.at(flat); }
  const PointValue& value(Index a) const { return values_.at(lambda_.flat(a)); }
  const std::vector<PointValue>& values() const { return values_; }

  // v(x_a) - v(x_b) in Z
  bool integral_difference(int a, int b) const;
  bool is_regular() const;
  EvalPoint shifted(const ShiftVector& s) const;  // values v(x_a) + s_a

  std::map<VarId, Polynomial> substitution() const;             // x_a -> z + q
  std::map<VarId, Rational> specialized_substitution() const;   // x_a -> z* + q

  bool operator==(const EvalPoint& o) const { return values_ == o.values_; }
  std::string render() const;

private:
  Composition lambda_;
  std::vector<PointValue> values_;
};

// ev_{gamma . v} = ev_v o gamma^{-1}, so gamma . v = v - gamma.
EvalPoint point_action(const ShiftVector& gamma, const EvalPoint& v);

// Per-row sorted value multisets.
struct GZCharacter {
  std::vector<std::vector<PointValue>> rows;

  Scalar evaluate(Index a) const;  // chi(gamma_a) = e_{j_a} of row i_a
  bool operator==(const GZCharacter& o) const { return rows == o.rows; }
  bool operator<(const GZCharacter& o) const { return rows < o.rows; }
  std::string render() const;
};

GZCharacter character_of(const EvalPoint& v);

// f -> ev_v(d_w(xi(f)))
struct Functional {
  EvalPoint base;
  ReducedWord word;
  ShiftVector shift;

  EvalPoint shifted_point() const { return base.shifted(shift); }
};

Scalar eval_functional(const Functional& beta, const Polynomial& f);
Rational eval_functional_specialized(const Functional& beta, const Polynomial& f);
// ev_v o (rho d_w rho^{-1}) o (rho xi rho^{-1}) applied to f
Scalar eval_conjugated(const Functional& beta, const RowPermutation& rho, const Polynomial& f);
std::vector<Scalar> eval_conjugated(const Functional& beta, const RowPermutation& rho,
                                    const std::vector<Polynomial>& fs);

// Stabilizer of v in the subgroup fixing the top row: equal-value classes per row.
YoungSubgroup point_stabilizer(const EvalPoint& v);

// Box of shifts with max |xi_a| <= radius over rows 1..k-1, lexicographic.
std::vector<ShiftVector> window_points(const Composition& lambda, int radius);

struct SetupReport {
  bool maximal_stabilizer = true;   // bullet 1, checked over the window
  bool contiguous_orbits = true;    // bullet 2
  std::optional<ShiftVector> witness;  // shift whose stabilizer escapes G_v
  bool witness_in_window = false;
  std::string stabilizer;              // rendering of G_v
  std::vector<std::vector<std::vector<int>>> segments;  // G_v orbits per row
  bool passed() const { return maximal_stabilizer && contiguous_orbits; }
};

SetupReport singularity_setup_check(const EvalPoint& v, int radius);

struct OrbitData {
  std::vector<ShiftVector> members;  // window shifts in this G_v-orbit
  ShiftVector canonical;             // u_j - v, decreasing along G_v segments
  YoungSubgroup stabilizer;          // G_{u_j}
  std::vector<ReducedWord> reps;     // X_j
  GZCharacter character;
  bool interior = false;
};

// Canonical shift of the G_v-orbit of xi.
ShiftVector canonical_shift(const YoungSubgroup& gv, const ShiftVector& xi);

std::vector<OrbitData> canonical_representatives(const EvalPoint& v, int radius);

struct BasisEntry {
  int orbit = 0;
  ReducedWord word;
  ShiftVector shift;  // the canonical shift xi_j
  ShiftVector point;  // w(xi_j), the window point matched by the bijection
};

struct GeneratorRef {
  enum class Kind { E, F, Gamma };
  Kind kind = Kind::E;
  int row = 0;   // i for E_i / F_i
  Index index;   // a for gamma_a
  std::string name() const;  // "E1", "F1", "gamma[1,2]"
};

std::vector<GeneratorRef> module_generators(const Composition& lambda);
GeneratorRef parse_generator(const Composition& lambda, const std::string& name);  // NameError
SkewOperator generator_operator(const Composition& lambda, const GeneratorRef& g);

using CoefficientVector = std::map<int, Scalar>;  // basis index -> coefficient

class ModuleWindow {
public:
  const EvalPoint& center() const { return v_; }
  const Composition& lambda() const { return v_.lambda(); }
  int radius() const { return radius_; }
  const YoungSubgroup& stabilizer() const { return gv_; }
  const std::vector<OrbitData>& orbits() const { return orbits_; }
  const std::vector<BasisEntry>& basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  Functional functional(int index) const;
  bool is_interior(int index) const { return orbits_[basis_[index].orbit].interior; }
  // basis index of (orbit, word); -1 if the word is not in X_j
  int find(int orbit, const ReducedWord& word) const;
  int orbit_of_shift(const ShiftVector& xi) const;  // -1 outside the window
  int center_index() const;                          // ev_v

  int degree() const { return degree_; }
  const std::vector<InvariantMonomial>& family() const { return family_; }
  int certified_rank() const { return rank_; }
  std::size_t window_point_count() const { return point_count_; }

  // exact values of basis functionals on the test family (cached)
  const std::vector<Scalar>& evaluation_row(int index) const;
  // image of the test family under a generator (cached)
  const std::vector<Polynomial>& generator_images(const GeneratorRef& g) const;

private:
  friend ModuleWindow build_basis_B(const EvalPoint& v, int radius, int start_degree, int max_degree);

  EvalPoint v_;
  int radius_ = 0;
  YoungSubgroup gv_;
  std::vector<OrbitData> orbits_;
  std::vector<BasisEntry> basis_;
  std::map<std::pair<int, ReducedWord>, int> lookup_;
  std::map<ShiftVector, int> orbit_lookup_;
  std::size_t point_count_ = 0;
  int degree_ = 0;
  int rank_ = 0;
  std::vector<InvariantMonomial> family_;

  struct Cache {
    std::mutex mutex;
    std::map<int, std::vector<Scalar>> rows;
    std::map<std::string, std::vector<Polynomial>> images;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

inline constexpr int kDefaultMaxTestDegree = 48;

// start_degree <= 0 means max_i lambda_i.
ModuleWindow build_basis_B(const EvalPoint& v, int radius, int start_degree = 0,
                           int max_degree = kDefaultMaxTestDegree);

CoefficientVector act(const ModuleWindow& window, const GeneratorRef& gen, int beta);
CoefficientVector act_structural(const ModuleWindow& window, const GeneratorRef& gen, int beta);

// residual of a claimed expansion on the whole test family
bool verify_expansion(const ModuleWindow& window, const GeneratorRef& gen, int beta, const CoefficientVector& c);

struct BlockTable {
  std::vector<GZCharacter> characters;
  std::vector<std::vector<int>> members;  // basis indices per character
  int block_of(int basis_index) const;
};

BlockTable block_decompose(const ModuleWindow& window);
CoefficientVector project(const BlockTable& blocks, int block, const CoefficientVector& c);

struct SocleResult {
  int dimension = 0;
  bool nilpotent = true;  // gamma_a - chi(gamma_a) nilpotent on the block
};
SocleResult socle_check(const ModuleWindow& window, const BlockTable& blocks, int block);

enum class EdgeRule { Both, Either };

struct GraphEdge {
  int source = 0;
  int target = 0;
  Index direction;
  Scalar e_numerator;
  Scalar f_numerator;
  bool kept = false;
};

struct ComponentGraph {
  Composition lambda;
  std::vector<ShiftVector> vertices;
  std::vector<GraphEdge> edges;
  std::vector<int> component;  // per vertex, numbered by first appearance
  int component_count = 0;
  EdgeRule rule = EdgeRule::Both;
  std::string to_dot() const;
};

ComponentGraph component_graph(const EvalPoint& v, int radius, EdgeRule rule = EdgeRule::Both);

struct ProbeReport {
  bool hypothesis = false;
  bool setup = false;
  bool step1 = false;
  bool cyclicity = false;
  int interior_points = 0;
  std::vector<std::string> failures;
  std::vector<std::pair<int, std::string>> cyclic_words;  // basis index -> generator word
};

ProbeReport simplicity_probe(const EvalPoint& v, int radius, int start_degree = 0);
ProbeReport simplicity_probe(const ModuleWindow& window);

// Lemma checks on the window: words outside X_j give zero functionals; the
// conjugated data agree with the original on the test family.
struct LemmaReport {
  bool vanishing = true;
  bool conjugation = true;
  int vanishing_checked = 0;
  int conjugation_checked = 0;
};
LemmaReport lemma_checks(const ModuleWindow& window);

}  // namespace gzkit

#endif
