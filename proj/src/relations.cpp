#include <map>
#include <random>

#include "gzkit/divdiff.hpp"
#include "gzkit/errors.hpp"
#include "gzkit/linalg.hpp"
#include "gzkit/relations.hpp"
#include "gzkit/skewops.hpp"

namespace gzkit {

bool all_passed(const std::vector<RelationCheck>& checks) {
  for (const RelationCheck& c : checks)
    if (!c.passed) return false;
  return true;
}

namespace {

std::string letter(int p) { return "s" + std::to_string(p); }

int independence_rank(const Composition& lambda, int n) {
  // staircase monomials x^a with a_c <= n - c
  std::vector<Polynomial> monomials{Polynomial(1)};
  for (int c = 1; c < n; ++c) {
    std::vector<Polynomial> next;
    for (const Polynomial& m : monomials)
      for (int e = 0; e <= n - c; ++e) next.push_back(m * Polynomial::var(VarId::x(1, c)).pow(e));
    monomials = std::move(next);
  }
  std::map<std::pair<std::size_t, std::string>, int> column;
  std::vector<std::map<int, Rational>> sparse;
  for (const RowPermutation& w : YoungSubgroup::full(lambda).elements()) {
    ReducedWord word = reduced_word(lambda, w);
    std::map<int, Rational> row;
    for (std::size_t k = 0; k < monomials.size(); ++k) {
      Polynomial image = apply_partial_word(lambda, word, monomials[k]);
      for (const Term& t : image.terms()) {
        auto it = column.emplace(std::make_pair(k, t.mono.render()), static_cast<int>(column.size())).first;
        row[it->second] += t.coef;
      }
    }
    sparse.push_back(std::move(row));
  }
  Matrix<Rational> m;
  for (const auto& r : sparse) {
    std::vector<Rational> dense(column.size(), Rational(0));
    for (const auto& [c, v] : r) dense[c] = v;
    m.push_back(std::move(dense));
  }
  return rank(m);
}

}  // namespace

std::vector<RelationCheck> nil_coxeter_suite(int max_row) {
  std::vector<RelationCheck> out;
  for (int n = 2; n <= max_row; ++n) {
    Composition lambda({n});
    std::string row = "n=" + std::to_string(n) + " ";
    for (int p = 1; p < n; ++p) {
      SkewOperator dp = partial_simple(lambda, Letter{1, p});
      out.push_back({row + "d_" + letter(p) + "^2 = 0", dp.compose(dp).is_zero(), ""});
      for (int q = p + 1; q < n; ++q) {
        SkewOperator dq = partial_simple(lambda, Letter{1, q});
        if (q == p + 1) {
          bool ok = dp.compose(dq).compose(dp) == dq.compose(dp).compose(dq);
          out.push_back({row + "braid " + letter(p) + letter(q) + letter(p), ok, ""});
        } else {
          bool ok = dp.compose(dq) == dq.compose(dp);
          out.push_back({row + "commute " + letter(p) + letter(q), ok, ""});
        }
      }
    }
    int factorial = 1;
    for (int t = 2; t <= n; ++t) factorial *= t;
    int r = independence_rank(lambda, n);
    out.push_back({row + "rank of {d_w}", r == factorial, std::to_string(r) + " of " + std::to_string(factorial)});
  }
  return out;
}

std::vector<RelationCheck> invariance_suite(const Composition& lambda, int samples, unsigned seed, int max_degree) {
  std::vector<RelationCheck> out;
  std::mt19937 rng(seed);
  std::vector<InvariantMonomial> family = invariant_family(lambda, max_degree);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<std::size_t> pick(0, family.size() - 1);
  YoungSubgroup group = YoungSubgroup::full(lambda);
  GZGenerators g = build_generators(lambda);
  for (int i = 1; i < lambda.rows(); ++i) {
    int good_e = 0, good_f = 0;
    for (int t = 0; t < samples; ++t) {
      Polynomial f;
      for (int k = 0; k < 4; ++k) f += family[pick(rng)].value * Polynomial(coef(rng));
      InvarianceReport re = check_invariance(g.e(i), f, group);
      InvarianceReport rf = check_invariance(g.f(i), f, group);
      good_e += re.is_polynomial && re.is_invariant_image;
      good_f += rf.is_polynomial && rf.is_invariant_image;
    }
    std::string tally = "/" + std::to_string(samples);
    out.push_back({"E" + std::to_string(i) + " preserves invariants", good_e == samples, std::to_string(good_e) + tally});
    out.push_back({"F" + std::to_string(i) + " preserves invariants", good_f == samples, std::to_string(good_f) + tally});
  }
  return out;
}

namespace {

std::string render_mu(const std::vector<int>& mu) {
  std::string s = "(";
  for (std::size_t k = 0; k < mu.size(); ++k) s += (k ? "," : "") + std::to_string(mu[k]);
  return s + ")";
}

RationalFunction apply_ddiff_side(const Composition& lambda, const std::vector<BlockData>& blocks, int i, int sign,
                                  const Polynomial& f) {
  RationalFunction total(0);
  for (const BlockData& b : blocks) {
    AffineSymmetry step = AffineSymmetry::phi(lambda, Index{i, b.min}, sign);
    RationalFunction g = (sign > 0 ? b.f_plus : b.f_minus) * RationalFunction(step.apply(lambda, f));
    for (auto it = b.ddiff_word.letters.rbegin(); it != b.ddiff_word.letters.rend(); ++it)
      g = apply_partial(g, VarId::x(it->row, it->pos), VarId::x(it->row, it->pos + 1));
    total += g;
  }
  return total;
}

}  // namespace

std::vector<RelationCheck> ddiff_compare(const Composition& lambda, int degree) {
  std::vector<RelationCheck> out;
  std::vector<InvariantMonomial> family = invariant_family(lambda, degree);
  for (int i = 1; i < lambda.rows(); ++i) {
    SkewOperator e = generator_E(lambda, i);
    SkewOperator f = generator_F(lambda, i);
    std::vector<Polynomial> e_img, f_img;
    for (const InvariantMonomial& m : family) {
      e_img.push_back(apply_to_polynomial(e, m.value));
      f_img.push_back(apply_to_polynomial(f, m.value));
    }
    for (const std::vector<int>& mu : compositions_of(lambda.part(i))) {
      std::vector<BlockData> blocks = composition_block_data(lambda, i, mu);
      int bad_e = 0, bad_f = 0;
      for (std::size_t k = 0; k < family.size(); ++k) {
        if (!(apply_ddiff_side(lambda, blocks, i, 1, family[k].value) == RationalFunction(e_img[k]))) ++bad_e;
        if (!(apply_ddiff_side(lambda, blocks, i, -1, family[k].value) == RationalFunction(f_img[k]))) ++bad_f;
      }
      DdiffForm form = generators_ddiff_form(lambda, i, mu);
      std::string where = " row " + std::to_string(i) + " mu=" + render_mu(mu);
      std::string size = std::to_string(family.size()) + " test polynomials";
      out.push_back({"E" + where, bad_e == 0,
                     size + (form.E == e ? ", normal forms equal" : ", normal forms differ")});
      out.push_back({"F" + where, bad_f == 0,
                     size + (form.F == f ? ", normal forms equal" : ", normal forms differ")});
    }
  }
  return out;
}

std::vector<RelationCheck> gl_relations(const Composition& lambda) {
  std::vector<RelationCheck> out;
  GZGenerators g = build_generators(lambda);
  YoungSubgroup group = YoungSubgroup::full(lambda);
  int k = lambda.rows();
  for (int i = 1; i < k; ++i)
    for (int j = 1; j < k; ++j) {
      std::string name = "[E" + std::to_string(i) + ",F" + std::to_string(j) + "]";
      SkewOperator c = commutator(g.e(i), g.f(j));
      if (i != j) {
        out.push_back({name + " = 0", c.is_zero(), c.is_zero() ? "" : c.render()});
        continue;
      }
      bool mult = c.is_pure_multiplication();
      RationalFunction h = mult ? c.coefficient(AffineSymmetry::identity(lambda)) : RationalFunction(0);
      bool ok = mult && h.is_polynomial() && is_invariant(lambda, h, group);
      out.push_back({name + " is an invariant multiplication", ok, c.render()});
      if (lambda.parts() == std::vector<int>{1, 1})
        out.push_back({name + " = id", c == SkewOperator::identity(lambda), c.render()});
    }
  for (int i = 1; i < k; ++i)
    for (int j : {i - 1, i + 1}) {
      if (j < 1 || j >= k) continue;
      std::string si = std::to_string(i), sj = std::to_string(j);
      SkewOperator se = commutator(g.e(i), commutator(g.e(i), g.e(j)));
      SkewOperator sf = commutator(g.f(i), commutator(g.f(i), g.f(j)));
      out.push_back({"[E" + si + ",[E" + si + ",E" + sj + "]] = 0", se.is_zero(), ""});
      out.push_back({"[F" + si + ",[F" + si + ",F" + sj + "]] = 0", sf.is_zero(), ""});
    }
  return out;
}

}  // namespace gzkit

