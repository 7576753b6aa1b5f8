#include <algorithm>

#include "gzkit/divdiff.hpp"

namespace gzkit {

namespace {

void check_pair(const Composition& lambda, Index a, Index b) {
  if (!lambda.contains(a) || !lambda.contains(b)) throw InvalidPair("divided difference index outside I");
  if (a.row != b.row) throw InvalidPair("divided difference needs two indices in one row");
  if (a == b) throw InvalidPair("divided difference needs two distinct indices");
}

Index letter_first(Letter s) { return Index{s.row, s.pos}; }
Index letter_second(Letter s) { return Index{s.row, s.pos + 1}; }

RationalFunction difference(const Composition& lambda, Index a, Index b) {
  return RationalFunction(Polynomial::var(lambda.var(a)) - Polynomial::var(lambda.var(b)));
}

}  // namespace

SkewOperator partial(const Composition& lambda, Index a, Index b) {
  check_pair(lambda, a, b);
  RationalFunction inv = difference(lambda, a, b).inverse();
  SkewOperator op(lambda);
  op.add_term(AffineSymmetry::identity(lambda), inv);
  op.add_term(AffineSymmetry::permutation(lambda, RowPermutation::transposition(lambda, a, b)), -inv);
  return op;
}

SkewOperator partial_simple(const Composition& lambda, Letter s) {
  return partial(lambda, letter_first(s), letter_second(s));
}

SkewOperator partial_word(const Composition& lambda, const ReducedWord& w) {
  SkewOperator op = SkewOperator::identity(lambda);
  for (const auto& s : w.letters) op = op.compose(partial_simple(lambda, s));
  return op;
}

Polynomial apply_partial(const Polynomial& f, VarId a, VarId b) {
  Polynomial diff = f - f.swap_vars(a, b);
  if (diff.is_zero()) return diff;
  return diff / (Polynomial::var(a) - Polynomial::var(b));
}

Polynomial apply_partial_word(const Composition& lambda, const ReducedWord& w, const Polynomial& f) {
  Polynomial out = f;
  for (auto it = w.letters.rbegin(); it != w.letters.rend() && !out.is_zero(); ++it) {
    if (it->pos < 1 || it->pos >= lambda.part(it->row)) throw InvalidPair("invalid simple reflection");
    out = apply_partial(out, VarId::x(it->row, it->pos), VarId::x(it->row, it->pos + 1));
  }
  return out;
}

RationalFunction apply_partial(const RationalFunction& f, VarId a, VarId b) {
  if (f.is_polynomial()) return RationalFunction(apply_partial(f.num(), a, b));
  RationalFunction diff = f - f.swap_vars(a, b);
  if (diff.is_zero()) return diff;
  return diff / RationalFunction(Polynomial::var(a) - Polynomial::var(b));
}

SkewOperator conjugate(const AffineSymmetry& u, const SkewOperator& op) {
  const Composition& lambda = op.lambda();
  return SkewOperator::symmetry(lambda, u).compose(op).compose(SkewOperator::symmetry(lambda, u.inverse()));
}

SkewOperator conjugate(const RowPermutation& u, const SkewOperator& op) {
  return conjugate(AffineSymmetry::permutation(op.lambda(), u), op);
}

LeibnizMove leibniz_move(const Composition& lambda, Index a, Index b, const RationalFunction& f,
                         const SkewOperator& tail) {
  check_pair(lambda, a, b);
  LeibnizMove move;
  VarId va = lambda.var(a), vb = lambda.var(b);
  move.derivative_term = SkewOperator::multiplication(lambda, apply_partial(f, va, vb)).compose(tail);
  move.commuted_term = SkewOperator::multiplication(lambda, f.swap_vars(va, vb))
                           .compose(partial(lambda, a, b))
                           .compose(tail);
  return move;
}

std::vector<BlockData> composition_block_data(const Composition& lambda, int i, const std::vector<int>& mu) {
  if (i < 1 || i >= lambda.rows()) throw InvalidIndex("row " + std::to_string(i) + " has no generators");
  int total = 0;
  for (int p : mu) {
    if (p < 1) throw InvalidComposition("parts of mu must be positive");
    total += p;
  }
  if (total != lambda.part(i)) throw InvalidComposition("mu is not a composition of lambda_i");

  std::vector<BlockData> out;
  int start = 1;
  for (int p : mu) {
    BlockData d;
    d.part = p;
    d.min = start;
    for (int c = start; c < start + p; ++c) d.block.push_back(Index{i, c});
    for (int q = start + p - 2; q >= start; --q) d.ddiff_word.letters.push_back(Letter{i, q});
    d.ddiff = partial_word(lambda, d.ddiff_word);
    Polynomial xm = Polynomial::var(VarId::x(i, start));
    Polynomial den(1), up(1), down(1);
    for (const auto& b : lambda.row_indices(i))
      if (b.col < start || b.col >= start + p) den *= xm - Polynomial::var(lambda.var(b));
    for (const auto& a : lambda.row_indices(i + 1)) up *= xm - Polynomial::var(lambda.var(a));
    for (const auto& a : lambda.row_indices(i - 1)) down *= xm - Polynomial::var(lambda.var(a));
    d.f_plus = RationalFunction::from_coprime(up, den);
    d.f_minus = RationalFunction::from_coprime(down, den);
    out.push_back(std::move(d));
    start += p;
  }
  return out;
}

DdiffForm generators_ddiff_form(const Composition& lambda, int i, const std::vector<int>& mu) {
  DdiffForm form{SkewOperator(lambda), SkewOperator(lambda)};
  for (const auto& d : composition_block_data(lambda, i, mu)) {
    Index m{i, d.min};
    form.E = form.E + d.ddiff.compose(SkewOperator::symmetry(lambda, AffineSymmetry::phi(lambda, m, 1), d.f_plus));
    form.F = form.F + d.ddiff.compose(SkewOperator::symmetry(lambda, AffineSymmetry::phi(lambda, m, -1), d.f_minus));
  }
  return form;
}

std::vector<std::vector<int>> compositions_of(int n) {
  std::vector<std::vector<int>> out;
  if (n <= 0) return out;
  // bit k of mask set: cut after position k+1
  for (int mask = (1 << (n - 1)) - 1; mask >= 0; --mask) {
    std::vector<int> parts;
    int run = 1;
    for (int k = 0; k < n - 1; ++k) {
      if (mask & (1 << k)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.push_back(parts);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- NilHecke

NilHecke NilHecke::scalar(const Composition& lambda, const RationalFunction& c) {
  NilHecke h(lambda);
  h.add_term(RowPermutation::identity(lambda), c);
  return h;
}

NilHecke NilHecke::ddiff(const Composition& lambda, const ReducedWord& w) {
  NilHecke h(lambda);
  if (!is_reduced(lambda, w)) return h;
  h.add_term(word_product(lambda, w), RationalFunction(1));
  return h;
}

NilHecke NilHecke::reflection(const Composition& lambda, Letter s) {
  NilHecke h = scalar(lambda, RationalFunction(1));
  h.add_term(RowPermutation::simple(lambda, s.row, s.pos),
             -difference(lambda, letter_first(s), letter_second(s)));
  return h;
}

NilHecke NilHecke::group_element(const Composition& lambda, const RowPermutation& p) {
  NilHecke h = scalar(lambda, RationalFunction(1));
  for (const auto& s : reduced_word(lambda, p).letters) h = h * reflection(lambda, s);
  return h;
}

void NilHecke::add_term(const RowPermutation& w, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NilHecke NilHecke::operator+(const NilHecke& o) const {
  NilHecke r = lambda_.rows() ? *this : NilHecke(o.lambda_);
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

NilHecke NilHecke::left_multiply(const RationalFunction& c) const {
  NilHecke r(lambda_);
  for (const auto& [w, d] : terms_) r.add_term(w, c * d);
  return r;
}

NilHecke NilHecke::apply_simple_left(Letter s) const {
  NilHecke r(lambda_);
  VarId a = VarId::x(s.row, s.pos), b = VarId::x(s.row, s.pos + 1);
  RowPermutation sp = RowPermutation::simple(lambda_, s.row, s.pos);
  for (const auto& [w, c] : terms_) {
    r.add_term(w, apply_partial(c, a, b));
    RowPermutation sw = sp * w;
    if (sw.length(lambda_) == w.length(lambda_) + 1) r.add_term(sw, c.swap_vars(a, b));
  }
  return r;
}

NilHecke NilHecke::operator*(const NilHecke& o) const {
  const Composition& lam = lambda_.rows() ? lambda_ : o.lambda_;
  NilHecke r(lam);
  for (const auto& [x, c] : terms_) {
    auto word = reduced_word(lam, x);
    for (const auto& [y, d] : o.terms_) {
      // d_x o d = sum_z e_z d_z
      NilHecke moved = scalar(lam, d);
      for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) moved = moved.apply_simple_left(*it);
      int ly = y.length(lam);
      for (const auto& [z, e] : moved.terms_) {
        RowPermutation zy = z * y;
        if (zy.length(lam) == z.length(lam) + ly) r.add_term(zy, c * e);
      }
    }
  }
  return r;
}

SkewOperator NilHecke::to_skew() const {
  SkewOperator op(lambda_);
  for (const auto& [w, c] : terms_)
    op = op + SkewOperator::multiplication(lambda_, c).compose(partial_word(lambda_, reduced_word(lambda_, w)));
  return op;
}

RationalFunction NilHecke::apply(const RationalFunction& f) const {
  RationalFunction out;
  for (const auto& [w, c] : terms_) {
    RationalFunction g = f;
    auto word = reduced_word(lambda_, w);
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
      g = apply_partial(g, VarId::x(it->row, it->pos), VarId::x(it->row, it->pos + 1));
    out += c * g;
  }
  return out;
}

}  // namespace gzkit
