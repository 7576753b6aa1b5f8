#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "gzkit/combinat.hpp"

namespace gzkit {

// ---------------------------------------------------------------- Composition

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidComposition("composition needs at least one part");
  for (int p : parts_)
    if (p < 1) throw InvalidComposition("composition parts must be positive");
  for (int i = 0; i < rows(); ++i) {
    offsets_.push_back(total_);
    for (int j = 1; j <= parts_[i]; ++j) pairs_.push_back(Index{i + 1, j});
    total_ += parts_[i];
  }
  // VarId capacity
  if (rows() > 255 || max_part() > 127) throw InvalidComposition("composition too large");
}

int Composition::max_part() const { return *std::max_element(parts_.begin(), parts_.end()); }

int Composition::flat(Index a) const {
  if (!contains(a))
    throw InvalidIndex("index (" + std::to_string(a.row) + "," + std::to_string(a.col) + ") not in I");
  return offsets_[a.row - 1] + a.col - 1;
}

bool Composition::contains(Index a) const {
  return a.row >= 1 && a.row <= rows() && a.col >= 1 && a.col <= parts_[a.row - 1];
}

std::vector<Index> Composition::row_indices(int row) const {
  std::vector<Index> out;
  if (row < 1 || row > rows()) return out;
  for (int j = 1; j <= parts_[row - 1]; ++j) out.push_back(Index{row, j});
  return out;
}

std::string Composition::render() const {
  std::string out = "(";
  for (int i = 0; i < rows(); ++i) out += (i ? "," : "") + std::to_string(parts_[i]);
  return out + ")";
}

// ---------------------------------------------------------------- ShiftVector

ShiftVector ShiftVector::unit(const Composition& lambda, Index a, long amount) {
  ShiftVector s(lambda.size());
  s[lambda.flat(a)] = amount;
  return s;
}

bool ShiftVector::is_zero() const {
  return std::all_of(offsets_.begin(), offsets_.end(), [](long x) { return x == 0; });
}

bool ShiftVector::in_lattice(const Composition& lambda) const {
  if (size() != lambda.size()) return false;
  for (int f = lambda.row_begin(lambda.rows()); f < lambda.size(); ++f)
    if (offsets_[f] != 0) return false;
  return true;
}

ShiftVector ShiftVector::operator+(const ShiftVector& o) const {
  ShiftVector r = *this;
  for (int f = 0; f < size(); ++f) r.offsets_[f] += o.offsets_.at(f);
  return r;
}

ShiftVector ShiftVector::operator-(const ShiftVector& o) const { return *this + (-o); }

ShiftVector ShiftVector::operator-() const {
  ShiftVector r = *this;
  for (auto& x : r.offsets_) x = -x;
  return r;
}

std::string ShiftVector::render(const Composition& lambda) const {
  std::string out = "(";
  int n = lambda.lattice_rank();
  for (int f = 0; f < n; ++f) out += (f ? "," : "") + std::to_string(offsets_.at(f));
  return out + ")";
}

// ---------------------------------------------------------------- RowPermutation

RowPermutation RowPermutation::identity(const Composition& lambda) {
  RowPermutation p;
  p.images_.resize(lambda.size());
  std::iota(p.images_.begin(), p.images_.end(), 0);
  return p;
}

RowPermutation RowPermutation::transposition(const Composition& lambda, Index a, Index b) {
  if (a.row != b.row || a == b) throw InvalidPair("transposition needs two distinct indices in one row");
  RowPermutation p = identity(lambda);
  std::swap(p.images_[lambda.flat(a)], p.images_[lambda.flat(b)]);
  return p;
}

RowPermutation RowPermutation::simple(const Composition& lambda, int row, int pos) {
  return transposition(lambda, Index{row, pos}, Index{row, pos + 1});
}

RowPermutation RowPermutation::from_images(const Composition& lambda, std::vector<int> images) {
  if (static_cast<int>(images.size()) != lambda.size()) throw InvalidSubgroup("permutation size mismatch");
  std::vector<bool> seen(images.size());
  for (int f = 0; f < lambda.size(); ++f) {
    int g = images[f];
    if (g < 0 || g >= lambda.size() || seen[g] || lambda.index(g).row != lambda.index(f).row)
      throw InvalidSubgroup("not a row permutation");
    seen[g] = true;
  }
  RowPermutation p;
  p.images_ = std::move(images);
  return p;
}

bool RowPermutation::is_identity() const {
  for (int f = 0; f < size(); ++f)
    if (images_[f] != f) return false;
  return true;
}

bool RowPermutation::in_underline(const Composition& lambda) const {
  for (int f = lambda.row_begin(lambda.rows()); f < lambda.size(); ++f)
    if (images_[f] != f) return false;
  return true;
}

RowPermutation RowPermutation::operator*(const RowPermutation& o) const {
  RowPermutation r;
  r.images_.resize(images_.size());
  for (std::size_t f = 0; f < images_.size(); ++f) r.images_[f] = images_[o.images_[f]];
  return r;
}

RowPermutation RowPermutation::inverse() const {
  RowPermutation r;
  r.images_.resize(images_.size());
  for (std::size_t f = 0; f < images_.size(); ++f) r.images_[images_[f]] = static_cast<int>(f);
  return r;
}

int RowPermutation::length(const Composition& lambda) const {
  int inv = 0;
  for (int i = 1; i <= lambda.rows(); ++i) {
    int b = lambda.row_begin(i), n = lambda.part(i);
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        if (images_[b + p] > images_[b + q]) ++inv;
  }
  return inv;
}

std::string RowPermutation::render(const Composition& lambda) const {
  std::string out = "[";
  for (int i = 1; i <= lambda.rows(); ++i) {
    if (i > 1) out += " |";
    int b = lambda.row_begin(i);
    for (int p = 0; p < lambda.part(i); ++p) out += (p || i > 1 ? " " : "") + std::to_string(images_[b + p] - b + 1);
  }
  return out + "]";
}

std::string RowPermutation::render_cycles(const Composition& lambda) const {
  std::string out;
  std::vector<bool> seen(images_.size());
  for (int f = 0; f < size(); ++f) {
    if (seen[f] || images_[f] == f) continue;
    out += "(";
    int g = f;
    bool first = true;
    while (!seen[g]) {
      seen[g] = true;
      Index a = lambda.index(g);
      out += (first ? "" : " ") + std::string("(") + std::to_string(a.row) + "," + std::to_string(a.col) + ")";
      first = false;
      g = images_[g];
    }
    out += ")";
  }
  return out.empty() ? "id" : out;
}

// ---------------------------------------------------------------- words

std::string ReducedWord::render() const {
  if (letters.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < letters.size(); ++k)
    out += (k ? " " : "") + std::string("s[") + std::to_string(letters[k].row) + "," +
           std::to_string(letters[k].pos) + "]";
  return out;
}

ReducedWord parse_word(const std::string& text) {
  ReducedWord w;
  std::size_t p = 0;
  auto skip = [&] {
    while (p < text.size() && (text[p] == ' ' || text[p] == '*')) ++p;
  };
  auto number = [&]() {
    std::size_t start = p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    if (start == p) throw ParseError("expected number in word", p);
    return std::stoi(text.substr(start, p - start));
  };
  skip();
  if (text.substr(p) == "e") return w;
  while (p < text.size()) {
    if (text.compare(p, 2, "s[") != 0) throw ParseError("expected s[i,p]", p);
    p += 2;
    int row = number();
    if (p >= text.size() || text[p] != ',') throw ParseError("expected ','", p);
    ++p;
    int pos = number();
    if (p >= text.size() || text[p] != ']') throw ParseError("expected ']'", p);
    ++p;
    w.letters.push_back(Letter{row, pos});
    skip();
  }
  return w;
}

RowPermutation word_product(const Composition& lambda, const ReducedWord& w) {
  RowPermutation p = RowPermutation::identity(lambda);
  for (const auto& s : w.letters) p = p * RowPermutation::simple(lambda, s.row, s.pos);
  return p;
}

ReducedWord reduced_word(const Composition& lambda, const RowPermutation& p) {
  std::vector<Letter> reversed;
  RowPermutation w = p;
  while (true) {
    bool found = false;
    for (int i = 1; i <= lambda.rows() && !found; ++i) {
      int b = lambda.row_begin(i);
      for (int q = 0; q + 1 < lambda.part(i); ++q) {
        if (w(b + q) > w(b + q + 1)) {
          reversed.push_back(Letter{i, q + 1});
          w = w * RowPermutation::simple(lambda, i, q + 1);
          found = true;
          break;
        }
      }
    }
    if (!found) break;
  }
  return ReducedWord{std::vector<Letter>(reversed.rbegin(), reversed.rend())};
}

bool is_reduced(const Composition& lambda, const ReducedWord& w) {
  return static_cast<int>(w.length()) == word_product(lambda, w).length(lambda);
}

WordInfo word_ops(const Composition& lambda, const ReducedWord& w) {
  for (const auto& s : w.letters)
    if (s.row < 1 || s.row > lambda.rows() || s.pos < 1 || s.pos >= lambda.part(s.row))
      throw InvalidPair("invalid simple reflection " + ReducedWord{{s}}.render());
  WordInfo info;
  info.length = w.length();
  info.product = word_product(lambda, w);
  info.reduced = static_cast<int>(info.length) == info.product.length(lambda);
  return info;
}

// ---------------------------------------------------------------- Young subgroups

OrbitReport orbits_and_stabilizer(int row_size, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> seen(row_size + 1, 0);
  OrbitReport report;
  for (const auto& b : blocks) {
    if (b.empty()) throw InvalidSubgroup("empty block");
    std::vector<int> sorted = b;
    std::sort(sorted.begin(), sorted.end());
    for (int c : sorted) {
      if (c < 1 || c > row_size || seen[c]) throw InvalidSubgroup("blocks do not partition the row");
      seen[c] = 1;
    }
    for (std::size_t k = 1; k < sorted.size(); ++k)
      if (sorted[k] != sorted[k - 1] + 1) report.contiguous = false;
    report.orbits.push_back(std::move(sorted));
  }
  for (int c = 1; c <= row_size; ++c)
    if (!seen[c]) throw InvalidSubgroup("blocks do not partition the row");
  std::sort(report.orbits.begin(), report.orbits.end());
  return report;
}

YoungSubgroup::YoungSubgroup(const Composition& lambda, std::vector<std::vector<std::vector<int>>> rows)
    : lambda_(lambda), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != lambda.rows()) throw InvalidSubgroup("one block list per row required");
  block_id_.assign(lambda.size(), -1);
  int next = 0;
  for (int i = 1; i <= lambda.rows(); ++i) {
    auto report = orbits_and_stabilizer(lambda.part(i), rows_[i - 1]);
    rows_[i - 1] = report.orbits;
    for (const auto& b : rows_[i - 1]) {
      for (int c : b) block_id_[lambda.flat(i, c)] = next;
      ++next;
    }
  }
}

YoungSubgroup YoungSubgroup::trivial(const Composition& lambda) {
  std::vector<std::vector<std::vector<int>>> rows;
  for (int i = 1; i <= lambda.rows(); ++i) {
    std::vector<std::vector<int>> blocks;
    for (int c = 1; c <= lambda.part(i); ++c) blocks.push_back({c});
    rows.push_back(blocks);
  }
  return YoungSubgroup(lambda, rows);
}

YoungSubgroup YoungSubgroup::full(const Composition& lambda, bool include_top_row) {
  std::vector<std::vector<std::vector<int>>> rows;
  for (int i = 1; i <= lambda.rows(); ++i) {
    std::vector<std::vector<int>> blocks;
    if (i < lambda.rows() || include_top_row) {
      std::vector<int> all(lambda.part(i));
      std::iota(all.begin(), all.end(), 1);
      blocks.push_back(all);
    } else {
      for (int c = 1; c <= lambda.part(i); ++c) blocks.push_back({c});
    }
    rows.push_back(blocks);
  }
  return YoungSubgroup(lambda, rows);
}

YoungSubgroup YoungSubgroup::from_segments(const Composition& lambda, const std::vector<std::vector<int>>& segments) {
  if (static_cast<int>(segments.size()) != lambda.rows()) throw InvalidSubgroup("one segment list per row required");
  std::vector<std::vector<std::vector<int>>> rows;
  for (int i = 1; i <= lambda.rows(); ++i) {
    std::vector<std::vector<int>> blocks;
    int c = 1;
    for (int len : segments[i - 1]) {
      if (len < 1) throw InvalidComposition("segment lengths must be positive");
      std::vector<int> b;
      for (int t = 0; t < len; ++t) b.push_back(c++);
      blocks.push_back(b);
    }
    if (c != lambda.part(i) + 1) throw InvalidComposition("segments do not cover row " + std::to_string(i));
    rows.push_back(blocks);
  }
  return YoungSubgroup(lambda, rows);
}

bool YoungSubgroup::contains(const YoungSubgroup& small) const {
  if (!(small.lambda_ == lambda_)) return false;
  // each block of small lies inside one block of this
  std::map<int, int> image;
  for (int f = 0; f < lambda_.size(); ++f) {
    auto [it, inserted] = image.emplace(small.block_id_[f], block_id_[f]);
    if (!inserted && it->second != block_id_[f]) return false;
  }
  return true;
}

bool YoungSubgroup::contains(const RowPermutation& p) const {
  for (int f = 0; f < lambda_.size(); ++f)
    if (block_id_[p(f)] != block_id_[f]) return false;
  return true;
}

bool YoungSubgroup::is_parabolic() const {
  for (const auto& row : rows_)
    for (const auto& b : row)
      for (std::size_t k = 1; k < b.size(); ++k)
        if (b[k] != b[k - 1] + 1) return false;
  return true;
}

std::size_t YoungSubgroup::order() const {
  std::size_t n = 1;
  for (const auto& row : rows_)
    for (const auto& b : row)
      for (std::size_t t = 2; t <= b.size(); ++t) {
        n *= t;
        if (n > kMaxEnumeratedGroupOrder * 1000) return n;
      }
  return n;
}

std::vector<RowPermutation> YoungSubgroup::elements() const {
  if (order() > kMaxEnumeratedGroupOrder)
    throw GroupTooLarge("group of order " + std::to_string(order()) + " exceeds the enumeration guard");
  std::vector<RowPermutation> out{RowPermutation::identity(lambda_)};
  for (int i = 1; i <= lambda_.rows(); ++i) {
    for (const auto& b : rows_[i - 1]) {
      if (b.size() < 2) continue;
      std::vector<int> flats;
      for (int c : b) flats.push_back(lambda_.flat(i, c));
      std::vector<int> arrangement = flats;
      std::vector<RowPermutation> next;
      do {
        std::vector<int> images = RowPermutation::identity(lambda_).images();
        for (std::size_t t = 0; t < flats.size(); ++t) images[flats[t]] = arrangement[t];
        RowPermutation local = RowPermutation::from_images(lambda_, images);
        for (const auto& e : out) next.push_back(local * e);
      } while (std::next_permutation(arrangement.begin(), arrangement.end()));
      out = std::move(next);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Letter> YoungSubgroup::simple_reflections() const {
  if (!is_parabolic()) throw InvalidSubgroup("simple reflections need consecutive blocks");
  std::vector<Letter> out;
  for (int i = 1; i <= lambda_.rows(); ++i)
    for (const auto& b : rows_[i - 1])
      for (std::size_t k = 0; k + 1 < b.size(); ++k) out.push_back(Letter{i, b[k]});
  return out;
}

std::vector<int> YoungSubgroup::segment_composition(int row) const {
  if (!is_parabolic()) throw InvalidSubgroup("segment composition needs consecutive blocks");
  std::vector<int> out;
  for (const auto& b : rows_.at(row - 1)) out.push_back(static_cast<int>(b.size()));
  return out;
}

std::string YoungSubgroup::render() const {
  std::string out;
  for (int i = 1; i <= lambda_.rows(); ++i) {
    if (i > 1) out += " x ";
    out += "{";
    for (std::size_t k = 0; k < rows_[i - 1].size(); ++k) {
      out += k ? "," : "";
      out += "{";
      for (std::size_t t = 0; t < rows_[i - 1][k].size(); ++t)
        out += (t ? "," : "") + std::to_string(rows_[i - 1][k][t]);
      out += "}";
    }
    out += "}";
  }
  return out;
}

std::vector<ReducedWord> shortest_coset_reps(const YoungSubgroup& big, const YoungSubgroup& small) {
  if (!big.contains(small)) throw NotASubgroup("subgroup is not contained in the ambient Young subgroup");
  const Composition& lambda = big.lambda();
  // the coset w*small is determined by a -> block_small(w^{-1}(a))
  std::map<std::vector<int>, std::pair<int, RowPermutation>> best;
  for (const auto& w : big.elements()) {
    RowPermutation winv = w.inverse();
    std::vector<int> key(lambda.size());
    for (int f = 0; f < lambda.size(); ++f) key[f] = small.block_of(winv(f));
    int len = w.length(lambda);
    auto it = best.find(key);
    if (it == best.end() || len < it->second.first) best[key] = {len, w};
  }
  std::vector<ReducedWord> reps;
  for (const auto& [key, entry] : best) reps.push_back(reduced_word(lambda, entry.second));
  std::sort(reps.begin(), reps.end(), [](const ReducedWord& a, const ReducedWord& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a < b;
  });
  return reps;
}

ReducedWord longest_element(const YoungSubgroup& big, const YoungSubgroup& small) {
  return shortest_coset_reps(big, small).back();
}

}  // namespace gzkit
