#ifndef GZKIT_COMBINAT_HPP
#define GZKIT_COMBINAT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gzkit/exactalg.hpp"

namespace gzkit {

// Upper bound on the order of groups we are willing to enumerate.
inline constexpr std::size_t kMaxEnumeratedGroupOrder = 5040;

struct Index {
  int row = 0;
  int col = 0;
  auto operator<=>(const Index&) const = default;
};

// Composition lambda = (lambda_1, ..., lambda_k) together with its index set
// I = {(i,j) : 1 <= j <= lambda_i}, flattened row-major.
class Composition {
public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  int rows() const { return static_cast<int>(parts_.size()); }  // k
  int size() const { return total_; }                           // m
  int part(int row) const { return parts_.at(row - 1); }        // lambda_row, 1-based
  const std::vector<int>& parts() const { return parts_; }
  int max_part() const;

  int flat(Index a) const;
  int flat(int row, int col) const { return flat(Index{row, col}); }
  Index index(int flat) const { return pairs_.at(flat); }
  const std::vector<Index>& indices() const { return pairs_; }
  int row_begin(int row) const { return offsets_.at(row - 1); }  // flat index of (row,1)
  std::vector<Index> row_indices(int row) const;                 // empty for row 0 and row k+1
  bool contains(Index a) const;
  VarId var(Index a) const { return VarId::x(a.row, a.col); }
  VarId var_flat(int flat) const { return var(index(flat)); }

  // number of shiftable coordinates (rows 1..k-1)
  int lattice_rank() const { return total_ - parts_.back(); }

  bool operator==(const Composition& o) const { return parts_ == o.parts_; }
  std::string render() const;

private:
  std::vector<int> parts_;
  std::vector<int> offsets_;
  std::vector<Index> pairs_;
  int total_ = 0;
};

using IndexSet = Composition;

// Integer offsets per flat index. Elements of the shift lattice have zero
// offsets on the top row.
class ShiftVector {
public:
  ShiftVector() = default;
  explicit ShiftVector(int m) : offsets_(m, 0) {}
  explicit ShiftVector(std::vector<long> offsets) : offsets_(std::move(offsets)) {}
  static ShiftVector unit(const Composition& lambda, Index a, long amount = 1);

  long operator[](int flat) const { return offsets_.at(flat); }
  long& operator[](int flat) { return offsets_.at(flat); }
  int size() const { return static_cast<int>(offsets_.size()); }
  const std::vector<long>& offsets() const { return offsets_; }
  bool is_zero() const;
  bool in_lattice(const Composition& lambda) const;

  ShiftVector operator+(const ShiftVector& o) const;
  ShiftVector operator-(const ShiftVector& o) const;
  ShiftVector operator-() const;

  auto operator<=>(const ShiftVector&) const = default;
  std::string render(const Composition& lambda) const;  // "(a,b,...)" over rows 1..k-1

private:
  std::vector<long> offsets_;
};

// Element of G = S_{lambda_1} x ... x S_{lambda_k}, stored as images of flat
// indices. It acts on variables by x_a -> x_{perm(a)}.
class RowPermutation {
public:
  RowPermutation() = default;
  static RowPermutation identity(const Composition& lambda);
  static RowPermutation transposition(const Composition& lambda, Index a, Index b);
  static RowPermutation simple(const Composition& lambda, int row, int pos);
  static RowPermutation from_images(const Composition& lambda, std::vector<int> images);

  int operator()(int flat) const { return images_.at(flat); }
  int size() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;
  bool in_underline(const Composition& lambda) const;  // identity on the top row

  RowPermutation operator*(const RowPermutation& o) const;  // (this o o)(a) = this(o(a))
  RowPermutation inverse() const;
  int length(const Composition& lambda) const;  // Coxeter length = inversions per row

  auto operator<=>(const RowPermutation&) const = default;
  std::string render(const Composition& lambda) const;    // one-line per row
  std::string render_cycles(const Composition& lambda) const;

private:
  std::vector<int> images_;
};

// Simple reflection ((row,pos),(row,pos+1)).
struct Letter {
  int row = 0;
  int pos = 0;
  auto operator<=>(const Letter&) const = default;
};

struct ReducedWord {
  std::vector<Letter> letters;

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  auto operator<=>(const ReducedWord&) const = default;
  std::string render() const;  // "s[i,p] s[i,p']", "e" for the empty word
};

ReducedWord parse_word(const std::string& text);

// Young subgroup: for each row, a set partition of {1..lambda_i} into blocks.
// The subgroup permutes each block arbitrarily.
class YoungSubgroup {
public:
  YoungSubgroup() = default;
  // rows[i-1] = blocks of row i (1-based column numbers); validated.
  YoungSubgroup(const Composition& lambda, std::vector<std::vector<std::vector<int>>> rows);
  static YoungSubgroup trivial(const Composition& lambda);
  static YoungSubgroup full(const Composition& lambda, bool include_top_row = true);
  // each row given as a composition into consecutive segments
  static YoungSubgroup from_segments(const Composition& lambda, const std::vector<std::vector<int>>& segments);

  const Composition& lambda() const { return lambda_; }
  const std::vector<std::vector<int>>& blocks(int row) const { return rows_.at(row - 1); }
  int block_of(int flat) const { return block_id_.at(flat); }  // globally unique block id
  bool contains(const YoungSubgroup& small) const;
  bool contains(const RowPermutation& p) const;
  bool is_parabolic() const;  // every block is a consecutive segment
  std::size_t order() const;
  std::vector<RowPermutation> elements() const;  // throws GroupTooLarge
  std::vector<Letter> simple_reflections() const;  // requires is_parabolic()
  std::vector<int> segment_composition(int row) const;  // block sizes, requires is_parabolic()

  bool operator==(const YoungSubgroup& o) const { return block_id_ == o.block_id_; }
  std::string render() const;

private:
  Composition lambda_;
  std::vector<std::vector<std::vector<int>>> rows_;
  std::vector<int> block_id_;
};

struct OrbitReport {
  std::vector<std::vector<int>> orbits;  // columns, sorted
  bool contiguous = true;
};

OrbitReport orbits_and_stabilizer(int row_size, const std::vector<std::vector<int>>& blocks);

RowPermutation word_product(const Composition& lambda, const ReducedWord& w);
ReducedWord reduced_word(const Composition& lambda, const RowPermutation& p);
bool is_reduced(const Composition& lambda, const ReducedWord& w);

struct WordInfo {
  std::size_t length = 0;
  RowPermutation product;
  bool reduced = false;
};
WordInfo word_ops(const Composition& lambda, const ReducedWord& w);

// Minimal-length representatives of the left cosets big/small, sorted by
// (length, word).
std::vector<ReducedWord> shortest_coset_reps(const YoungSubgroup& big, const YoungSubgroup& small);
ReducedWord longest_element(const YoungSubgroup& big, const YoungSubgroup& small);

}  // namespace gzkit

#endif
