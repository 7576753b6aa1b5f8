#ifndef GZKIT_LATWALK_HPP
#define GZKIT_LATWALK_HPP

#include <string>
#include <vector>

namespace gzkit {

// One row of a shift vector together with the partition of its positions
// into classes of equal coordinates.
class LatticeState {
public:
  LatticeState() = default;
  explicit LatticeState(std::vector<long> coords);

  const std::vector<long>& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  const std::vector<std::vector<int>>& pattern() const { return pattern_; }
  // every class of this pattern lies inside a class of o's pattern
  bool refines(const LatticeState& o) const;

  bool operator==(const LatticeState& o) const { return coords_ == o.coords_; }
  auto operator<=>(const LatticeState& o) const { return coords_ <=> o.coords_; }
  std::string render() const;  // "(a,b,c)"

private:
  std::vector<long> coords_;
  std::vector<std::vector<int>> pattern_;
};

LatticeState parse_state(const std::string& text);  // ParseError

enum class MoveKind { Reduction1, Reduction2, Invalid };

std::string render_kind(MoveKind k);  // "1", "2", "invalid"

// Throws InvalidMove unless the states differ by +-1 in exactly one coordinate.
MoveKind classify_move(const LatticeState& from, const LatticeState& to);

struct Move {
  LatticeState from;
  LatticeState to;
  MoveKind kind = MoveKind::Invalid;
};

std::vector<Move> find_path(const LatticeState& start, const LatticeState& target);

std::string render_path(const std::vector<Move>& moves);  // "(0,0) -1-> (1,0)"
// Arrow notation "(a,b) -1-> (c,d) -2-> ..."; "\overset{1}{\to}" and "->1" style labels are accepted too.
std::vector<Move> parse_walk(const std::string& text);

struct ArrowCheck {
  std::size_t position = 0;
  Move claimed;
  std::string actual;  // "1", "2", "invalid", "non-move", "non-adjacent"
  bool chained = true;  // starts where the previous arrow ended
  bool ok = false;
};

struct WalkReport {
  std::vector<ArrowCheck> arrows;
  std::vector<std::size_t> flagged;
  bool valid() const { return flagged.empty(); }
};

WalkReport validate_walk(const std::vector<Move>& moves);

}  // namespace gzkit

#endif
