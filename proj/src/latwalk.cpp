#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "gzkit/errors.hpp"
#include "gzkit/latwalk.hpp"

namespace gzkit {

LatticeState::LatticeState(std::vector<long> coords) : coords_(std::move(coords)) {
  std::map<long, std::vector<int>> classes;
  for (std::size_t a = 0; a < coords_.size(); ++a) classes[coords_[a]].push_back(static_cast<int>(a));
  for (auto& [value, members] : classes) pattern_.push_back(std::move(members));
  std::sort(pattern_.begin(), pattern_.end());
}

bool LatticeState::refines(const LatticeState& o) const {
  for (const auto& cls : pattern_)
    for (int a : cls)
      if (o.coords_[a] != o.coords_[cls.front()]) return false;
  return true;
}

std::string LatticeState::render() const {
  std::string out = "(";
  for (std::size_t a = 0; a < coords_.size(); ++a) out += (a ? "," : "") + std::to_string(coords_[a]);
  return out + ")";
}

LatticeState parse_state(const std::string& text) {
  std::vector<long> coords;
  std::size_t p = 0;
  auto skip = [&] {
    while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
  };
  skip();
  if (p >= text.size() || text[p] != '(') throw ParseError("expected '('", p);
  ++p;
  while (true) {
    skip();
    std::size_t start = p;
    if (p < text.size() && (text[p] == '-' || text[p] == '+')) ++p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    if (p == start || !std::isdigit(static_cast<unsigned char>(text[p - 1]))) throw ParseError("expected an integer", start);
    coords.push_back(std::stol(text.substr(start, p - start)));
    skip();
    if (p < text.size() && text[p] == ',') {
      ++p;
      continue;
    }
    if (p < text.size() && text[p] == ')') {
      ++p;
      break;
    }
    throw ParseError("expected ',' or ')'", p);
  }
  skip();
  if (p != text.size()) throw ParseError("trailing characters after state", p);
  return LatticeState(std::move(coords));
}

std::string render_kind(MoveKind k) {
  switch (k) {
    case MoveKind::Reduction1: return "1";
    case MoveKind::Reduction2: return "2";
    case MoveKind::Invalid: break;
  }
  return "invalid";
}

namespace {

bool adjacent(const LatticeState& a, const LatticeState& b) {
  if (a.size() != b.size()) return false;
  int changed = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    long d = a.coords()[k] - b.coords()[k];
    if (d == 0) continue;
    if (d != 1 && d != -1) return false;
    ++changed;
  }
  return changed == 1;
}

}  // namespace

MoveKind classify_move(const LatticeState& from, const LatticeState& to) {
  if (!adjacent(from, to))
    throw InvalidMove("states " + from.render() + " and " + to.render() + " are not adjacent");
  // stabilizer of `to` inside that of `from`: to refines from
  if (to.refines(from)) return MoveKind::Reduction1;
  if (from.refines(to)) return MoveKind::Reduction2;
  return MoveKind::Invalid;
}

namespace {

void step(std::vector<Move>& path, std::vector<long>& cur, std::size_t a, long delta) {
  LatticeState from(cur);
  cur[a] += delta;
  LatticeState to(cur);
  path.push_back(Move{from, to, classify_move(from, to)});
}

}  // namespace

std::vector<Move> find_path(const LatticeState& start, const LatticeState& target) {
  if (start.size() != target.size()) throw ValidationError("states have different lengths");
  std::vector<Move> path;
  if (start == target) return path;
  if (adjacent(start, target) && classify_move(start, target) != MoveKind::Invalid) {
    path.push_back(Move{start, target, classify_move(start, target)});
    return path;
  }

  std::size_t n = start.size();
  std::vector<long> cur = start.coords();
  const std::vector<long>& goal = target.coords();
  long top = std::max(*std::max_element(cur.begin(), cur.end()), *std::max_element(goal.begin(), goal.end()));

  // raise to spread values top + 2n, top + 2n - 2, ..., highest current
  // value first; the gaps keep later crossings to one tie at a time
  std::vector<std::size_t> raise(n);
  std::iota(raise.begin(), raise.end(), 0);
  std::stable_sort(raise.begin(), raise.end(), [&](std::size_t a, std::size_t b) { return cur[a] > cur[b]; });
  for (std::size_t k = 0; k < n; ++k) {
    long high = top + 2 * static_cast<long>(n - k);
    while (cur[raise[k]] < high) step(path, cur, raise[k], 1);
  }

  // lower in ascending target order
  std::vector<std::size_t> lower(n);
  std::iota(lower.begin(), lower.end(), 0);
  std::stable_sort(lower.begin(), lower.end(), [&](std::size_t a, std::size_t b) { return goal[a] < goal[b]; });
  for (std::size_t a : lower)
    while (cur[a] > goal[a]) step(path, cur, a, -1);
  return path;
}

std::string render_path(const std::vector<Move>& moves) {
  if (moves.empty()) return "";
  std::string out = moves.front().from.render();
  for (const Move& m : moves) out += " -" + render_kind(m.kind) + "-> " + m.to.render();
  return out;
}

std::vector<Move> parse_walk(const std::string& text) {
  std::vector<LatticeState> states;
  std::vector<std::size_t> starts, ends;
  std::size_t p = 0;
  while ((p = text.find('(', p)) != std::string::npos) {
    std::size_t q = text.find(')', p);
    if (q == std::string::npos) throw ParseError("unterminated state", p);
    states.push_back(parse_state(text.substr(p, q - p + 1)));
    starts.push_back(p);
    ends.push_back(q + 1);
    p = q + 1;
  }
  std::vector<Move> moves;
  for (std::size_t k = 1; k < states.size(); ++k) {
    std::string between = text.substr(ends[k - 1], starts[k] - ends[k - 1]);
    std::size_t d = between.find_first_of("12");
    if (d == std::string::npos) throw ParseError("missing arrow label", ends[k - 1]);
    MoveKind kind = between[d] == '1' ? MoveKind::Reduction1 : MoveKind::Reduction2;
    moves.push_back(Move{states[k - 1], states[k], kind});
  }
  return moves;
}

WalkReport validate_walk(const std::vector<Move>& moves) {
  WalkReport report;
  for (std::size_t k = 0; k < moves.size(); ++k) {
    ArrowCheck c;
    c.position = k;
    c.claimed = moves[k];
    c.chained = k == 0 || moves[k - 1].to == moves[k].from;
    if (moves[k].from == moves[k].to) {
      c.actual = "non-move";
    } else if (!adjacent(moves[k].from, moves[k].to)) {
      c.actual = "non-adjacent";
    } else {
      c.actual = render_kind(classify_move(moves[k].from, moves[k].to));
    }
    c.ok = c.chained && c.actual == render_kind(moves[k].kind) && moves[k].kind != MoveKind::Invalid;
    if (!c.ok) report.flagged.push_back(k);
    report.arrows.push_back(std::move(c));
  }
  return report;
}

}  // namespace gzkit
