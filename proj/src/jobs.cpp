#include <regex>
#include <set>
#include <sstream>

#include "gzkit/errors.hpp"
#include "gzkit/expr.hpp"
#include "gzkit/jobs.hpp"
#include "gzkit/relations.hpp"

namespace gzkit {

using nlohmann::json;

namespace {

const std::set<std::string> kSpecKeys = {"lambda", "point",  "radius", "degree", "edge_rule", "op",
                                         "expr",   "generators", "start", "target", "walk"};

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
  throw ValidationError(where + ": " + what);
}

long require_int(const json& j, const std::string& where, long lo, long hi) {
  if (!j.is_number_integer()) invalid(where, "expected an integer");
  long v = j.get<long>();
  if (v < lo || v > hi) invalid(where, "out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

const std::string& require_string(const json& j, const std::string& where) {
  if (!j.is_string()) invalid(where, "expected a string");
  return j.get_ref<const std::string&>();
}

Rational parse_rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  static const std::regex pattern("-?[0-9]+(/[1-9][0-9]*)?");
  const std::string& s = require_string(j, where);
  if (!std::regex_match(s, pattern)) invalid(where, "expected an exact rational \"p\" or \"p/q\"");
  Rational q(s);
  q.canonicalize();
  return q;
}

std::vector<long> parse_coords(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) invalid(where, "expected a non-empty integer array");
  std::vector<long> out;
  for (std::size_t k = 0; k < j.size(); ++k)
    out.push_back(require_int(j[k], where + "[" + std::to_string(k) + "]", -1000000, 1000000));
  return out;
}

EvalPoint parse_point(const Composition& lambda, const json& j) {
  if (!j.is_object()) invalid("point", "expected an object keyed by \"i,j\"");
  static const std::regex key_pattern("([1-9][0-9]*),([1-9][0-9]*)");
  std::vector<std::optional<PointValue>> values(lambda.size());
  for (const auto& [key, entry] : j.items()) {
    std::smatch m;
    if (!std::regex_match(key, m, key_pattern)) invalid("point", "bad key \"" + key + "\"");
    Index a{std::stoi(m[1]), std::stoi(m[2])};
    if (!lambda.contains(a)) invalid("point", "key \"" + key + "\" outside lambda");
    std::string where = "point[" + key + "]";
    if (!entry.is_object()) invalid(where, "expected {tag, offset}");
    for (const auto& [field, unused] : entry.items())
      if (field != "tag" && field != "offset") invalid(where, "unknown field \"" + field + "\"");
    if (!entry.contains("tag")) invalid(where, "missing tag");
    PointValue pv;
    pv.tag = static_cast<int>(require_int(entry["tag"], where + ".tag", 1, 1000));
    if (entry.contains("offset")) pv.offset = parse_rational(entry["offset"], where + ".offset");
    values[lambda.flat(a)] = pv;
  }
  std::vector<PointValue> flat;
  for (int a = 0; a < lambda.size(); ++a) {
    if (!values[a]) {
      Index idx = lambda.index(a);
      invalid("point", "missing value for \"" + std::to_string(idx.row) + "," + std::to_string(idx.col) + "\"");
    }
    flat.push_back(*values[a]);
  }
  return EvalPoint(lambda, std::move(flat));
}

std::string render_shift(const Composition& lambda, const ShiftVector& s) { return s.render(lambda); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json checks_json(const std::vector<RelationCheck>& checks) {
  json out = json::array();
  for (const RelationCheck& c : checks) out.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return out;
}

EvalPoint point_of(const JobSpec& spec) { return spec.point ? *spec.point : EvalPoint::generic(spec.lambda); }

ModuleWindow window_of(const JobSpec& spec) { return build_basis_B(point_of(spec), spec.radius, spec.degree); }

json window_header(const ModuleWindow& w) {
  return {{"lambda", w.lambda().parts()},
          {"point", point_to_json(w.center())},
          {"radius", w.radius()},
          {"stabilizer", w.stabilizer().render()}};
}

std::string run_apply(const JobSpec& spec) {
  if (spec.op.empty()) throw ValidationError("apply: op is required");
  if (spec.expr.empty()) throw ValidationError("apply: expr is required");
  SkewOperator op = generator_by_name(spec.lambda, spec.op);
  RationalFunction f = parse_expr(spec.expr, spec.lambda);
  return apply(op, f).render() + "\n";
}

std::string run_check_relations(const JobSpec& spec) {
  int degree = spec.degree > 0 ? spec.degree : 4;
  std::vector<RelationCheck> nil = nil_coxeter_suite(4);
  std::vector<RelationCheck> inv = invariance_suite(spec.lambda, 20, 20240601u, degree);
  std::vector<RelationCheck> gl = gl_relations(spec.lambda);
  json out = {{"lambda", spec.lambda.parts()},
              {"nil_coxeter", checks_json(nil)},
              {"invariance", checks_json(inv)},
              {"gl_relations", checks_json(gl)},
              {"passed", all_passed(nil) && all_passed(inv) && all_passed(gl)}};
  return dump(out);
}

std::string run_ddiff_compare(const JobSpec& spec) {
  int degree = spec.degree > 0 ? spec.degree : 4;
  std::vector<RelationCheck> checks = ddiff_compare(spec.lambda, degree);
  json out = {{"lambda", spec.lambda.parts()},
              {"degree", degree},
              {"test_family_size", invariant_family(spec.lambda, degree).size()},
              {"checks", checks_json(checks)},
              {"passed", all_passed(checks)}};
  return dump(out);
}

std::string run_basis(const JobSpec& spec) {
  ModuleWindow w = window_of(spec);
  json basis = json::array();
  for (std::size_t k = 0; k < w.size(); ++k) {
    const BasisEntry& b = w.basis()[k];
    basis.push_back({{"index", k},
                     {"orbit", b.orbit},
                     {"word", b.word.render()},
                     {"shift", render_shift(w.lambda(), b.shift)},
                     {"point", render_shift(w.lambda(), b.point)},
                     {"interior", w.is_interior(static_cast<int>(k))}});
  }
  json out = window_header(w);
  out["basis"] = basis;
  out["size"] = w.size();
  out["window_points"] = w.window_point_count();
  out["certified_rank"] = w.certified_rank();
  out["test_degree"] = w.degree();
  return dump(out);
}

std::string run_action(const JobSpec& spec) {
  ModuleWindow w = window_of(spec);
  std::vector<GeneratorRef> gens;
  if (spec.generators.empty()) {
    gens = module_generators(w.lambda());
  } else {
    for (const std::string& name : spec.generators) gens.push_back(parse_generator(w.lambda(), name));
  }
  std::vector<int> columns;
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w.is_interior(static_cast<int>(k))) columns.push_back(static_cast<int>(k));
  json matrices = json::object();
  for (const GeneratorRef& g : gens) {
    json triplets = json::array();
    for (int beta : columns)
      for (const auto& [row, c] : act(w, g, beta)) triplets.push_back({row, beta, c.render()});
    matrices[g.name()] = triplets;
  }
  json out = window_header(w);
  out["size"] = w.size();
  out["columns"] = columns;
  out["matrices"] = matrices;
  return dump(out);
}

std::string run_blocks(const JobSpec& spec) {
  ModuleWindow w = window_of(spec);
  BlockTable table = block_decompose(w);
  json blocks = json::array();
  for (std::size_t b = 0; b < table.characters.size(); ++b) {
    SocleResult s = socle_check(w, table, static_cast<int>(b));
    const std::vector<int>& members = table.members[b];
    blocks.push_back({{"character", table.characters[b].render()},
                      {"members", members},
                      {"dimension", members.size()},
                      {"coset_reps", w.orbits()[w.basis()[members.front()].orbit].reps.size()},
                      {"socle_dimension", s.dimension},
                      {"nilpotent", s.nilpotent}});
  }
  json out = window_header(w);
  out["blocks"] = blocks;
  return dump(out);
}

std::string run_graph(const JobSpec& spec) {
  return component_graph(point_of(spec), spec.radius, spec.edge_rule).to_dot();
}

json move_json(const Move& m) { return {{"from", m.from.render()}, {"to", m.to.render()}, {"kind", render_kind(m.kind)}}; }

std::string run_walk(const JobSpec& spec) {
  std::vector<Move> moves;
  json out;
  if (!spec.walk.empty()) {
    moves = parse_walk(spec.walk);
  } else {
    if (!spec.start || !spec.target) throw ValidationError("walk: start and target are required");
    if (spec.start->size() != spec.target->size()) throw ValidationError("walk: start and target differ in length");
    moves = find_path(*spec.start, *spec.target);
    out["start"] = spec.start->render();
    out["target"] = spec.target->render();
  }
  WalkReport report = validate_walk(moves);
  json arrows = json::array();
  for (const ArrowCheck& a : report.arrows) {
    json j = move_json(a.claimed);
    j["position"] = a.position;
    j["actual"] = a.actual;
    j["chained"] = a.chained;
    j["ok"] = a.ok;
    arrows.push_back(j);
  }
  out["path"] = render_path(moves);
  out["arrows"] = arrows;
  out["flagged"] = report.flagged;
  out["valid"] = report.valid();
  return dump(out);
}

std::string run_probe(const JobSpec& spec) {
  ModuleWindow w = window_of(spec);
  ProbeReport r = simplicity_probe(w);
  json words = json::array();
  for (const auto& [index, word] : r.cyclic_words) words.push_back({{"index", index}, {"word", word}});
  json out = window_header(w);
  out["hypothesis"] = r.hypothesis;
  out["setup"] = r.setup;
  out["step1"] = r.step1;
  out["cyclicity"] = r.cyclicity;
  out["interior_points"] = r.interior_points;
  out["failures"] = r.failures;
  out["cyclic_words"] = words;
  out["passed"] = r.hypothesis && r.setup && r.step1 && r.cyclicity;
  return dump(out);
}

}  // namespace

JobSpec parse_job_spec(const json& doc) {
  if (!doc.is_object()) invalid("spec", "expected a JSON object");
  for (const auto& [key, unused] : doc.items())
    if (!kSpecKeys.count(key)) invalid("spec", "unknown field \"" + key + "\"");

  JobSpec spec;
  if (doc.contains("lambda")) {
    const json& lam = doc["lambda"];
    if (!lam.is_array() || lam.size() < 2 || lam.size() > 6) invalid("lambda", "expected 2 to 6 positive integers");
    std::vector<int> parts;
    for (std::size_t k = 0; k < lam.size(); ++k)
      parts.push_back(static_cast<int>(require_int(lam[k], "lambda[" + std::to_string(k) + "]", 1, 7)));
    try {
      spec.lambda = Composition(parts);
      if (doc.contains("point")) spec.point = parse_point(spec.lambda, doc["point"]);
    } catch (const ValidationError&) {
      throw;
    } catch (const Error& e) {
      throw ValidationError(e.what());
    }
  } else {
    for (const char* key : {"point", "op", "expr", "generators"})
      if (doc.contains(key)) invalid("spec", std::string(key) + " requires lambda");
  }
  if (doc.contains("radius")) spec.radius = static_cast<int>(require_int(doc["radius"], "radius", 0, 8));
  if (doc.contains("degree")) spec.degree = static_cast<int>(require_int(doc["degree"], "degree", 0, 64));
  if (doc.contains("edge_rule")) {
    const std::string& rule = require_string(doc["edge_rule"], "edge_rule");
    if (rule == "both") spec.edge_rule = EdgeRule::Both;
    else if (rule == "either") spec.edge_rule = EdgeRule::Either;
    else invalid("edge_rule", "expected \"both\" or \"either\"");
  }
  if (doc.contains("op")) spec.op = require_string(doc["op"], "op");
  if (doc.contains("expr")) spec.expr = require_string(doc["expr"], "expr");
  if (doc.contains("generators")) {
    const json& g = doc["generators"];
    if (!g.is_array()) invalid("generators", "expected an array of names");
    for (std::size_t k = 0; k < g.size(); ++k) {
      std::string name = require_string(g[k], "generators[" + std::to_string(k) + "]");
      parse_generator(spec.lambda, name);
      spec.generators.push_back(name);
    }
  }
  if (doc.contains("start")) spec.start = LatticeState(parse_coords(doc["start"], "start"));
  if (doc.contains("target")) spec.target = LatticeState(parse_coords(doc["target"], "target"));
  if (doc.contains("walk")) spec.walk = require_string(doc["walk"], "walk");
  return spec;
}

json point_to_json(const EvalPoint& v) {
  json out = json::object();
  const Composition& lambda = v.lambda();
  for (int a = 0; a < lambda.size(); ++a) {
    Index idx = lambda.index(a);
    const PointValue& pv = v.value(a);
    out[std::to_string(idx.row) + "," + std::to_string(idx.col)] = {{"tag", pv.tag},
                                                                     {"offset", render_rational(pv.offset)}};
  }
  return out;
}

const std::vector<std::string>& job_commands() {
  static const std::vector<std::string> commands = {"apply", "check-relations", "ddiff-compare", "basis", "action",
                                                    "blocks", "graph", "walk", "probe"};
  return commands;
}

std::string run_job(const std::string& command, const JobSpec& spec) {
  if (command != "walk" && spec.lambda.rows() == 0) throw ValidationError(command + ": lambda is required");
  if (command == "apply") return run_apply(spec);
  if (command == "check-relations") return run_check_relations(spec);
  if (command == "ddiff-compare") return run_ddiff_compare(spec);
  if (command == "basis") return run_basis(spec);
  if (command == "action") return run_action(spec);
  if (command == "blocks") return run_blocks(spec);
  if (command == "graph") return run_graph(spec);
  if (command == "walk") return run_walk(spec);
  if (command == "probe") return run_probe(spec);
  throw ValidationError("unknown command \"" + command + "\"");
}

int exit_code_for(const Error& e) {
  const std::string& k = e.kind();
  return k == "ValidationError" || k == "ParseError" || k == "NameError" ? 2 : 3;
}

json error_json(const Error& e) {
  json body = {{"kind", e.kind()}, {"message", e.what()}, {"exit_code", exit_code_for(e)}};
  if (const auto* p = dynamic_cast<const ParseError*>(&e)) body["position"] = p->position();
  return {{"error", body}};
}

}  // namespace gzkit
