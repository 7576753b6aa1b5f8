#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gzkit/errors.hpp"
#include "gzkit/jobs.hpp"

using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

json int_list(const std::string& flag, const std::string& text) {
  json out = json::array();
  for (const std::string& item : split(text, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size())
      throw gzkit::ValidationError(flag + ": expected comma-separated integers, got \"" + text + "\"");
    out.push_back(v);
  }
  return out;
}

json load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gzkit::ValidationError("cannot read spec file " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw gzkit::ValidationError(path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orthogonal Gelfand-Zeitlin algebra toolkit"};
  app.require_subcommand(1);

  std::string spec_path, out_path, lambda, tags, op, expr, edge_rule, start, target, walk, generators;
  std::optional<int> radius, degree;

  for (const std::string& name : gzkit::job_commands()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--spec", spec_path, "JSON job spec");
    sub->add_option("--out", out_path, "write the result here instead of stdout");
    sub->add_option("--lambda", lambda, "composition, e.g. 2,1");
    sub->add_option("--tags", tags, "parameter tag per coordinate, offsets zero");
    sub->add_option("--radius", radius);
    sub->add_option("--degree", degree);
    sub->add_option("--edge-rule", edge_rule)->check(CLI::IsMember({"both", "either"}));
    if (name == "apply") {
      sub->add_option("--op", op);
      sub->add_option("--expr", expr);
    }
    if (name == "action") sub->add_option("--generators", generators, "comma-separated names");
    if (name == "walk") {
      sub->add_option("--start", start);
      sub->add_option("--target", target);
      sub->add_option("--walk", walk, "arrow notation to validate");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  std::string command = app.get_subcommands().front()->get_name();

  try {
    json doc = spec_path.empty() ? json::object() : load_spec(spec_path);
    if (!lambda.empty()) doc["lambda"] = int_list("--lambda", lambda);
    if (!tags.empty()) {
      if (!doc.contains("lambda")) throw gzkit::ValidationError("--tags needs a lambda");
      json list = int_list("--tags", tags);
      json point = json::object();
      std::size_t k = 0;
      for (std::size_t i = 0; i < doc["lambda"].size(); ++i)
        for (long j = 1; j <= doc["lambda"][i].get<long>(); ++j, ++k) {
          if (k >= list.size()) throw gzkit::ValidationError("--tags: too few tags for lambda");
          point[std::to_string(i + 1) + "," + std::to_string(j)] = {{"tag", list[k]}, {"offset", "0"}};
        }
      if (k != list.size()) throw gzkit::ValidationError("--tags: too many tags for lambda");
      doc["point"] = point;
    }
    if (radius) doc["radius"] = *radius;
    if (degree) doc["degree"] = *degree;
    if (!edge_rule.empty()) doc["edge_rule"] = edge_rule;
    if (!op.empty()) doc["op"] = op;
    if (!expr.empty()) doc["expr"] = expr;
    if (!generators.empty()) doc["generators"] = split(generators, ',');
    if (!start.empty()) doc["start"] = int_list("--start", start);
    if (!target.empty()) doc["target"] = int_list("--target", target);
    if (!walk.empty()) doc["walk"] = walk;

    gzkit::JobSpec spec = gzkit::parse_job_spec(doc);
    std::string result = gzkit::run_job(command, spec);
    if (out_path.empty()) {
      std::cout << result;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw gzkit::ValidationError("cannot write " + out_path);
      out << result;
    }
    return 0;
  } catch (const gzkit::Error& e) {
    std::cerr << gzkit::error_json(e).dump() << "\n";
    return gzkit::exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << json{{"error", {{"kind", "InternalError"}, {"message", e.what()}, {"exit_code", 3}}}}.dump() << "\n";
    return 3;
  }
}
