#ifndef GZKIT_JOBS_HPP
#define GZKIT_JOBS_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gzkit/gzmod.hpp"
#include "gzkit/latwalk.hpp"

namespace gzkit {

struct JobSpec {
  Composition lambda;
  std::optional<EvalPoint> point;
  int radius = 2;
  int degree = 0;  // 0: start at max lambda_i
  EdgeRule edge_rule = EdgeRule::Both;
  std::string op;                       // apply
  std::string expr;                     // apply
  std::vector<std::string> generators;  // action; empty means all
  std::optional<LatticeState> start;    // walk
  std::optional<LatticeState> target;   // walk
  std::string walk;                     // walk, arrow notation to validate
};

// Throws ValidationError (or ParseError/NameError for embedded text) on any
// deviation from schemas/jobspec.schema.json.
JobSpec parse_job_spec(const nlohmann::json& doc);
nlohmann::json point_to_json(const EvalPoint& v);

const std::vector<std::string>& job_commands();

// Output text of a job; JSON documents end with a newline.
std::string run_job(const std::string& command, const JobSpec& spec);

// Exit code for an error: 2 for invalid input, 3 for kernel failures.
int exit_code_for(const Error& e);
nlohmann::json error_json(const Error& e);

}  // namespace gzkit

#endif
