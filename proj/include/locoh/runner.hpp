#ifndef LOCOH_RUNNER_HPP
#define LOCOH_RUNNER_HPP

#include <string>

#include <json.hpp>

#include "locoh/cech.hpp"

namespace locoh {

inline constexpr const char* kEngineVersion = "0.1.0";

/// A parsed job: ring, optional quotient relations, ideal, command.
struct JobSpec {
  std::vector<std::string> vars;
  Field field;
  std::vector<std::string> quotient;  // monomial strings, may be empty
  std::vector<std::string> ideal;
  std::string cmd;
  nlohmann::json options;  // free-form per-command options

  PolyRingContext ring() const { return PolyRingContext(field, vars); }
  nlohmann::json to_json() const;
};

JobSpec parse_job(const std::string& text);
JobSpec job_from_json(const nlohmann::json& j);

struct RunOutcome {
  nlohmann::json report;
  int exit_code = 0;  // 0 ok, 3 verification failure (engine errors throw)
};

/// Dispatches a job to the engine and assembles the deterministic report.
RunOutcome run_job(const JobSpec& spec, const EngineOptions& opt);

/// Builds a JobSpec for a seeded random instance of the given family.
JobSpec random_job(const std::string& kind, int n, uint64_t seed, const Field& f, const std::string& cmd);

}  // namespace locoh

#endif
