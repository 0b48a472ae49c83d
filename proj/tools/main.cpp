#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "locoh/runner.hpp"

namespace {

int env_workers() {
  const char* w = std::getenv("LOCOH_WORKERS");
  if (!w) return 1;
  int v = std::atoi(w);
  return v >= 1 ? v : 1;
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw locoh::Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void print_text_report(const nlohmann::json& report) {
  const auto& res = report.at("results");
  if (res.contains("text")) {
    std::cout << res.at("text").get<std::string>();
    return;
  }
  if (res.contains("checks")) {
    for (const auto& c : res.at("checks"))
      std::cout << c.at("status").get<std::string>() << "  " << c.at("name").get<std::string>() << "\n";
    return;
  }
  std::cout << res.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"local cohomology invariants of monomial ideals"};
  app.require_subcommand(1);

  std::string job_path = "-";
  std::string field_override;
  int workers = env_workers();
  bool text = false;
  std::vector<int> scan_box;
  uint64_t check_seed = 0xC0FFEEULL;

  CLI::App* run = app.add_subcommand("run", "run a JSON job from a file or stdin");
  run->add_option("job", job_path, "job file (default: stdin)");
  run->add_option("--field", field_override, "override the coefficient field (Q or Fp)");
  run->add_option("--workers", workers, "worker pool size for degree scans");
  run->add_option("--scan-box", scan_box, "Bass scan box lo hi (default -2 1)")->expected(2);
  run->add_option("--seed", check_seed, "seed for the engine's sampling checks");
  run->add_flag("--text", text, "human-readable output where available");

  std::string kind = "squarefree", rcmd = "verify-all";
  int rn = 5;
  uint64_t rseed = 1;
  std::string rfield = "Q";
  CLI::App* rnd = app.add_subcommand("random", "emit a reproducible random JobSpec");
  rnd->add_option("--kind", kind, "squarefree | pure-graph | dim1 | general-monomial");
  rnd->add_option("--n", rn, "number of variables (<= 8)");
  rnd->add_option("--seed", rseed, "generator seed");
  rnd->add_option("--field", rfield, "coefficient field");
  rnd->add_option("--cmd", rcmd, "command to embed in the emitted job");

  CLI11_PARSE(app, argc, argv);

  try {
    if (rnd->parsed()) {
      locoh::Field f = rfield == "Q" ? locoh::Field::rationals() : locoh::Field::prime(std::stol(rfield.substr(1)));
      locoh::JobSpec spec = locoh::random_job(kind, rn, rseed, f, rcmd);
      std::cout << spec.to_json().dump(2) << "\n";
      return 0;
    }
    locoh::JobSpec spec = locoh::parse_job(read_input(job_path));
    if (!field_override.empty()) {
      nlohmann::json j = spec.to_json();
      j["field"] = field_override;
      spec = locoh::job_from_json(j);
    }
    locoh::EngineOptions opt;
    opt.workers = workers;
    opt.check_seed = check_seed;
    if (scan_box.size() == 2) {
      opt.scan_lo = scan_box[0];
      opt.scan_hi = scan_box[1];
    }
    locoh::RunOutcome out = locoh::run_job(spec, opt);
    if (text)
      print_text_report(out.report);
    else
      std::cout << out.report.dump(2) << "\n";
    return out.exit_code;
  } catch (const locoh::Error& e) {
    nlohmann::json err = {{"error", {{"kind", "engine"}, {"message", e.what()}}}};
    std::cerr << err.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    nlohmann::json err = {{"error", {{"kind", "internal"}, {"message", e.what()}}}};
    std::cerr << err.dump(2) << "\n";
    return 2;
  }
}
