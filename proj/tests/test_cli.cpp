#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "locoh/instances.hpp"
#include "locoh/runner.hpp"

using namespace locoh;
using nlohmann::json;

TEST_CASE("job parsing round trip") {
  std::string text = R"({
    "vars": ["x", "y"],
    "field": "Q",
    "ideal": ["x"],
    "cmd": "lyubeznik"
  })";
  JobSpec spec = parse_job(text);
  CHECK(spec.vars == std::vector<std::string>{"x", "y"});
  CHECK(spec.field.rational());
  JobSpec again = job_from_json(spec.to_json());
  CHECK(again.to_json() == spec.to_json());
}

TEST_CASE("job validation errors") {
  CHECK_THROWS_WITH_AS(parse_job(R"({"vars":["x1","x2","x3","x4"],"ideal":["x5"],"cmd":"cd"})"),
                       doctest::Contains("unknown variable"), Error);
  CHECK_THROWS_WITH_AS(parse_job(R"({"vars":["x"],"field":"F4","ideal":["x"],"cmd":"cd"})"),
                       doctest::Contains("prime"), Error);
  CHECK_THROWS_WITH_AS(parse_job("{\"vars\": [\n  \"x\",]}"), doctest::Contains("line"), Error);
  CHECK_THROWS_AS(parse_job(R"({"vars":["x"],"ideal":["x"]})"), Error);  // missing cmd
  CHECK_THROWS_AS(parse_job(R"({"vars":["x"],"cmd":"cd"})"), Error);     // missing ideal
}

TEST_CASE("lyubeznik command on the skew lines") {
  std::string text = R"({
    "vars": ["x1","x2","x3","x4"], "field": "Q",
    "ideal": ["x1*x2","x1*x4","x2*x3","x3*x4"], "cmd": "lyubeznik"
  })";
  RunOutcome out = run_job(parse_job(text), EngineOptions{});
  CHECK(out.exit_code == 0);
  const json& res = out.report.at("results");
  CHECK(res.at("d") == 2);
  CHECK(res.at("table") == json::parse("[[0,1,0],[0,0,0],[0,0,2]]"));
  CHECK(res.at("euler") == 1);
  CHECK(out.report.at("engine_version") == kEngineVersion);
  CHECK(out.report.at("field") == "Q");
}

TEST_CASE("reduce command on the quotient example") {
  std::string text = R"({
    "vars": ["x","y","z","w"], "field": "Q",
    "quotient": ["x*y*z","x*y*w"],
    "ideal": ["x","y"], "cmd": "reduce"
  })";
  RunOutcome out = run_job(parse_job(text), EngineOptions{});
  const json& res = out.report.at("results");
  CHECK(res.at("c") == 2);
  REQUIRE(res.at("steps").size() == 2);
  CHECK(res.at("steps")[0].at("variable") == "z");
  CHECK(res.at("steps")[1].at("variable") == "w");
  CHECK(res.at("final").at("ambient").at("vars") == json::parse(R"(["x","y"])"));
  CHECK(res.at("final").at("ideal") == json::parse(R"(["x","y"])"));
}

TEST_CASE("seqcm command levels") {
  std::string base = R"({
    "vars": ["x1","x2","x3","x4","x5"], "field": "Q",
    "ideal": ["x1^2*x2","x1^2*x3","x1*x2*x4","x1*x2*x5","x1*x3*x4","x1*x3*x5"],
    "cmd": "seqcm", "options": {"level": 3}
  })";
  JobSpec spec = parse_job(base);
  RunOutcome out = run_job(spec, EngineOptions{});
  CHECK(out.report.at("results").at("partially_scm") == true);
  spec.options["level"] = 2;
  RunOutcome out2 = run_job(spec, EngineOptions{});
  CHECK(out2.report.at("results").at("partially_scm") == false);
}

TEST_CASE("ann and cd commands") {
  std::string text = R"({
    "vars": ["x","y","z","w"], "field": "Q",
    "quotient": ["x*y*z","x*y*w"],
    "ideal": ["x","y"], "cmd": "ann"
  })";
  RunOutcome out = run_job(parse_job(text), EngineOptions{});
  CHECK(out.report.at("results").at("i") == 2);
  CHECK(out.report.at("results").at("annihilator") == json::parse(R"(["z","w"])"));

  JobSpec cd = parse_job(text);
  cd.cmd = "cd";
  CHECK(run_job(cd, EngineOptions{}).report.at("results").at("cd") == 2);
}

TEST_CASE("filtration command") {
  std::string text = R"({
    "vars": ["x","y"], "field": "Q",
    "ideal": ["x*y"], "cmd": "filtration"
  })";
  RunOutcome out = run_job(parse_job(text), EngineOptions{});
  const json& levels = out.report.at("results").at("levels");
  REQUIRE(levels.size() == 3);  // k = -1, 0, 1
  CHECK(levels[2].at("is_unit") == true);
}

TEST_CASE("verify-all passes on the skew lines") {
  std::string text = R"({
    "vars": ["x1","x2","x3","x4"], "field": "Q",
    "ideal": ["x1*x2","x1*x4","x2*x3","x3*x4"], "cmd": "verify-all"
  })";
  RunOutcome out = run_job(parse_job(text), EngineOptions{});
  CHECK(out.exit_code == 0);
  CHECK(out.report.at("results").at("failures") == 0);
  bool saw_pass = false;
  for (const auto& c : out.report.at("results").at("checks"))
    if (c.at("status") == "pass") saw_pass = true;
  CHECK(saw_pass);
}

TEST_CASE("unknown command") {
  std::string text = R"({"vars":["x"],"ideal":["x"],"cmd":"nope"})";
  CHECK_THROWS_AS(run_job(parse_job(text), EngineOptions{}), Error);
}

TEST_CASE("random jobs are deterministic and post-verified") {
  JobSpec a = random_job("dim1", 5, 1, Field::rationals(), "lyubeznik");
  JobSpec b = random_job("dim1", 5, 1, Field::rationals(), "lyubeznik");
  CHECK(a.to_json() == b.to_json());

  for (uint64_t seed = 1; seed <= 10; ++seed) {
    MonomialIdeal d1 = random_instance(InstanceKind::Dim1, 5, seed, Field::rationals());
    CHECK(dimension(d1) == 1);
    MonomialIdeal pg = random_instance(InstanceKind::PureGraph, 6, seed, Field::rationals());
    CHECK(dimension(pg) == 2);
    SimplicialComplex c = to_complex(pg);
    CHECK(c.is_pure());
    CHECK(c.dim() == 1);
  }
  CHECK_THROWS_AS(random_instance(InstanceKind::Dim1, 9, 1, Field::rationals()), Error);
  CHECK_THROWS_AS(instance_kind_from_string("nope"), Error);
}

TEST_CASE("reports are deterministic across worker counts") {
  std::string text = R"({
    "vars": ["x1","x2","x3","x4"], "field": "F3",
    "ideal": ["x1*x2","x1*x4","x2*x3","x3*x4"], "cmd": "shapes"
  })";
  EngineOptions serial, parallel;
  serial.workers = 1;
  parallel.workers = 4;
  json a = run_job(parse_job(text), serial).report.at("results");
  json b = run_job(parse_job(text), parallel).report.at("results");
  CHECK(a == b);
}
