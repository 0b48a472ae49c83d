#include "locoh/runner.hpp"

#include <bit>
#include <chrono>

#include "locoh/bass.hpp"
#include "locoh/instances.hpp"
#include "locoh/lyubeznik.hpp"
#include "locoh/reduction.hpp"
#include "locoh/resolutions.hpp"
#include "locoh/seqcm.hpp"

namespace locoh {

using nlohmann::json;

namespace {

Field parse_field(const std::string& s) {
  if (s == "Q") return Field::rationals();
  if (s.size() >= 2 && s[0] == 'F') {
    long p = 0;
    try {
      p = std::stol(s.substr(1));
    } catch (...) {
      throw Error("field must be 'Q' or 'Fp' with p prime, got '" + s + "'");
    }
    if (!is_prime(p)) throw Error("field characteristic must be prime, got '" + s + "'");
    return Field::prime(p);
  }
  throw Error("field must be 'Q' or 'Fp' with p prime, got '" + s + "'");
}

MonomialIdeal ideal_from_strings(const PolyRingContext& ring, const std::vector<std::string>& gens) {
  std::vector<Expo> es;
  for (const auto& s : gens) es.push_back(parse_monomial(ring, s));
  return MonomialIdeal::make(ring, std::move(es));
}

json window_to_json(const std::vector<std::pair<std::vector<int>, int>>& window) {
  json out = json::array();
  for (const auto& [deg, dim] : window) out.push_back({{"degree", deg}, {"dim", dim}});
  return out;
}

json table_to_json(const LyubeznikTable& t) {
  json rows = json::array();
  for (const auto& row : t.lambda) rows.push_back(row);
  return rows;
}

struct Instance {
  AmbientQuotient ambient;
  MonomialIdeal ideal;
};

Instance build_instance(const JobSpec& spec) {
  PolyRingContext ring = spec.ring();
  MonomialIdeal ideal = ideal_from_strings(ring, spec.ideal);
  MonomialIdeal relations =
      spec.quotient.empty() ? MonomialIdeal::zero(ring) : ideal_from_strings(ring, spec.quotient);
  AmbientQuotient amb =
      relations.is_zero() ? AmbientQuotient::polynomial(ring) : AmbientQuotient::make(ring, relations);
  return {amb, ideal};
}

json ambient_to_json(const AmbientQuotient& a) {
  return {{"vars", a.ring.names}, {"relations", a.relations.format()}};
}

json run_lyubeznik(const Instance& in, const JobSpec&, const EngineOptions& opt) {
  if (!in.ambient.polynomial_like()) throw Error("lyubeznik: polynomial ambient required");
  LyubeznikTable t = lyubeznik_table(in.ideal, opt);
  return {{"d", t.d},
          {"table", table_to_json(t)},
          {"euler", t.euler_characteristic()},
          {"trivial", t.is_trivial()},
          {"text", t.render_text()}};
}

json run_cd(const Instance& in, const JobSpec&, const EngineOptions& opt) {
  return {{"cd", cohomological_dimension(in.ambient, in.ideal, opt)}};
}

json run_ann(const Instance& in, const JobSpec& spec, const EngineOptions& opt) {
  int c = spec.options.contains("i") ? spec.options.at("i").get<int>()
                                     : cohomological_dimension(in.ambient, in.ideal, opt);
  WindowedModule n = windowed_module(in.ambient, in.ideal, c, opt);
  if (n.is_zero()) return {{"i", c}, {"module_is_zero", true}};
  MonomialIdeal ann = annihilator(n);
  return {{"i", c}, {"module_is_zero", false}, {"annihilator", ann.format()}, {"is_zero_ideal", ann.is_zero()}};
}

json run_reduce(const Instance& in, const JobSpec&, const EngineOptions& opt) {
  ReductionTrace tr = reduce(in.ambient, in.ideal, opt);
  json steps = json::array();
  for (const auto& s : tr.steps) {
    steps.push_back({{"variable", s.variable},
                     {"c", s.c},
                     {"ambient_before", ambient_to_json(s.ambient_before)},
                     {"ambient_after", ambient_to_json(s.ambient_after)},
                     {"ideal_before", s.ideal_before.format()},
                     {"ideal_after", s.ideal_after.format()},
                     {"window_before", window_to_json(s.window_before)},
                     {"window_after", window_to_json(s.window_after)}});
  }
  return {{"c", tr.c},
          {"steps", steps},
          {"final", {{"ambient", ambient_to_json(tr.final_ambient)}, {"ideal", tr.final_ideal.format()}}},
          {"termination", tr.termination}};
}

json run_seqcm(const Instance& in, const JobSpec& spec, const EngineOptions&) {
  if (!in.ambient.polynomial_like()) throw Error("seqcm: polynomial ambient required");
  if (spec.options.contains("level")) {
    int level = spec.options.at("level").get<int>();
    return {{"level", level}, {"partially_scm", is_partially_scm(in.ideal, level)}};
  }
  json out = {{"sequentially_cm", is_sequentially_cm(in.ideal)}};
  if (in.ideal.is_squarefree()) out["duval"] = duval_cross_check(in.ideal);
  return out;
}

json run_filtration(const Instance& in, const JobSpec&, const EngineOptions&) {
  if (!in.ambient.polynomial_like()) throw Error("filtration: polynomial ambient required");
  DimensionFiltration f = dimension_filtration(in.ideal);
  json levels = json::array();
  for (int k = -1; k <= f.d; ++k)
    levels.push_back({{"k", k}, {"ideal", f.u(k).format()}, {"is_unit", f.u(k).is_unit()}});
  return {{"d", f.d}, {"levels", levels}};
}

json run_shapes(const Instance& in, const JobSpec&, const EngineOptions& opt) {
  if (!in.ambient.polynomial_like()) throw Error("shapes: polynomial ambient required");
  LyubeznikTable t = lyubeznik_table(in.ideal, opt);
  json iscm = json::array();
  for (int i = 0; i <= t.d; ++i) iscm.push_back(t.shape_matches_iscm(i));
  json out = {{"d", t.d}, {"table", table_to_json(t)}, {"trivial", t.is_trivial()}, {"iscm_shape", iscm}};
  if (t.d == 2) out["pure_dim2"] = t.pure_dim2_shape();
  return out;
}

struct CheckList {
  json checks = json::array();
  int failures = 0;

  void add(const std::string& name, bool ok, const std::string& detail = "") {
    checks.push_back({{"name", name}, {"status", ok ? "pass" : "fail"}, {"detail", detail}});
    if (!ok) ++failures;
  }
  void skip(const std::string& name, const std::string& why) {
    checks.push_back({{"name", name}, {"status", "skip"}, {"detail", why}});
  }
};

json run_verify_all(const Instance& in, const JobSpec&, const EngineOptions& opt, int* exit_code) {
  CheckList cl;
  const MonomialIdeal& ideal = in.ideal;
  const AmbientQuotient& amb = in.ambient;
  int n = amb.ring.n();

  if (amb.polynomial_like() && ideal.is_squarefree()) {
    int d = dimension(ideal);
    LyubeznikTable t = lyubeznik_table(ideal, opt);
    cl.add("euler-formula", t.euler_characteristic() == 1);
    if (d == 1)
      cl.add("trivial-table-dim1", t.is_trivial());
    else
      cl.skip("trivial-table-dim1", "dim R/I != 1");

    int c = cohomological_dimension(amb, ideal, opt);
    cl.add("cd-equals-pd", c == pd(ideal));

    bool hoch_ok = true;
    std::vector<int> beta = betti_numbers(ideal);
    for (int p = 0; p + 1 <= n && hoch_ok; ++p) {
      long total = 0;
      for (uint32_t sigma = 0; sigma < (1u << n); ++sigma) total += hochster_betti(ideal, p, sigma);
      if (total != beta[static_cast<size_t>(p + 1)]) hoch_ok = false;
    }
    cl.add("betti-taylor-vs-hochster", hoch_ok);

    WindowedModule top = windowed_module(amb, ideal, c, opt);  // construction samples straightness
    cl.add("straightness-sampling", true);
    bass_numbers(top, ScanBox{}, opt);  // boundary contributions assert inside
    cl.add("bass-boundary-zero", true);

    cl.add("duval-agreement", is_sequentially_cm(ideal) == duval_cross_check(ideal));

    bool iscm_ok = true;
    for (int i = 0; i <= d; ++i)
      if (is_partially_scm(ideal, i) && !t.shape_matches_iscm(i)) iscm_ok = false;
    cl.add("iscm-shape", iscm_ok);

    SimplicialComplex delta = to_complex(ideal);
    if (d == 2 && delta.is_pure() && delta.dim() == 1) {
      bool shape = t.pure_dim2_shape() && t.lambda[0][1] == delta.components() - 1;
      cl.add("pure-dim2-shape", shape);
      WindowedModule penult = windowed_module(amb, ideal, n - 1, opt);
      cl.add("support-at-maximal", supported_only_at_max(penult));
    } else {
      cl.skip("pure-dim2-shape", "not a pure graph complex");
      cl.skip("support-at-maximal", "not pure of dimension 2");
    }

    uint32_t covered = 0;
    for (uint32_t p : minimal_primes(ideal)) covered |= p;
    uint32_t free_vars = ((1u << n) - 1) & ~covered;
    int g = height(ideal);
    if (is_cm_ring(ideal) && pd(ideal) == g && free_vars != 0) {
      int y = std::countr_zero(free_vars);
      WindowedModule hg = windowed_module(amb, ideal, g, opt);
      auto [h0, h1] = h0_h1_principal(hg, y);
      MonomialIdeal iy = sum(ideal, MonomialIdeal::from_vars(amb.ring, 1u << y));
      std::vector<int> other = window_piece_dims(amb, iy, g + 1, opt);
      bool ok = h1 == other;
      for (int v : h0)
        if (v != 0) ok = false;
      cl.add("grade-identity", ok);
    } else {
      cl.skip("grade-identity", "needs a CM ideal with pd = height and a free variable");
    }
  } else if (amb.polynomial_like()) {
    DimensionFiltration f = dimension_filtration(ideal);
    bool dims_ok = true;
    for (int k = 0; k <= f.d; ++k) {
      if (f.u(k) == f.u(k - 1)) continue;
      MonomialIdeal ann = colon(f.u(k - 1), f.u(k));
      if (ann.is_unit() || dimension(ann) != k) dims_ok = false;
    }
    cl.add("filtration-quotient-dims", dims_ok);
    cl.add("filtration-telescopes", f.u(-1) == ideal);
  }

  if (!ideal.is_zero() && ideal.is_proper()) {
    ReductionTrace tr = reduce(in.ambient, ideal, opt);  // step invariants assert inside
    cl.add("reduction-invariance", true, "steps: " + std::to_string(tr.steps.size()));
    cl.add("ann-principal", ann_principal_check(in.ambient, ideal, opt));
    cl.add("q-containment", q_containment_check(in.ambient, ideal, opt));

    // a parameter variable in the annihilator would force the top module to
    // vanish, so a nonzero top module must avoid them all
    WindowedModule top = windowed_module(amb, ideal, amb.dim(), opt);
    if (top.is_zero()) {
      cl.skip("parameter-vanishing", "top local cohomology is zero");
    } else {
      MonomialIdeal ann = annihilator(top);
      bool ok = true;
      for (int v = 0; v < n; ++v) {
        MonomialIdeal va = MonomialIdeal::from_vars(amb.ring, 1u << v);
        int dim_av = amb.relations.is_zero() ? n - 1 : dimension(sum(amb.relations, va));
        if (dim_av != amb.dim() - 1) continue;  // not a parameter
        Expo ev(static_cast<size_t>(n), 0);
        ev[static_cast<size_t>(v)] = 1;
        if (ann.contains(ev)) ok = false;
      }
      cl.add("parameter-vanishing", ok);
    }
  }

  if (exit_code && cl.failures > 0) *exit_code = 3;
  return {{"checks", cl.checks}, {"failures", cl.failures}};
}

}  // namespace

json JobSpec::to_json() const {
  json j = {{"vars", vars}, {"field", field.name()}, {"ideal", ideal}, {"cmd", cmd}};
  if (!quotient.empty()) j["quotient"] = quotient;
  if (!options.is_null() && !options.empty()) j["options"] = options;
  return j;
}

JobSpec job_from_json(const json& j) {
  JobSpec spec;
  if (!j.contains("vars") || !j.at("vars").is_array() || j.at("vars").empty())
    throw Error("job: 'vars' must be a non-empty array of variable names");
  spec.vars = j.at("vars").get<std::vector<std::string>>();
  spec.field = parse_field(j.value("field", std::string("Q")));
  if (j.contains("quotient")) spec.quotient = j.at("quotient").get<std::vector<std::string>>();
  if (!j.contains("ideal")) throw Error("job: missing 'ideal'");
  spec.ideal = j.at("ideal").get<std::vector<std::string>>();
  if (!j.contains("cmd")) throw Error("job: missing 'cmd'");
  spec.cmd = j.at("cmd").get<std::string>();
  spec.options = j.value("options", json::object());
  // validate the ring and every monomial now, not at dispatch time
  PolyRingContext ring = spec.ring();
  for (const auto& s : spec.ideal) parse_monomial(ring, s);
  for (const auto& s : spec.quotient) parse_monomial(ring, s);
  return spec;
}

JobSpec parse_job(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    size_t byte = e.byte;
    size_t line = 1, col = 1;
    for (size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error("job parse error at line " + std::to_string(line) + ", column " + std::to_string(col) +
                ": " + e.what());
  }
  return job_from_json(j);
}

RunOutcome run_job(const JobSpec& spec, const EngineOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  Instance in = build_instance(spec);
  json results;
  int exit_code = 0;
  if (spec.cmd == "lyubeznik")
    results = run_lyubeznik(in, spec, opt);
  else if (spec.cmd == "cd")
    results = run_cd(in, spec, opt);
  else if (spec.cmd == "ann")
    results = run_ann(in, spec, opt);
  else if (spec.cmd == "reduce")
    results = run_reduce(in, spec, opt);
  else if (spec.cmd == "seqcm")
    results = run_seqcm(in, spec, opt);
  else if (spec.cmd == "filtration")
    results = run_filtration(in, spec, opt);
  else if (spec.cmd == "shapes")
    results = run_shapes(in, spec, opt);
  else if (spec.cmd == "verify-all")
    results = run_verify_all(in, spec, opt, &exit_code);
  else
    throw Error("unknown command '" + spec.cmd + "'");
  auto stop = std::chrono::steady_clock::now();
  long ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  RunOutcome out;
  out.report = {{"engine_version", kEngineVersion},
                {"field", spec.field.name()},
                {"command", spec.to_json()},
                {"timing_ms", ms},
                {"results", results}};
  out.exit_code = exit_code;
  return out;
}

JobSpec random_job(const std::string& kind, int n, uint64_t seed, const Field& f, const std::string& cmd) {
  MonomialIdeal i = random_instance(instance_kind_from_string(kind), n, seed, f);
  JobSpec spec;
  spec.vars = i.ring.names;
  spec.field = f;
  spec.ideal = i.format();
  spec.cmd = cmd.empty() ? "verify-all" : cmd;
  spec.options = json::object();
  return spec;
}

}  // namespace locoh
