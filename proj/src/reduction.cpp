#include "locoh/reduction.hpp"

#include <bit>

#include "locoh/resolutions.hpp"

namespace locoh {

namespace {

std::vector<std::pair<std::vector<int>, int>> nonzero_window(const WindowedModule& n) {
  std::vector<std::pair<std::vector<int>, int>> out;
  for (long code = 0; code < static_cast<long>(n.pieces.size()); ++code)
    if (n.dim_at_code(code) > 0) out.emplace_back(window_decode(code, n.m), n.dim_at_code(code));
  return out;
}

MonomialIdeal ideal_plus_relations(const AmbientQuotient& a, const MonomialIdeal& i) {
  return a.relations.is_zero() ? i : sum(i, a.relations);
}

// Sigma over the ambient: variables outside every minimal prime of I + J.
uint32_t sigma_mask(const AmbientQuotient& a, const MonomialIdeal& i) {
  return sigma_set(i, a.relations).allowed_variables;
}

// Across a quotient step the window pieces at beta_r = 0 must be unchanged
// and the pieces at beta_r = -1 must have been zero (r annihilates).
void check_step_invariance(const WindowedModule& before, const WindowedModule& after, int var) {
  int m = before.m;
  for (long code = 0; code < static_cast<long>(before.pieces.size()); ++code) {
    std::vector<int> beta = window_decode(code, m);
    int level = beta[static_cast<size_t>(var)];
    if (level == -1 && before.dim_at_code(code) != 0)
      throw Error("reduction: annihilated module has a piece below the wall");
    if (level != 0) continue;
    std::vector<int> sub;
    for (int j = 0; j < m; ++j)
      if (j != var) sub.push_back(beta[static_cast<size_t>(j)]);
    if (before.dim_at_code(code) != after.dim_at_code(window_code(sub)))
      throw Error("reduction: piece dimensions changed across the quotient step");
  }
}

}  // namespace

ReductionTrace reduce(const AmbientQuotient& ambient0, const MonomialIdeal& ideal0, const EngineOptions& opt) {
  AmbientQuotient a = ambient0;
  MonomialIdeal i = ideal0;
  ReductionTrace trace;
  trace.c = cohomological_dimension(a, i, opt);

  while (true) {
    int c = cohomological_dimension(a, i, opt);
    if (c != trace.c) throw Error("reduction: cohomological dimension changed along the trace");
    WindowedModule n = windowed_module(a, i, c, opt);
    MonomialIdeal ann = annihilator(n);
    if (ann.is_zero()) {
      trace.termination = "annihilator is zero";
      break;
    }
    uint32_t sigma = sigma_mask(a, i);
    std::vector<int> var_candidates;
    bool monomial_candidate = false;
    for (const auto& g : ann.gens) {
      uint32_t sup = support_mask(g);
      if (sup & ~sigma) continue;
      monomial_candidate = true;
      if (std::popcount(sup) == 1 && g[static_cast<size_t>(std::countr_zero(sup))] == 1)
        var_candidates.push_back(std::countr_zero(sup));
    }
    if (var_candidates.empty()) {
      trace.termination = monomial_candidate
                              ? "sigma-annihilator monomials exist but none is a variable"
                              : "annihilator meets sigma only in zero";
      break;
    }
    int var = *std::min_element(var_candidates.begin(), var_candidates.end());

    ReductionStep step;
    step.variable = a.ring.names[static_cast<size_t>(var)];
    step.ambient_before = a;
    step.ideal_before = i;
    step.c = c;
    step.window_before = nonzero_window(n);

    int dim_before = a.dim();
    VariableQuotient q = quotient_by_variable(a, i, var);
    if (q.ideal.is_zero()) throw Error("reduction: ideal became zero after the quotient");
    WindowedModule after = windowed_module(q.ambient, q.ideal, c, opt);
    check_step_invariance(n, after, var);
    // One variable leaves the ring per step; the Krull dimension drops by one
    // unless r sits inside a top-dimensional minimal prime of the ambient
    // (as happens at the second step of the xyz/xyw example), so only
    // monotonicity is asserted.
    if (q.ambient.dim() > dim_before) throw Error("reduction: ambient dimension increased");

    step.ambient_after = q.ambient;
    step.ideal_after = q.ideal;
    step.window_after = nonzero_window(after);
    trace.steps.push_back(std::move(step));

    a = q.ambient;
    i = q.ideal;
  }
  trace.final_ambient = a;
  trace.final_ideal = i;
  return trace;
}

bool main1_hypotheses(const AmbientQuotient& a, const MonomialIdeal& i, const EngineOptions& opt) {
  if (i.is_zero() || !i.is_proper()) throw Error("main1: ideal must be nonzero and proper");
  if (!is_cm_ring(a.relations)) return false;
  MonomialIdeal total = ideal_plus_relations(a, i);
  if (total.is_unit()) return false;
  int t = dimension(total);
  if (t < 2) return false;
  int c = cohomological_dimension(a, i, opt);
  if (c != a.dim() - (t - 1)) return false;
  WindowedModule n = windowed_module(a, i, c, opt);
  MonomialIdeal ann = annihilator(n);
  if (ann.is_zero()) return false;
  uint32_t sigma = sigma_mask(a, i);
  for (const auto& g : ann.gens)
    if ((support_mask(g) & ~sigma) == 0) return true;
  return false;
}

bool ann_principal_check(const AmbientQuotient& a, const MonomialIdeal& i, const EngineOptions& opt) {
  if (!main1_hypotheses(a, i, opt)) return true;
  int c = cohomological_dimension(a, i, opt);
  MonomialIdeal ann = annihilator(windowed_module(a, i, c, opt));
  if (ann.gens.size() != 1) return false;
  return (support_mask(ann.gens[0]) & ~sigma_mask(a, i)) == 0;
}

bool q_containment_check(const AmbientQuotient& a, const MonomialIdeal& i, const EngineOptions& opt) {
  if (i.is_zero() || !i.is_proper()) throw Error("q_containment: ideal must be nonzero and proper");
  MonomialIdeal total = ideal_plus_relations(a, i);
  if (total.is_unit()) return true;
  uint32_t covered = 0;
  for (uint32_t p : minimal_primes(total)) covered |= p;
  uint32_t free_vars = ((1u << a.ring.n()) - 1) & ~covered;
  if (free_vars == 0) return true;  // no admissible variable: vacuous
  int y = std::countr_zero(free_vars);

  int c = cohomological_dimension(a, i, opt);
  MonomialIdeal ann = annihilator(windowed_module(a, i, c, opt));
  if (ann.is_zero()) return true;

  VariableQuotient q = quotient_by_variable(a, i, y);
  if (q.ideal.is_zero()) return true;  // I vanishes in A/yA: Q is the whole module
  MonomialIdeal qi = q_ideal(q.ideal, q.ambient.relations);
  uint32_t keep = ((1u << a.ring.n()) - 1) & ~(1u << y);
  MonomialIdeal ann_image = project_to_vars(ann, keep, q.ambient.ring);
  for (const auto& g : ann_image.gens)
    if (!qi.is_unit() && !qi.contains(g)) return false;
  return true;
}

}  // namespace locoh
