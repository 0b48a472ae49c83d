#include "locoh/seqcm.hpp"

#include <bit>

namespace locoh {

DimensionFiltration dimension_filtration(const MonomialIdeal& j) {
  if (!j.is_proper()) throw Error("dimension_filtration: ideal must be proper");
  if (j.is_zero()) {
    // R itself: the only component is (0), so the filtration jumps once at n.
    DimensionFiltration f;
    f.base = j;
    f.d = j.ring.n();
    f.levels.assign(static_cast<size_t>(f.d) + 2, j);
    f.levels.back() = MonomialIdeal::unit(j.ring);
    return f;
  }
  auto comps = primary_decomposition(j);
  int n = j.ring.n();
  int d = dimension(j);
  DimensionFiltration f;
  f.base = j;
  f.d = d;
  for (int k = -1; k <= d; ++k) {
    MonomialIdeal uk = MonomialIdeal::unit(j.ring);
    bool any = false;
    for (const auto& pc : comps) {
      int cd = n - std::popcount(pc.prime);
      if (cd > k) {
        uk = any ? intersect(uk, pc.component) : pc.component;
        any = true;
      }
    }
    f.levels.push_back(uk);
  }
  if (!(f.levels.front() == j))
    throw Error("dimension_filtration: primary components do not intersect to the ideal");
  for (size_t k = 0; k + 1 < f.levels.size(); ++k)
    if (!f.levels[k + 1].contains(f.levels[k]))
      throw Error("dimension_filtration: chain is not ascending");
  return f;
}

bool is_partially_scm(const MonomialIdeal& j, int i) {
  if (!j.is_proper()) throw Error("is_partially_scm: ideal must be proper");
  if (i < 0) throw Error("is_partially_scm: negative level");
  DimensionFiltration f = dimension_filtration(j);
  for (int k = std::max(i, 0); k <= f.d; ++k) {
    const MonomialIdeal& hi = f.u(k);
    const MonomialIdeal& lo = f.u(k - 1);
    if (hi == lo) continue;  // zero quotient
    MonomialIdeal ann = colon(lo, hi);
    if (ann.is_unit() || dimension(ann) != k) return false;
    if (depth_pair(hi, lo) != k) return false;
  }
  return true;
}

bool is_sequentially_cm(const MonomialIdeal& j) { return is_partially_scm(j, 0); }

bool duval_cross_check(const MonomialIdeal& i) {
  if (!i.is_squarefree()) throw Error("duval_cross_check: ideal must be squarefree");
  if (i.is_zero() || !i.is_proper()) throw Error("duval_cross_check: ideal must be nonzero and proper");
  SimplicialComplex delta = to_complex(i);
  const Field& f = i.ring.field;
  if (delta.is_void()) throw Error("duval_cross_check: void complex");
  for (int k = 0; k <= delta.dim(); ++k)
    if (!is_cm(pure_skeleton(delta, k), f)) return false;
  return true;
}

}  // namespace locoh
