#include "locoh/cech.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "locoh/parallel.hpp"
#include "locoh/simplicial.hpp"

namespace locoh {

AmbientQuotient AmbientQuotient::polynomial(const PolyRingContext& r) {
  return AmbientQuotient{r, MonomialIdeal::zero(r)};
}

AmbientQuotient AmbientQuotient::make(const PolyRingContext& r, const MonomialIdeal& j) {
  if (!(j.ring == r)) throw Error("ambient: relations live in a different ring");
  if (j.is_unit()) throw Error("ambient: relations must be proper");
  if (!j.is_squarefree()) throw Error("ambient: only squarefree relations are supported");
  for (const auto& g : j.gens)
    if (std::popcount(support_mask(g)) == 1)
      throw Error("ambient: quotient by a variable must shrink the ring (see quotient_by_variable)");
  return AmbientQuotient{r, j};
}

int AmbientQuotient::dim() const {
  if (relations.is_zero()) return ring.n();
  return dimension(relations);
}

VariableQuotient quotient_by_variable(const AmbientQuotient& a, const MonomialIdeal& i, int var) {
  int n = a.ring.n();
  if (var < 0 || var >= n) throw Error("quotient_by_variable: no such variable");
  if (n == 1) throw Error("quotient_by_variable: cannot drop the last variable");
  uint32_t keep = ((1u << n) - 1) & ~(1u << var);
  std::vector<std::string> names;
  for (int v = 0; v < n; ++v)
    if (v != var) names.push_back(a.ring.names[static_cast<size_t>(v)]);
  PolyRingContext sub(a.ring.field, std::move(names));
  VariableQuotient out;
  out.dropped = a.ring.names[static_cast<size_t>(var)];
  out.ambient = AmbientQuotient::make(sub, project_to_vars(a.relations, keep, sub));
  out.ideal = project_to_vars(i, keep, sub);
  return out;
}

long window_size(int m) {
  long s = 1;
  for (int j = 0; j < m; ++j) s *= 3;
  return s;
}

long window_code(const std::vector<int>& beta) {
  long code = 0, pow = 1;
  for (int b : beta) {
    if (b < -1 || b > 1) throw Error("window_code: degree outside window");
    code += (b + 1) * pow;
    pow *= 3;
  }
  return code;
}

std::vector<int> window_decode(long code, int m) {
  std::vector<int> beta(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) {
    beta[static_cast<size_t>(j)] = static_cast<int>(code % 3) - 1;
    code /= 3;
  }
  return beta;
}

std::vector<int> clamp_degree(const std::vector<int>& gamma) {
  std::vector<int> b(gamma.size());
  for (size_t j = 0; j < gamma.size(); ++j) b[j] = std::max(-1, std::min(1, gamma[j]));
  return b;
}

namespace {

// Shared spot test: the degree-gamma piece of A localized at the variables in
// W is nonzero iff gamma is effective outside W and no relation divides the
// clamped monomial there.
bool spot_alive(int m, uint32_t w, const std::vector<Expo>& jgens, const std::vector<int>& gamma) {
  for (int j = 0; j < m; ++j)
    if (!(w & (1u << j)) && gamma[static_cast<size_t>(j)] < 0) return false;
  for (const auto& g : jgens) {
    bool kills = true;
    for (int j = 0; j < m; ++j) {
      if (w & (1u << j)) continue;
      if (g[static_cast<size_t>(j)] > std::max(gamma[static_cast<size_t>(j)], 0)) {
        kills = false;
        break;
      }
    }
    if (kills) return false;
  }
  return true;
}

struct EngineCtx {
  AmbientQuotient amb;
  MonomialIdeal ideal;
  Field f;
  int m = 0;
  int i = 0;
  bool nerve = false;
  std::vector<uint32_t> gsup;  // compressed generator supports (antichain)
  std::vector<Expo> jgens;
};

EngineCtx make_ctx(const AmbientQuotient& a, const MonomialIdeal& ideal, int coh_index,
                   const EngineOptions& opt) {
  if (!(ideal.ring == a.ring)) throw Error("windowed module: ideal ring mismatch");
  if (ideal.is_zero()) throw Error("windowed module: ideal must be nonzero");
  if (!ideal.is_proper()) throw Error("windowed module: ideal must be proper");
  if (coh_index < 0) throw Error("windowed module: negative cohomological index");
  EngineCtx e;
  e.amb = a;
  e.ideal = ideal;
  e.f = a.ring.field;
  e.m = a.ring.n();
  e.i = coh_index;
  e.jgens = a.relations.gens;
  if (e.m > 10) throw Error("windowed module: too many variables for the degree window");

  // Generators that vanish in the ambient contribute dead spots only; the
  // engine works with the antichain of squarefree supports, which generates
  // the same radical in A.
  std::vector<uint32_t> sup;
  for (const auto& g : ideal.gens) {
    if (a.relations.contains(g)) continue;
    sup.push_back(support_mask(g));
  }
  std::sort(sup.begin(), sup.end());
  sup.erase(std::unique(sup.begin(), sup.end()), sup.end());
  for (uint32_t s : sup) {
    bool redundant = false;
    for (uint32_t t : sup)
      if (t != s && (t & ~s) == 0) {
        redundant = true;
        break;
      }
    if (!redundant) e.gsup.push_back(s);
  }
  if (e.gsup.empty()) throw Error("windowed module: ideal is zero in the ambient");
  e.nerve = a.polynomial_like();
  if (!e.nerve && static_cast<int>(e.gsup.size()) > opt.direct_subset_cap)
    throw Error("windowed module: too many generators for a quotient ambient");
  return e;
}

// Cells of one cochain spot, by cardinality. For the nerve path these are
// nerve faces inside NEG; for the direct path, live Cech subsets.
std::vector<uint32_t> nerve_cells(const EngineCtx& e, uint32_t neg, int card) {
  std::vector<uint32_t> out;
  if (card < 0 || card > std::popcount(neg)) return out;
  uint32_t sub = neg;
  while (true) {
    if (std::popcount(sub) == card) {
      bool face = sub == 0;
      if (!face)
        for (uint32_t s : e.gsup)
          if ((s & sub) == 0) {
            face = true;
            break;
          }
      if (face) out.push_back(sub);
    }
    if (sub == 0) break;
    sub = (sub - 1) & neg;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<uint32_t> direct_cells(const EngineCtx& e, const std::vector<int>& gamma, int card) {
  std::vector<uint32_t> out;
  int r = static_cast<int>(e.gsup.size());
  if (card < 0 || card > r) return out;
  // fixed-popcount enumeration over generator subsets
  auto handle = [&](uint32_t mask) {
    uint32_t w = 0;
    for (int g = 0; g < r; ++g)
      if (mask & (1u << g)) w |= e.gsup[static_cast<size_t>(g)];
    if (spot_alive(e.m, w, e.jgens, gamma)) out.push_back(mask);
  };
  if (card == 0) {
    handle(0);
    return out;
  }
  uint32_t mask = (1u << card) - 1;
  uint32_t limit = r == 32 ? ~0u : (1u << r);
  while (mask < limit) {
    handle(mask);
    uint32_t c = mask & -mask;
    uint32_t rr = mask + c;
    if (rr >= limit) break;
    mask = (((rr ^ mask) >> 2) / c) | rr;
  }
  std::sort(out.begin(), out.end());
  return out;
}

uint32_t neg_mask(const std::vector<int>& gamma) {
  uint32_t neg = 0;
  for (size_t j = 0; j < gamma.size(); ++j)
    if (gamma[j] < 0) neg |= (1u << j);
  return neg;
}

// The three cell layers around the piece's cohomology spot.
struct Layers {
  std::vector<uint32_t> in, mid, out;
};

Layers piece_layers(const EngineCtx& e, const std::vector<int>& gamma) {
  Layers l;
  if (e.nerve) {
    uint32_t neg = neg_mask(gamma);
    if (neg == 0) return l;
    int mid_card = e.i - 1;  // cochain degree i-2 of the nerve
    l.in = nerve_cells(e, neg, mid_card - 1);
    l.mid = nerve_cells(e, neg, mid_card);
    l.out = nerve_cells(e, neg, mid_card + 1);
  } else {
    l.in = direct_cells(e, gamma, e.i - 1);
    l.mid = direct_cells(e, gamma, e.i);
    l.out = direct_cells(e, gamma, e.i + 1);
  }
  return l;
}

int piece_dim_only(const EngineCtx& e, const std::vector<int>& gamma) {
  Layers l = piece_layers(e, gamma);
  if (l.mid.empty()) return 0;
  int rank_out = l.out.empty() ? 0 : coboundary_matrix(e.f, l.mid, l.out).rank();
  int rank_in = l.in.empty() ? 0 : coboundary_matrix(e.f, l.in, l.mid).rank();
  return static_cast<int>(l.mid.size()) - rank_out - rank_in;
}

WindowPiece compute_piece(const EngineCtx& e, const std::vector<int>& gamma) {
  WindowPiece p;
  Layers l = piece_layers(e, gamma);
  if (l.mid.empty()) return p;
  Matrix d_in = coboundary_matrix(e.f, l.in, l.mid);
  Matrix d_out = coboundary_matrix(e.f, l.mid, l.out);
  p.cells = l.mid;
  p.coh = cohomology_space(e.f, static_cast<int>(l.mid.size()), d_in, d_out);
  p.dim = p.coh.dim;
  return p;
}

// Push a map that keeps shared cells (restriction / localization of spots)
// and project onto the target's cohomology basis.
Matrix induced_step(const Field& f, const WindowPiece& src, const WindowPiece& tgt) {
  Matrix out(f, tgt.dim, src.dim);
  if (src.dim == 0 || tgt.dim == 0) return out;
  for (int c = 0; c < src.dim; ++c) {
    std::vector<Scalar> w(tgt.cells.size(), Scalar(0));
    for (size_t r = 0; r < src.cells.size(); ++r) {
      const Scalar& v = src.coh.reps.at(static_cast<int>(r), c);
      if (v == 0) continue;
      auto it = std::lower_bound(tgt.cells.begin(), tgt.cells.end(), src.cells[r]);
      if (it != tgt.cells.end() && *it == src.cells[r]) w[static_cast<size_t>(it - tgt.cells.begin())] = v;
    }
    std::vector<Scalar> coords = tgt.coh.project(w);
    for (int r = 0; r < tgt.dim; ++r) out.at(r, c) = coords[static_cast<size_t>(r)];
  }
  return out;
}

uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t ctx_seed(const EngineCtx& e, uint64_t base) {
  uint64_t h = base ^ mix64(static_cast<uint64_t>(e.i) + 1);
  for (uint32_t s : e.gsup) h = mix64(h ^ s);
  for (const auto& g : e.jgens)
    for (int v : g) h = mix64(h ^ static_cast<uint64_t>(v + 7));
  return h;
}

}  // namespace

int WindowedModule::dim_at(const std::vector<int>& gamma) const {
  return dim_at_code(window_code(clamp_degree(gamma)));
}

const Matrix& WindowedModule::step(long code, int j) const {
  return step_maps[static_cast<size_t>(code) * m + j];
}

bool WindowedModule::is_zero() const {
  for (const auto& p : pieces)
    if (p.dim != 0) return false;
  return true;
}

std::vector<int> WindowedModule::piece_dims() const {
  std::vector<int> d(pieces.size());
  for (size_t k = 0; k < pieces.size(); ++k) d[k] = pieces[k].dim;
  return d;
}

VectorSpaceComplex cech_complex_at_degree(const AmbientQuotient& a, const MonomialIdeal& i,
                                          const std::vector<int>& beta, int max_gens) {
  if (!(i.ring == a.ring)) throw Error("cech complex: ideal ring mismatch");
  if (i.is_zero() || !i.is_proper()) throw Error("cech complex: ideal must be nonzero and proper");
  if (static_cast<int>(beta.size()) != a.ring.n()) throw Error("cech complex: degree length mismatch");
  int r = static_cast<int>(i.gens.size());
  if (r > max_gens) throw Error("cech complex: too many generators to materialize");
  int m = a.ring.n();
  const Field& f = a.ring.field;

  std::vector<uint32_t> w(size_t(1) << r, 0);
  for (uint32_t mask = 1; mask < (uint32_t(1) << r); ++mask) {
    int low = std::countr_zero(mask);
    w[mask] = w[mask & (mask - 1)] | support_mask(i.gens[static_cast<size_t>(low)]);
  }
  std::vector<std::vector<uint32_t>> alive(static_cast<size_t>(r) + 1);
  for (uint32_t mask = 0; mask < (uint32_t(1) << r); ++mask)
    if (spot_alive(m, w[mask], a.relations.gens, beta))
      alive[static_cast<size_t>(std::popcount(mask))].push_back(mask);
  for (auto& lst : alive) std::sort(lst.begin(), lst.end());

  VectorSpaceComplex c;
  c.field = f;
  for (int t = 0; t <= r; ++t) c.term_dims.push_back(static_cast<int>(alive[static_cast<size_t>(t)].size()));
  for (int t = 0; t < r; ++t)
    c.differentials.push_back(coboundary_matrix(f, alive[static_cast<size_t>(t)], alive[static_cast<size_t>(t + 1)]));
  return c;
}

std::vector<int> window_piece_dims(const AmbientQuotient& a, const MonomialIdeal& i, int coh_index,
                                   const EngineOptions& opt) {
  EngineCtx e = make_ctx(a, i, coh_index, opt);
  long ws = window_size(e.m);
  std::vector<int> dims(static_cast<size_t>(ws), 0);
  for_each_index(ws, opt.workers, [&](long code) {
    dims[static_cast<size_t>(code)] = piece_dim_only(e, window_decode(code, e.m));
  });
  return dims;
}

WindowedModule windowed_module(const AmbientQuotient& a, const MonomialIdeal& i, int coh_index,
                               const EngineOptions& opt) {
  EngineCtx e = make_ctx(a, i, coh_index, opt);
  WindowedModule n;
  n.ambient = a;
  n.ideal = i;
  n.coh_index = coh_index;
  n.m = e.m;
  long ws = window_size(e.m);
  n.pieces.resize(static_cast<size_t>(ws));
  for_each_index(ws, opt.workers, [&](long code) {
    n.pieces[static_cast<size_t>(code)] = compute_piece(e, window_decode(code, e.m));
  });

  // Multiplication maps between adjacent window degrees.
  n.step_maps.assign(static_cast<size_t>(ws) * e.m, Matrix());
  n.step_iso.assign(static_cast<size_t>(ws) * e.m, 0);
  std::vector<std::pair<long, int>> jobs;
  for (long code = 0; code < ws; ++code) {
    std::vector<int> beta = window_decode(code, e.m);
    for (int j = 0; j < e.m; ++j)
      if (beta[static_cast<size_t>(j)] <= 0) jobs.emplace_back(code, j);
  }
  long pow3[16];
  pow3[0] = 1;
  for (int j = 1; j <= e.m; ++j) pow3[j] = pow3[j - 1] * 3;
  for_each_index(static_cast<long>(jobs.size()), opt.workers, [&](long k) {
    auto [code, j] = jobs[static_cast<size_t>(k)];
    long up = code + pow3[j];
    Matrix step = induced_step(e.f, n.pieces[static_cast<size_t>(code)], n.pieces[static_cast<size_t>(up)]);
    bool iso = step.rows() == step.cols() && step.rank() == step.rows();
    n.step_maps[static_cast<size_t>(code) * e.m + j] = std::move(step);
    n.step_iso[static_cast<size_t>(code) * e.m + j] = iso ? 1 : 0;
  });

  if (opt.run_checks) {
    // commuting squares
    for_each_index(ws, opt.workers, [&](long code) {
      std::vector<int> beta = window_decode(code, e.m);
      for (int j = 0; j < e.m; ++j) {
        if (beta[static_cast<size_t>(j)] > 0) continue;
        for (int l = j + 1; l < e.m; ++l) {
          if (beta[static_cast<size_t>(l)] > 0) continue;
          Matrix a1 = n.step(code + pow3[j], l) * n.step(code, j);
          Matrix a2 = n.step(code + pow3[l], j) * n.step(code, l);
          if (!(a1 == a2)) throw Error("windowed module: multiplication squares do not commute");
        }
      }
    });
    // straightness sampling: off-window degrees match their clamp
    uint64_t s = ctx_seed(e, opt.check_seed);
    for (int t = 0; t < opt.straightness_samples; ++t) {
      std::vector<int> gamma(static_cast<size_t>(e.m));
      for (int j = 0; j < e.m; ++j) {
        s = mix64(s);
        gamma[static_cast<size_t>(j)] = static_cast<int>(s % 9) - 4;
      }
      int direct = piece_dim_only(e, gamma);
      int clamped = n.dim_at(gamma);
      if (direct != clamped) throw Error("window assumption violated");
    }
    // literal Cech cross-check at a few window degrees
    if (static_cast<int>(i.gens.size()) <= opt.literal_check_cap) {
      std::vector<std::vector<int>> degs;
      degs.push_back(std::vector<int>(static_cast<size_t>(e.m), -1));
      degs.push_back(std::vector<int>(static_cast<size_t>(e.m), 0));
      degs.push_back(std::vector<int>(static_cast<size_t>(e.m), 1));
      for (int t = 0; t < 5; ++t) {
        std::vector<int> beta(static_cast<size_t>(e.m));
        for (int j = 0; j < e.m; ++j) {
          s = mix64(s);
          beta[static_cast<size_t>(j)] = static_cast<int>(s % 3) - 1;
        }
        degs.push_back(beta);
      }
      for (const auto& beta : degs) {
        auto h = cech_complex_at_degree(a, i, beta, opt.literal_check_cap).cohomology_dims();
        int want = coh_index < static_cast<int>(h.size()) ? h[static_cast<size_t>(coh_index)] : 0;
        if (want != n.dim_at(beta)) throw Error("windowed module: literal Cech cross-check failed");
      }
    }
  }
  return n;
}

int cohomological_dimension(const AmbientQuotient& a, const MonomialIdeal& i, const EngineOptions& opt) {
  EngineOptions scan = opt;
  scan.run_checks = false;
  for (int c = a.ring.n(); c >= 0; --c) {
    std::vector<int> dims = window_piece_dims(a, i, c, scan);
    for (int d : dims)
      if (d != 0) return c;
  }
  throw Error("cohomological dimension: no nonzero local cohomology found (engine bug)");
}

namespace {

// Realizable (clamp(t), clamp(t+e)) pairs over all integers t.
std::vector<std::pair<int, int>> realizable_pairs(int e) {
  std::vector<std::pair<int, int>> out;
  for (int t = -(e + 3); t <= 3; ++t) {
    std::pair<int, int> pr{std::max(-1, std::min(1, t)), std::max(-1, std::min(1, t + e))};
    if (std::find(out.begin(), out.end(), pr) == out.end()) out.push_back(pr);
  }
  return out;
}

struct CompositeCache {
  const WindowedModule& n;
  long pow3[16];
  std::unordered_map<long long, char> zero_flag;
  std::unordered_map<long long, Matrix> mats;

  explicit CompositeCache(const WindowedModule& mod) : n(mod) {
    pow3[0] = 1;
    for (int j = 1; j <= n.m; ++j) pow3[j] = pow3[j - 1] * 3;
  }

  const Matrix& matrix(long u, long v) {
    long long key = static_cast<long long>(u) * (pow3[n.m]) + v;
    auto it = mats.find(key);
    if (it != mats.end()) return it->second;
    std::vector<int> ub = window_decode(u, n.m), vb = window_decode(v, n.m);
    Matrix result;
    if (u == v) {
      result = Matrix::identity(n.pieces[static_cast<size_t>(u)].coh.reps.field(), n.dim_at_code(u));
    } else {
      int j = -1;
      for (int t = 0; t < n.m; ++t)
        if (ub[static_cast<size_t>(t)] < vb[static_cast<size_t>(t)]) {
          j = t;
          break;
        }
      long prev = v - pow3[j];
      result = n.step(prev, j) * matrix(u, prev);
    }
    return mats.emplace(key, std::move(result)).first->second;
  }

  bool is_zero(long u, long v) {
    if (n.dim_at_code(u) == 0 || n.dim_at_code(v) == 0) return true;
    long long key = static_cast<long long>(u) * (pow3[n.m]) + v;
    auto it = zero_flag.find(key);
    if (it != zero_flag.end()) return it->second != 0;
    bool z = matrix(u, v).is_zero();
    zero_flag[key] = z ? 1 : 0;
    return z;
  }
};

bool candidate_holds(const WindowedModule& n, const Expo& b, CompositeCache& cache,
                     const std::vector<long>& nonzero_codes) {
  int m = n.m;
  std::vector<std::vector<std::pair<int, int>>> pairs(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) pairs[static_cast<size_t>(j)] = realizable_pairs(b[static_cast<size_t>(j)]);
  for (long u : nonzero_codes) {
    std::vector<int> ub = window_decode(u, m);
    for (long v : nonzero_codes) {
      std::vector<int> vb = window_decode(v, m);
      bool compat = true;
      for (int j = 0; j < m && compat; ++j) {
        std::pair<int, int> pr{ub[static_cast<size_t>(j)], vb[static_cast<size_t>(j)]};
        if (std::find(pairs[static_cast<size_t>(j)].begin(), pairs[static_cast<size_t>(j)].end(), pr) ==
            pairs[static_cast<size_t>(j)].end())
          compat = false;
      }
      if (compat && !cache.is_zero(u, v)) return false;
    }
  }
  return true;
}

}  // namespace

bool annihilator_candidate_holds(const WindowedModule& n, const Expo& b) {
  if (static_cast<int>(b.size()) != n.m) throw Error("annihilator candidate: wrong length");
  CompositeCache cache(n);
  std::vector<long> nz;
  for (long code = 0; code < static_cast<long>(n.pieces.size()); ++code)
    if (n.dim_at_code(code) > 0) nz.push_back(code);
  return candidate_holds(n, b, cache, nz);
}

MonomialIdeal annihilator(const WindowedModule& n) {
  if (n.is_zero()) throw Error("annihilator: zero module (the annihilator is the unit ideal)");
  const PolyRingContext& ring = n.ambient.ring;
  int m = n.m;
  std::vector<long> nz;
  for (long code = 0; code < static_cast<long>(n.pieces.size()); ++code)
    if (n.dim_at_code(code) > 0) nz.push_back(code);

  // A nonzero piece with no zero coordinate admits the identity composite for
  // every candidate, so nothing annihilates.
  for (long code : nz) {
    std::vector<int> b = window_decode(code, m);
    bool has_zero = false;
    for (int x : b)
      if (x == 0) has_zero = true;
    if (!has_zero) return MonomialIdeal::zero(ring);
  }

  CompositeCache cache(n);
  // candidates in {0,1,2}^m by ascending total degree
  std::vector<Expo> all;
  std::vector<Expo> accepted;
  long total = 1;
  for (int j = 0; j < m; ++j) total *= 3;
  for (long code = 1; code < total; ++code) {
    Expo b(static_cast<size_t>(m));
    long c = code;
    for (int j = 0; j < m; ++j) {
      b[static_cast<size_t>(j)] = static_cast<int>(c % 3);
      c /= 3;
    }
    all.push_back(std::move(b));
  }
  std::sort(all.begin(), all.end(), [](const Expo& a, const Expo& b) {
    int sa = 0, sb = 0;
    for (int x : a) sa += x;
    for (int x : b) sb += x;
    return sa != sb ? sa < sb : a < b;
  });
  for (const auto& b : all) {
    bool multiple = false;
    for (const auto& g : accepted)
      if (divides(g, b)) {
        multiple = true;
        break;
      }
    if (multiple) continue;
    if (candidate_holds(n, b, cache, nz)) accepted.push_back(b);
  }
  return MonomialIdeal::make(ring, std::move(accepted));
}

WindowedModule localize_at_variable(const WindowedModule& n, int j) {
  if (j < 0 || j >= n.m) throw Error("localize: no such variable");
  WindowedModule l;
  l.ambient = n.ambient;
  l.ideal = n.ideal;
  l.coh_index = n.coh_index;
  l.m = n.m;
  long ws = static_cast<long>(n.pieces.size());
  long pow3[16];
  pow3[0] = 1;
  for (int t = 1; t <= n.m; ++t) pow3[t] = pow3[t - 1] * 3;
  auto slab = [&](long code) {
    std::vector<int> b = window_decode(code, n.m);
    return code + (1 - b[static_cast<size_t>(j)]) * pow3[j];
  };
  l.pieces.resize(static_cast<size_t>(ws));
  for (long code = 0; code < ws; ++code) l.pieces[static_cast<size_t>(code)] = n.pieces[static_cast<size_t>(slab(code))];
  l.step_maps.assign(static_cast<size_t>(ws) * n.m, Matrix());
  l.step_iso.assign(static_cast<size_t>(ws) * n.m, 0);
  const Field& f = n.ambient.ring.field;
  for (long code = 0; code < ws; ++code) {
    std::vector<int> b = window_decode(code, n.m);
    for (int t = 0; t < n.m; ++t) {
      if (b[static_cast<size_t>(t)] > 0) continue;
      if (t == j) {
        l.step_maps[static_cast<size_t>(code) * n.m + t] =
            Matrix::identity(f, l.pieces[static_cast<size_t>(code)].dim);
        l.step_iso[static_cast<size_t>(code) * n.m + t] = 1;
      } else {
        long sc = slab(code);
        l.step_maps[static_cast<size_t>(code) * n.m + t] = n.step_maps[static_cast<size_t>(sc) * n.m + t];
        l.step_iso[static_cast<size_t>(code) * n.m + t] = n.step_iso[static_cast<size_t>(sc) * n.m + t];
      }
    }
  }
  return l;
}

std::pair<std::vector<int>, std::vector<int>> h0_h1_principal(const WindowedModule& n, int j) {
  if (j < 0 || j >= n.m) throw Error("h0_h1: no such variable");
  long ws = static_cast<long>(n.pieces.size());
  long pow3[16];
  pow3[0] = 1;
  for (int t = 1; t <= n.m; ++t) pow3[t] = pow3[t - 1] * 3;
  std::vector<int> h0(static_cast<size_t>(ws), 0), h1(static_cast<size_t>(ws), 0);
  for (long code = 0; code < ws; ++code) {
    std::vector<int> b = window_decode(code, n.m);
    int lvl = b[static_cast<size_t>(j)];
    long top = code + (1 - lvl) * pow3[j];
    Matrix phi = Matrix::identity(n.ambient.ring.field, n.dim_at_code(code));
    for (long cur = code; cur != top; cur += pow3[j]) phi = n.step(cur, j) * phi;
    int rk = phi.rank();
    h0[static_cast<size_t>(code)] = n.dim_at_code(code) - rk;
    h1[static_cast<size_t>(code)] = n.dim_at_code(top) - rk;
  }
  return {h0, h1};
}

bool supported_only_at_max(const WindowedModule& n) {
  for (long code = 0; code < static_cast<long>(n.pieces.size()); ++code) {
    if (n.dim_at_code(code) == 0) continue;
    std::vector<int> b = window_decode(code, n.m);
    for (int x : b)
      if (x == 1) return false;
  }
  return true;
}

}  // namespace locoh
