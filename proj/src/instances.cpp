#include "locoh/instances.hpp"

#include <algorithm>
#include <bit>

#include "locoh/resolutions.hpp"

namespace locoh {

uint64_t Rng::next() {
  state += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Rng::below(int n) {
  if (n <= 0) throw Error("rng: empty range");
  return static_cast<int>(next() % static_cast<uint64_t>(n));
}

InstanceKind instance_kind_from_string(const std::string& s) {
  if (s == "squarefree") return InstanceKind::Squarefree;
  if (s == "pure-graph") return InstanceKind::PureGraph;
  if (s == "dim1") return InstanceKind::Dim1;
  if (s == "general-monomial") return InstanceKind::GeneralMonomial;
  throw Error("unknown instance kind '" + s + "'");
}

std::string instance_kind_name(InstanceKind k) {
  switch (k) {
    case InstanceKind::Squarefree: return "squarefree";
    case InstanceKind::PureGraph: return "pure-graph";
    case InstanceKind::Dim1: return "dim1";
    case InstanceKind::GeneralMonomial: return "general-monomial";
  }
  throw Error("unreachable");
}

namespace {

uint32_t random_subset(Rng& rng, int n, int size) {
  std::vector<int> verts(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) verts[static_cast<size_t>(v)] = v;
  for (int v = n - 1; v > 0; --v) std::swap(verts[static_cast<size_t>(v)], verts[static_cast<size_t>(rng.below(v + 1))]);
  uint32_t mask = 0;
  for (int k = 0; k < size; ++k) mask |= (1u << verts[static_cast<size_t>(k)]);
  return mask;
}

MonomialIdeal dim1_instance(Rng& rng, const PolyRingContext& ring) {
  int n = ring.n();
  int points = 1 + rng.below(n);
  uint32_t chosen = random_subset(rng, n, points);
  std::vector<uint32_t> faces;
  for (int v = 0; v < n; ++v)
    if (chosen & (1u << v)) faces.push_back(1u << v);
  SimplicialComplex delta = SimplicialComplex::generated_by(n, std::move(faces));
  MonomialIdeal i = stanley_reisner(delta, ring);
  if (dimension(i) != 1) throw Error("dim1 instance generation failed");
  return i;
}

MonomialIdeal pure_graph_instance(Rng& rng, const PolyRingContext& ring) {
  int n = ring.n();
  int w = 2 + rng.below(n - 1);
  uint32_t verts = random_subset(rng, n, w);
  std::vector<int> vs;
  for (int v = 0; v < n; ++v)
    if (verts & (1u << v)) vs.push_back(v);
  // occasionally force two components so the disconnected table shapes occur
  int cut = (w >= 4 && rng.below(3) == 0) ? 2 + rng.below(w - 3) : w;
  auto same_block = [&](size_t x, size_t y) {
    return (x < static_cast<size_t>(cut)) == (y < static_cast<size_t>(cut));
  };
  std::vector<uint32_t> edges;
  uint32_t covered = 0;
  for (size_t x = 0; x < vs.size(); ++x)
    for (size_t y = x + 1; y < vs.size(); ++y)
      if (same_block(x, y) && rng.coin()) {
        uint32_t e = (1u << vs[x]) | (1u << vs[y]);
        edges.push_back(e);
        covered |= e;
      }
  for (size_t x = 0; x < vs.size(); ++x) {
    int v = vs[x];
    if (covered & (1u << v)) continue;
    size_t other = x;
    while (other == x || !same_block(x, other))
      other = static_cast<size_t>(rng.below(static_cast<int>(vs.size())));
    uint32_t e = (1u << v) | (1u << vs[other]);
    edges.push_back(e);
    covered |= e;
  }
  if (edges.empty()) edges.push_back((1u << vs[0]) | (1u << vs[1]));
  SimplicialComplex delta = SimplicialComplex::generated_by(n, std::move(edges));
  if (!delta.is_pure() || delta.dim() != 1) throw Error("pure-graph instance generation failed");
  MonomialIdeal i = stanley_reisner(delta, ring);
  if (dimension(i) != 2) throw Error("pure-graph instance generation failed");
  return i;
}

MonomialIdeal squarefree_instance(Rng& rng, const PolyRingContext& ring) {
  int n = ring.n();
  while (true) {
    int count = 2 + rng.below(n + 1);
    std::vector<Expo> gens;
    for (int k = 0; k < count; ++k) {
      int size = 1 + rng.below(std::max(1, n - 1));
      uint32_t sup = random_subset(rng, n, size);
      Expo e(static_cast<size_t>(n), 0);
      for (int v = 0; v < n; ++v)
        if (sup & (1u << v)) e[static_cast<size_t>(v)] = 1;
      gens.push_back(e);
    }
    MonomialIdeal i = MonomialIdeal::make(ring, std::move(gens));
    if (!i.is_zero() && i.is_proper()) return i;
  }
}

MonomialIdeal general_monomial_instance(Rng& rng, const PolyRingContext& ring) {
  int n = ring.n();
  while (true) {
    int count = 2 + rng.below(4);
    std::vector<Expo> gens;
    for (int k = 0; k < count; ++k) {
      Expo e(static_cast<size_t>(n), 0);
      for (int v = 0; v < n; ++v) e[static_cast<size_t>(v)] = rng.below(3);
      if (support_mask(e) == 0) e[static_cast<size_t>(rng.below(n))] = 1 + rng.below(2);
      gens.push_back(e);
    }
    MonomialIdeal i = MonomialIdeal::make(ring, std::move(gens));
    if (!i.is_zero() && i.is_proper()) return i;
  }
}

}  // namespace

MonomialIdeal random_instance(InstanceKind kind, int n, uint64_t seed, const Field& f, int max_n) {
  if (n < 2 || n > max_n) throw Error("random_instance: n out of range");
  PolyRingContext ring = PolyRingContext::standard(n, f);
  Rng rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<uint64_t>(n) + (static_cast<uint64_t>(kind) << 32));
  switch (kind) {
    case InstanceKind::Dim1: return dim1_instance(rng, ring);
    case InstanceKind::PureGraph: return pure_graph_instance(rng, ring);
    case InstanceKind::Squarefree: return squarefree_instance(rng, ring);
    case InstanceKind::GeneralMonomial: return general_monomial_instance(rng, ring);
  }
  throw Error("unreachable");
}

MonomialIdeal random_cm_instance(int n, uint64_t seed, const Field& f) {
  if (n < 3) throw Error("random_cm_instance: need at least 3 variables");
  PolyRingContext ring = PolyRingContext::standard(n, f);
  Rng rng(seed * 0xD1B54A32D192ED03ULL + static_cast<uint64_t>(n));
  int mode = rng.below(3);
  if (mode == 2) {
    // filtered random squarefree: CM with a variable outside all min primes
    for (int tries = 0; tries < 60; ++tries) {
      MonomialIdeal i = squarefree_instance(rng, ring);
      if (!is_cm_ring(i)) continue;
      uint32_t covered = 0;
      for (uint32_t p : minimal_primes(i)) covered |= p;
      if (covered == (1u << n) - 1) continue;
      return i;
    }
    mode = rng.coin() ? 0 : 1;
  }
  if (mode == 0) {
    // complete intersection of variables, leaving at least one variable free
    int g = 1 + rng.below(n - 1);
    uint32_t sup = random_subset(rng, n, g);
    return MonomialIdeal::from_vars(ring, sup);
  }
  // cone over a skeleton of the simplex on the remaining vertices
  int apex = rng.below(n);
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (v != apex) rest.push_back(v);
  int base = 2 + rng.below(static_cast<int>(rest.size()) - 1);
  std::vector<int> pool = rest;
  for (int v = static_cast<int>(pool.size()) - 1; v > 0; --v)
    std::swap(pool[static_cast<size_t>(v)], pool[static_cast<size_t>(rng.below(v + 1))]);
  pool.resize(static_cast<size_t>(base));
  int k = rng.below(base);  // skeleton dimension
  if (base == static_cast<int>(rest.size()) && k == base - 1) k = base - 2;  // keep the ideal nonzero
  std::vector<uint32_t> faces;
  uint32_t pool_mask = 0;
  for (int v : pool) pool_mask |= (1u << v);
  uint32_t sub = pool_mask;
  while (true) {
    if (std::popcount(sub) == k + 1) faces.push_back(sub | (1u << apex));
    if (sub == 0) break;
    sub = (sub - 1) & pool_mask;
  }
  SimplicialComplex delta = SimplicialComplex::generated_by(n, std::move(faces));
  return stanley_reisner(delta, ring);
}

}  // namespace locoh
