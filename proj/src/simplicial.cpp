#include "locoh/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace locoh {

namespace {

int popcount32(uint32_t x) { return std::popcount(x); }

std::vector<uint32_t> maximalize(std::vector<uint32_t> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<uint32_t> out;
  for (uint32_t s : faces) {
    bool contained = false;
    for (uint32_t t : faces)
      if (t != s && (s & ~t) == 0) {
        contained = true;
        break;
      }
    if (!contained) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::full_simplex(int n) {
  return {n, {n >= 32 ? ~0u : ((1u << n) - 1)}};
}

SimplicialComplex SimplicialComplex::generated_by(int n, std::vector<uint32_t> faces) {
  if (faces.empty()) return void_complex(n);
  return {n, maximalize(std::move(faces))};
}

int SimplicialComplex::dim() const {
  if (is_void()) return -2;
  int d = -1;
  for (uint32_t s : facets) d = std::max(d, popcount32(s) - 1);
  return d;
}

bool SimplicialComplex::has_face(uint32_t s) const {
  for (uint32_t t : facets)
    if ((s & ~t) == 0) return true;
  return false;
}

std::vector<std::vector<uint32_t>> SimplicialComplex::faces_by_size() const {
  std::vector<std::vector<uint32_t>> out;
  if (is_void()) return out;
  out.resize(static_cast<size_t>(dim() + 2));
  std::unordered_set<uint32_t> seen;
  for (uint32_t fct : facets) {
    // enumerate subsets of the facet
    uint32_t sub = fct;
    while (true) {
      if (seen.insert(sub).second) out[static_cast<size_t>(popcount32(sub))].push_back(sub);
      if (sub == 0) break;
      sub = (sub - 1) & fct;
    }
  }
  for (auto& v : out) std::sort(v.begin(), v.end());
  return out;
}

bool SimplicialComplex::is_pure() const {
  if (is_void() || facets.empty()) return true;
  int d = popcount32(facets[0]);
  for (uint32_t s : facets)
    if (popcount32(s) != d) return false;
  return true;
}

int SimplicialComplex::components() const {
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  uint32_t used = 0;
  for (uint32_t s : facets) {
    used |= s;
    int first = -1;
    for (int v = 0; v < n; ++v)
      if (s & (1u << v)) {
        if (first == -1)
          first = v;
        else
          parent[find(v)] = find(first);
      }
  }
  int c = 0;
  for (int v = 0; v < n; ++v)
    if ((used & (1u << v)) && find(v) == v) ++c;
  return c;
}

SimplicialComplex link(const SimplicialComplex& d, uint32_t sigma) {
  if (!d.has_face(sigma)) throw Error("link: sigma is not a face");
  std::vector<uint32_t> gen;
  for (uint32_t fct : d.facets)
    if ((sigma & ~fct) == 0) gen.push_back(fct & ~sigma);
  return SimplicialComplex::generated_by(d.n, std::move(gen));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& d, uint32_t verts) {
  if (d.is_void()) return d;
  std::vector<uint32_t> gen;
  for (uint32_t fct : d.facets) gen.push_back(fct & verts);
  return SimplicialComplex::generated_by(d.n, std::move(gen));
}

SimplicialComplex pure_skeleton(const SimplicialComplex& d, int i) {
  if (d.is_void()) throw Error("pure_skeleton: void complex");
  if (i < -1 || i > d.dim()) throw Error("pure_skeleton: index out of range");
  if (i == -1) return SimplicialComplex::irrelevant(d.n);
  std::vector<uint32_t> gen;
  auto faces = d.faces_by_size();
  for (uint32_t s : faces[static_cast<size_t>(i + 1)]) gen.push_back(s);
  return SimplicialComplex::generated_by(d.n, std::move(gen));
}

std::vector<uint32_t> minimal_nonfaces(const SimplicialComplex& d) {
  if (d.n > 20) throw Error("minimal_nonfaces: vertex count too large");
  std::vector<uint32_t> out;
  uint32_t full = (d.n == 32) ? ~0u : ((1u << d.n) - 1);
  for (uint32_t s = 0; s <= full; ++s) {
    if (d.has_face(s)) continue;
    bool minimal = true;
    for (int v = 0; v < d.n && minimal; ++v)
      if (s & (1u << v))
        if (!d.has_face(s & ~(1u << v))) minimal = false;
    if (minimal) out.push_back(s);
    if (s == full) break;
  }
  std::sort(out.begin(), out.end(), [](uint32_t a, uint32_t b) {
    int pa = popcount32(a), pb = popcount32(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

SimplicialComplex alexander_dual(const SimplicialComplex& d) {
  uint32_t full = (d.n == 32) ? ~0u : ((1u << d.n) - 1);
  std::vector<uint32_t> gen;
  for (uint32_t nf : minimal_nonfaces(d)) gen.push_back(full & ~nf);
  return SimplicialComplex::generated_by(d.n, std::move(gen));
}

Matrix coboundary_matrix(const Field& f, const std::vector<uint32_t>& lo, const std::vector<uint32_t>& hi) {
  Matrix m(f, static_cast<int>(hi.size()), static_cast<int>(lo.size()));
  for (size_t c = 0; c < lo.size(); ++c) {
    uint32_t tau = lo[c];
    for (size_t r = 0; r < hi.size(); ++r) {
      uint32_t up = hi[r];
      if ((tau & ~up) != 0) continue;
      uint32_t diff = up & ~tau;
      if (popcount32(diff) != 1) continue;
      int v = std::countr_zero(diff);
      int below = popcount32(tau & ((1u << v) - 1));
      m.at(static_cast<int>(r), static_cast<int>(c)) = (below % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

int reduced_cohomology_dim(const SimplicialComplex& d, int j, const Field& f) {
  if (d.is_void()) return 0;
  auto faces = d.faces_by_size();
  auto size_of = [&](int q) -> int {
    size_t k = static_cast<size_t>(q + 1);
    return k < faces.size() ? static_cast<int>(faces[k].size()) : 0;
  };
  if (j < -1 || size_of(j) == 0) return 0;
  auto layer = [&](int q) -> const std::vector<uint32_t>& {
    static const std::vector<uint32_t> empty;
    size_t k = static_cast<size_t>(q + 1);
    return k < faces.size() ? faces[k] : empty;
  };
  int rank_out = 0, rank_in = 0;
  if (size_of(j + 1) > 0) rank_out = coboundary_matrix(f, layer(j), layer(j + 1)).rank();
  if (j >= 0 && size_of(j - 1) > 0) rank_in = coboundary_matrix(f, layer(j - 1), layer(j)).rank();
  return size_of(j) - rank_out - rank_in;
}

bool is_cm(const SimplicialComplex& d, const Field& f) {
  if (d.is_void()) return true;
  auto faces = d.faces_by_size();
  for (const auto& level : faces)
    for (uint32_t sigma : level) {
      SimplicialComplex lk = link(d, sigma);
      int dl = lk.dim();
      for (int j = -1; j < dl; ++j)
        if (reduced_cohomology_dim(lk, j, f) != 0) return false;
    }
  return true;
}

std::vector<int> union_reduced_cohomology(const Field& f, int nverts, const std::vector<uint64_t>& gen_faces,
                                          size_t face_cap) {
  if (nverts > 63) throw Error("union_reduced_cohomology: vertex universe too large");
  std::vector<int> out(static_cast<size_t>(nverts) + 1, 0);
  if (gen_faces.empty()) return out;  // void complex

  // Enumerate all faces of the union of simplices, grouped by cardinality.
  std::vector<std::vector<uint64_t>> layers(static_cast<size_t>(nverts) + 1);
  std::unordered_set<uint64_t> seen;
  for (uint64_t g : gen_faces) {
    uint64_t sub = g;
    while (true) {
      if (seen.size() > face_cap) throw Error("union_reduced_cohomology: face enumeration exceeds cap");
      if (seen.insert(sub).second) layers[static_cast<size_t>(std::popcount(sub))].push_back(sub);
      if (sub == 0) break;
      sub = (sub - 1) & g;
    }
  }
  for (auto& l : layers) std::sort(l.begin(), l.end());

  // Cochain complex over the layers; layer k holds faces of dimension k-1.
  auto cob = [&](size_t k) -> Matrix {  // layer k -> layer k+1
    const auto& lo = layers[k];
    const auto& hi = layers[k + 1];
    Matrix m(f, static_cast<int>(hi.size()), static_cast<int>(lo.size()));
    for (size_t c = 0; c < lo.size(); ++c)
      for (size_t r = 0; r < hi.size(); ++r) {
        uint64_t tau = lo[c], up = hi[r];
        if ((tau & ~up) != 0) continue;
        uint64_t diff = up & ~tau;
        if (std::popcount(diff) != 1) continue;
        int v = std::countr_zero(diff);
        int below = std::popcount(tau & ((uint64_t(1) << v) - 1));
        m.at(static_cast<int>(r), static_cast<int>(c)) = (below % 2 == 0) ? 1 : -1;
      }
    return m;
  };

  std::vector<int> rank_up(layers.size(), 0);
  for (size_t k = 0; k + 1 < layers.size(); ++k)
    if (!layers[k].empty() && !layers[k + 1].empty()) rank_up[k] = cob(k).rank();
  for (size_t k = 0; k < layers.size(); ++k) {
    if (layers[k].empty()) continue;
    int in = k > 0 ? rank_up[k - 1] : 0;
    int dim = static_cast<int>(layers[k].size()) - rank_up[k] - in;
    out[k] = dim;  // out[k] = H~^{k-1}
  }
  return out;
}

}  // namespace locoh
