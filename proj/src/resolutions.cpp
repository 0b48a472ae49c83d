#include "locoh/resolutions.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "locoh/complex.hpp"

namespace locoh {

TaylorComplex TaylorComplex::build(const MonomialIdeal& j, int max_gens) {
  if (j.is_unit()) throw Error("taylor: unit ideal");
  TaylorComplex t;
  t.ideal = j;
  t.r = static_cast<int>(j.gens.size());
  if (t.r > max_gens) throw Error("taylor: too many generators to materialize");
  size_t total = size_t(1) << t.r;
  t.lcms.assign(total, Expo(static_cast<size_t>(j.ring.n()), 0));
  for (size_t mask = 1; mask < total; ++mask) {
    int low = std::countr_zero(static_cast<uint32_t>(mask));
    t.lcms[mask] = lcm_expo(t.lcms[mask & (mask - 1)], j.gens[static_cast<size_t>(low)]);
  }
  return t;
}

int TaylorComplex::drop_sign(uint32_t mask, int i) {
  int below = std::popcount(mask & ((1u << i) - 1));
  return below % 2 == 0 ? 1 : -1;
}

void TaylorComplex::tensor_k(std::vector<int>& dims, std::vector<Matrix>& d) const {
  const Field& f = ideal.ring.field;
  std::vector<std::vector<uint32_t>> by_size(static_cast<size_t>(r) + 1);
  for (uint32_t mask = 0; mask < (uint32_t(1) << r); ++mask)
    by_size[static_cast<size_t>(std::popcount(mask))].push_back(mask);
  dims.assign(static_cast<size_t>(r) + 1, 0);
  for (size_t t = 0; t <= static_cast<size_t>(r); ++t) dims[t] = static_cast<int>(by_size[t].size());
  d.clear();
  d.emplace_back(f, 0, dims[0]);  // d_0 : T_0 -> 0
  for (int t = 1; t <= r; ++t) {
    Matrix m(f, dims[static_cast<size_t>(t - 1)], dims[static_cast<size_t>(t)]);
    const auto& src = by_size[static_cast<size_t>(t)];
    const auto& tgt = by_size[static_cast<size_t>(t - 1)];
    for (size_t c = 0; c < src.size(); ++c) {
      uint32_t mask = src[c];
      for (int i = 0; i < r; ++i) {
        if (!(mask & (1u << i))) continue;
        uint32_t sub = mask & ~(1u << i);
        if (lcms[sub] != lcms[mask]) continue;  // non-unit ratio dies in T tensor k
        size_t row = static_cast<size_t>(std::lower_bound(tgt.begin(), tgt.end(), sub) - tgt.begin());
        m.at(static_cast<int>(row), static_cast<int>(c)) = drop_sign(mask, i);
      }
    }
    d.push_back(std::move(m));
  }
}

Matrix TaylorComplex::scalarized_differential(int t, const Expo& alpha) const {
  const Field& f = ideal.ring.field;
  std::vector<uint32_t> src, tgt;
  for (uint32_t mask = 0; mask < (uint32_t(1) << r); ++mask) {
    if (!divides(lcms[mask], alpha)) continue;
    if (std::popcount(mask) == t) src.push_back(mask);
    if (std::popcount(mask) == t - 1) tgt.push_back(mask);
  }
  Matrix m(f, static_cast<int>(tgt.size()), static_cast<int>(src.size()));
  for (size_t c = 0; c < src.size(); ++c) {
    uint32_t mask = src[c];
    for (int i = 0; i < r; ++i) {
      if (!(mask & (1u << i))) continue;
      uint32_t sub = mask & ~(1u << i);
      size_t row = static_cast<size_t>(std::lower_bound(tgt.begin(), tgt.end(), sub) - tgt.begin());
      if (row == tgt.size() || tgt[row] != sub) continue;
      m.at(static_cast<int>(row), static_cast<int>(c)) = drop_sign(mask, i);
    }
  }
  return m;
}

std::vector<Expo> lcm_lattice(const MonomialIdeal& j, size_t cap) {
  std::set<Expo> lattice(j.gens.begin(), j.gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Expo> cur(lattice.begin(), lattice.end());
    for (const auto& a : cur)
      for (const auto& g : j.gens) {
        Expo l = lcm_expo(a, g);
        if (lattice.insert(l).second) grew = true;
        if (lattice.size() > cap) throw Error("lcm lattice exceeds cap");
      }
  }
  return {lattice.begin(), lattice.end()};
}

namespace {

std::vector<int> homology_dims(const std::vector<int>& dims, const std::vector<Matrix>& d) {
  // d[t] : term t -> term t-1
  std::vector<int> rk(d.size(), 0);
  for (size_t t = 0; t < d.size(); ++t)
    if (d[t].rows() > 0 && d[t].cols() > 0) rk[t] = d[t].rank();
  std::vector<int> h(dims.size(), 0);
  for (size_t t = 0; t < dims.size(); ++t) {
    int out = rk[t];
    int in = t + 1 < d.size() ? rk[t + 1] : 0;
    h[t] = dims[t] - out - in;
    if (h[t] < 0) throw Error("negative homology dimension");
  }
  return h;
}

}  // namespace

std::vector<int> betti_numbers_literal(const MonomialIdeal& j, int max_gens) {
  int n = j.ring.n();
  std::vector<int> beta(static_cast<size_t>(n) + 1, 0);
  if (j.is_zero()) {
    beta[0] = 1;
    return beta;
  }
  TaylorComplex t = TaylorComplex::build(j, max_gens);
  std::vector<int> dims;
  std::vector<Matrix> d;
  t.tensor_k(dims, d);
  std::vector<int> h = homology_dims(dims, d);
  for (size_t p = 0; p < h.size(); ++p) {
    if (h[p] == 0) continue;
    if (p >= beta.size()) throw Error("betti beyond ring dimension");
    beta[p] += h[p];
  }
  return beta;
}

std::vector<int> betti_numbers(const MonomialIdeal& j) {
  if (!j.is_proper()) throw Error("betti_numbers: ideal must be proper");
  int n = j.ring.n();
  const Field& f = j.ring.field;
  std::vector<int> beta(static_cast<size_t>(n) + 1, 0);
  beta[0] = 1;
  if (j.is_zero()) return beta;

  std::vector<Expo> lattice = lcm_lattice(j);
  int r = static_cast<int>(j.gens.size());

  for (const auto& alpha : lattice) {
    // generators and coatoms of the open interval below alpha
    std::vector<int> gens_below;
    for (int g = 0; g < r; ++g)
      if (divides(j.gens[static_cast<size_t>(g)], alpha)) gens_below.push_back(g);
    std::vector<Expo> proper;
    for (const auto& m : lattice)
      if (m != alpha && divides(m, alpha)) proper.push_back(m);
    std::vector<Expo> coatoms;
    for (const auto& m : proper) {
      bool maximal = true;
      for (const auto& m2 : proper)
        if (m2 != m && divides(m, m2)) {
          maximal = false;
          break;
        }
      if (maximal) coatoms.push_back(m);
    }

    std::vector<int> h;  // h[k] = dim H~^{k-1} of K_alpha
    if (coatoms.empty()) {
      // alpha is a generator; K_alpha is the irrelevant complex
      h.assign(2, 0);
      h[0] = 1;
    } else {
      // Two covers of K_alpha by simplices: by coatom faces over generator
      // vertices, or its nerve over coatom vertices. Same cohomology; pick
      // the cheaper enumeration.
      size_t cost_faces = 0, cost_nerve = 0;
      std::vector<uint64_t> faces_repr;   // vertex set: gens_below (compact)
      std::vector<uint64_t> nerve_repr;   // vertex set: coatoms
      for (const auto& m : coatoms) {
        uint64_t mask = 0;
        for (size_t idx = 0; idx < gens_below.size(); ++idx)
          if (divides(j.gens[static_cast<size_t>(gens_below[idx])], m)) mask |= (uint64_t(1) << idx);
        faces_repr.push_back(mask);
        cost_faces += size_t(1) << std::popcount(mask);
      }
      for (int g : gens_below) {
        uint64_t mask = 0;
        for (size_t ci = 0; ci < coatoms.size(); ++ci)
          if (divides(j.gens[static_cast<size_t>(g)], coatoms[ci])) mask |= (uint64_t(1) << ci);
        if (mask != 0) {
          nerve_repr.push_back(mask);
          cost_nerve += size_t(1) << std::popcount(mask);
        }
      }
      const size_t cap = size_t(1) << 22;
      if (cost_nerve <= cost_faces && coatoms.size() <= 63)
        h = union_reduced_cohomology(f, static_cast<int>(coatoms.size()), nerve_repr, cap);
      else if (gens_below.size() <= 63)
        h = union_reduced_cohomology(f, static_cast<int>(gens_below.size()), faces_repr, cap);
      else
        throw Error("betti strand too large");
    }
    for (size_t k = 0; k < h.size(); ++k) {
      if (h[k] == 0) continue;
      size_t p = k + 1;  // beta_{p,alpha} = dim H~_{p-2}(K_alpha), k = p-1
      if (p >= beta.size()) throw Error("betti beyond ring dimension");
      beta[p] += h[k];
    }
  }
  return beta;
}

int pd(const MonomialIdeal& j) {
  auto b = betti_numbers(j);
  int p = 0;
  for (size_t k = 0; k < b.size(); ++k)
    if (b[k] != 0) p = static_cast<int>(k);
  return p;
}

int depth_ring(const MonomialIdeal& j) { return j.ring.n() - pd(j); }

bool is_cm_ring(const MonomialIdeal& j) {
  if (j.is_zero()) return true;
  return depth_ring(j) == dimension(j);
}

int hochster_betti(const MonomialIdeal& i, int p, uint32_t sigma) {
  if (!i.is_squarefree()) throw Error("hochster_betti: ideal must be squarefree");
  SimplicialComplex delta = to_complex(i);
  SimplicialComplex restricted = induced_subcomplex(delta, sigma);
  int j = std::popcount(sigma) - p - 2;
  return reduced_cohomology_dim(restricted, j, i.ring.field);
}

namespace {

// Koszul strand of k(x_1..x_n) tensor R/J at one multidegree: spot tau lives
// iff tau <= alpha coordinatewise and x^(alpha-tau) is outside J.
struct KoszulStrand {
  std::vector<std::vector<uint32_t>> spots;  // by |tau|
  std::vector<Matrix> d;                     // d[p] : p -> p-1
  std::vector<CohomologySpace> homology;     // by p
};

KoszulStrand koszul_strand(const MonomialIdeal& j, const Expo& alpha, bool with_bases) {
  const PolyRingContext& ring = j.ring;
  int n = ring.n();
  const Field& f = ring.field;
  uint32_t box = 0;
  for (int v = 0; v < n; ++v)
    if (alpha[static_cast<size_t>(v)] >= 1) box |= (1u << v);

  KoszulStrand ks;
  ks.spots.assign(static_cast<size_t>(n) + 1, {});
  uint32_t sub = box;
  while (true) {
    Expo rem = alpha;
    for (int v = 0; v < n; ++v)
      if (sub & (1u << v)) rem[static_cast<size_t>(v)] -= 1;
    if (!j.contains(rem)) ks.spots[static_cast<size_t>(std::popcount(sub))].push_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & box;
  }
  for (auto& s : ks.spots) std::sort(s.begin(), s.end());

  ks.d.resize(static_cast<size_t>(n) + 1);
  ks.d[0] = Matrix(f, 0, static_cast<int>(ks.spots[0].size()));
  for (int p = 1; p <= n; ++p) {
    const auto& src = ks.spots[static_cast<size_t>(p)];
    const auto& tgt = ks.spots[static_cast<size_t>(p - 1)];
    Matrix m(f, static_cast<int>(tgt.size()), static_cast<int>(src.size()));
    for (size_t c = 0; c < src.size(); ++c) {
      uint32_t tau = src[c];
      for (int v = 0; v < n; ++v) {
        if (!(tau & (1u << v))) continue;
        uint32_t down = tau & ~(1u << v);
        auto it = std::lower_bound(tgt.begin(), tgt.end(), down);
        if (it == tgt.end() || *it != down) continue;
        int below = std::popcount(tau & ((1u << v) - 1));
        m.at(static_cast<int>(it - tgt.begin()), static_cast<int>(c)) = (below % 2 == 0) ? 1 : -1;
      }
    }
    ks.d[static_cast<size_t>(p)] = std::move(m);
  }
  if (with_bases) {
    ks.homology.resize(static_cast<size_t>(n) + 1);
    for (int p = 0; p <= n; ++p) {
      const Matrix& out = ks.d[static_cast<size_t>(p)];
      Matrix in = p + 1 <= n ? ks.d[static_cast<size_t>(p + 1)]
                             : Matrix(f, static_cast<int>(ks.spots[static_cast<size_t>(p)].size()), 0);
      ks.homology[static_cast<size_t>(p)] =
          cohomology_space(f, static_cast<int>(ks.spots[static_cast<size_t>(p)].size()), in, out);
    }
  }
  return ks;
}

}  // namespace

std::vector<int> tor_pair_dims(const MonomialIdeal& j1, const MonomialIdeal& j2) {
  if (!(j1.ring == j2.ring)) throw Error("depth_pair: ring mismatch");
  if (!j1.contains(j2)) throw Error("depth_pair: J2 must be contained in J1");
  if (j1 == j2) throw Error("depth_pair: zero module");
  int n = j1.ring.n();
  const Field& f = j1.ring.field;

  std::set<Expo> degrees;
  degrees.insert(Expo(static_cast<size_t>(n), 0));
  if (!j1.is_zero() && !j1.is_unit())
    for (const auto& a : lcm_lattice(j1)) degrees.insert(a);
  if (!j2.is_zero() && !j2.is_unit())
    for (const auto& a : lcm_lattice(j2)) degrees.insert(a);

  std::vector<int> tor(static_cast<size_t>(n) + 2, 0);
  for (const auto& alpha : degrees) {
    KoszulStrand src = koszul_strand(j2, alpha, true);   // R/J2
    KoszulStrand tgt = koszul_strand(j1, alpha, true);   // R/J1
    // induced map on homology per p, then ker/coker dims
    std::vector<int> rk(static_cast<size_t>(n) + 1, 0), hs(static_cast<size_t>(n) + 1, 0),
        ht(static_cast<size_t>(n) + 1, 0);
    for (int p = 0; p <= n; ++p) {
      const auto& hsrc = src.homology[static_cast<size_t>(p)];
      const auto& htgt = tgt.homology[static_cast<size_t>(p)];
      hs[static_cast<size_t>(p)] = hsrc.dim;
      ht[static_cast<size_t>(p)] = htgt.dim;
      if (hsrc.dim == 0 || htgt.dim == 0) continue;
      const auto& sspots = src.spots[static_cast<size_t>(p)];
      const auto& tspots = tgt.spots[static_cast<size_t>(p)];
      Matrix induced(f, htgt.dim, hsrc.dim);
      for (int c = 0; c < hsrc.dim; ++c) {
        std::vector<Scalar> w(tspots.size(), Scalar(0));
        for (size_t rix = 0; rix < sspots.size(); ++rix) {
          const Scalar& val = hsrc.reps.at(static_cast<int>(rix), c);
          if (val == 0) continue;
          auto it = std::lower_bound(tspots.begin(), tspots.end(), sspots[rix]);
          if (it != tspots.end() && *it == sspots[rix]) w[static_cast<size_t>(it - tspots.begin())] = val;
        }
        std::vector<Scalar> coords = htgt.project(w);
        for (int rix = 0; rix < htgt.dim; ++rix) induced.at(rix, c) = coords[static_cast<size_t>(rix)];
      }
      rk[static_cast<size_t>(p)] = induced.rank();
    }
    for (int p = 0; p <= n; ++p) {
      int coker_above = p + 1 <= n ? ht[static_cast<size_t>(p + 1)] - rk[static_cast<size_t>(p + 1)] : 0;
      int ker_here = hs[static_cast<size_t>(p)] - rk[static_cast<size_t>(p)];
      tor[static_cast<size_t>(p)] += coker_above + ker_here;
    }
  }
  return tor;
}

int depth_pair(const MonomialIdeal& j1, const MonomialIdeal& j2) {
  std::vector<int> tor = tor_pair_dims(j1, j2);
  int top = -1;
  for (size_t p = 0; p < tor.size(); ++p)
    if (tor[p] != 0) top = static_cast<int>(p);
  if (top < 0) throw Error("depth_pair: module is zero");
  return j1.ring.n() - top;
}

}  // namespace locoh
