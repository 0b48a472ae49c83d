#include "locoh/monomial.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <set>

namespace locoh {

PolyRingContext::PolyRingContext(Field f, std::vector<std::string> vars) : field(f), names(std::move(vars)) {
  if (names.empty()) throw Error("ring needs at least one variable");
  std::set<std::string> uniq(names.begin(), names.end());
  if (uniq.size() != names.size()) throw Error("ring variable names must be distinct");
}

PolyRingContext PolyRingContext::standard(int n, Field f) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return PolyRingContext(f, std::move(v));
}

bool divides(const Expo& a, const Expo& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Expo lcm_expo(const Expo& a, const Expo& b) {
  Expo r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Expo gcd_expo(const Expo& a, const Expo& b) {
  Expo r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

uint32_t support_mask(const Expo& a) {
  uint32_t m = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0) m |= (1u << i);
  return m;
}

bool is_squarefree_expo(const Expo& a) {
  for (int e : a)
    if (e > 1) return false;
  return true;
}

std::string format_monomial(const PolyRingContext& r, const Expo& e) {
  std::string out;
  for (int i = 0; i < r.n(); ++i) {
    if (e[static_cast<size_t>(i)] == 0) continue;
    if (!out.empty()) out += "*";
    out += r.names[static_cast<size_t>(i)];
    if (e[static_cast<size_t>(i)] > 1) out += "^" + std::to_string(e[static_cast<size_t>(i)]);
  }
  return out.empty() ? "1" : out;
}

Expo parse_monomial(const PolyRingContext& r, const std::string& text) {
  Expo e(static_cast<size_t>(r.n()), 0);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw Error("empty monomial");
  bool first = true;
  while (pos < text.size()) {
    skip_ws();
    if (!first) {
      if (pos >= text.size()) break;
      if (text[pos] != '*') throw Error("monomial '" + text + "': expected '*' at column " + std::to_string(pos + 1));
      ++pos;
      skip_ws();
    }
    first = false;
    if (pos < text.size() && text[pos] == '1' &&
        (pos + 1 == text.size() || !std::isalnum(static_cast<unsigned char>(text[pos + 1])))) {
      ++pos;
      skip_ws();
      continue;  // factor 1
    }
    size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
    std::string name = text.substr(start, pos - start);
    if (name.empty())
      throw Error("monomial '" + text + "': expected variable at column " + std::to_string(start + 1));
    int var = -1;
    for (int i = 0; i < r.n(); ++i)
      if (r.names[static_cast<size_t>(i)] == name) var = i;
    if (var < 0) throw Error("monomial '" + text + "': unknown variable '" + name + "'");
    long exp = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_ws();
      size_t dstart = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (dstart == pos)
        throw Error("monomial '" + text + "': expected exponent at column " + std::to_string(dstart + 1));
      exp = std::stol(text.substr(dstart, pos - dstart));
      if (exp < 0) throw Error("negative exponent");
    }
    e[static_cast<size_t>(var)] += static_cast<int>(exp);
    skip_ws();
  }
  return e;
}

namespace {

std::vector<Expo> minimalize(std::vector<Expo> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Expo> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : gens)
      if (h != g && divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  // A multiple of 1 is everything: keep the canonical unit form.
  for (const auto& g : out)
    if (support_mask(g) == 0) return {Expo(g.size(), 0)};
  // canonical order: earlier variables first (descending exponent lex)
  std::sort(out.rbegin(), out.rend());
  return out;
}

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(a.ring == b.ring)) throw Error("ideal operation across different rings");
}

}  // namespace

MonomialIdeal MonomialIdeal::make(const PolyRingContext& r, std::vector<Expo> gens) {
  for (const auto& g : gens)
    if (static_cast<int>(g.size()) != r.n()) throw Error("generator length does not match ring");
  MonomialIdeal i;
  i.ring = r;
  i.gens = minimalize(std::move(gens));
  return i;
}

MonomialIdeal MonomialIdeal::maximal(const PolyRingContext& r) {
  std::vector<Expo> g;
  for (int i = 0; i < r.n(); ++i) {
    Expo e(static_cast<size_t>(r.n()), 0);
    e[static_cast<size_t>(i)] = 1;
    g.push_back(e);
  }
  return make(r, std::move(g));
}

MonomialIdeal MonomialIdeal::from_vars(const PolyRingContext& r, uint32_t vars) {
  std::vector<Expo> g;
  for (int i = 0; i < r.n(); ++i)
    if (vars & (1u << i)) {
      Expo e(static_cast<size_t>(r.n()), 0);
      e[static_cast<size_t>(i)] = 1;
      g.push_back(e);
    }
  return make(r, std::move(g));
}

bool MonomialIdeal::is_unit() const { return gens.size() == 1 && support_mask(gens[0]) == 0; }

bool MonomialIdeal::is_squarefree() const {
  for (const auto& g : gens)
    if (!is_squarefree_expo(g)) return false;
  return true;
}

bool MonomialIdeal::contains(const Expo& m) const {
  for (const auto& g : gens)
    if (divides(g, m)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& o) const {
  for (const auto& g : o.gens)
    if (!contains(g)) return false;
  return true;
}

std::vector<std::string> MonomialIdeal::format() const {
  std::vector<std::string> out;
  for (const auto& g : gens) out.push_back(format_monomial(ring, g));
  return out;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Expo> g;
  for (const auto& x : a.gens)
    for (const auto& y : b.gens) g.push_back(lcm_expo(x, y));
  return MonomialIdeal::make(a.ring, std::move(g));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Expo> g = a.gens;
  g.insert(g.end(), b.gens.begin(), b.gens.end());
  return MonomialIdeal::make(a.ring, std::move(g));
}

MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  if (b.is_zero()) return MonomialIdeal::unit(a.ring);
  MonomialIdeal acc = MonomialIdeal::unit(a.ring);
  bool started = false;
  for (const auto& y : b.gens) {
    std::vector<Expo> g;
    for (const auto& x : a.gens) {
      Expo q(x.size());
      for (size_t i = 0; i < x.size(); ++i) q[i] = std::max(x[i] - y[i], 0);
      g.push_back(q);
    }
    MonomialIdeal part = MonomialIdeal::make(a.ring, std::move(g));
    acc = started ? intersect(acc, part) : part;
    started = true;
  }
  return acc;
}

std::vector<uint32_t> minimal_primes(const MonomialIdeal& i) {
  if (i.is_zero() || i.is_unit()) throw Error("minimal_primes: ideal must be proper and nonzero");
  int n = i.ring.n();
  if (n > 20) throw Error("minimal_primes: too many variables for cover enumeration");
  std::vector<uint32_t> supports;
  for (const auto& g : i.gens) supports.push_back(support_mask(g));
  uint32_t full = (1u << n) - 1;
  std::vector<uint32_t> covers;
  for (uint32_t s = 0; s <= full; ++s) {
    bool cover = true;
    for (uint32_t sup : supports)
      if ((sup & s) == 0) {
        cover = false;
        break;
      }
    if (cover) covers.push_back(s);
    if (s == full) break;
  }
  std::vector<uint32_t> out;
  for (uint32_t c : covers) {
    bool minimal = true;
    for (uint32_t d : covers)
      if (d != c && (d & ~c) == 0) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](uint32_t a, uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

int height(const MonomialIdeal& i) {
  if (i.is_unit()) throw Error("height: unit ideal");
  if (i.is_zero()) return 0;
  int h = i.ring.n();
  for (uint32_t p : minimal_primes(i)) h = std::min(h, std::popcount(p));
  return h;
}

int dimension(const MonomialIdeal& i) { return i.ring.n() - height(i); }

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit())
    throw Error("irreducible_decomposition: ideal must be proper and nonzero");
  std::vector<MonomialIdeal> done;
  std::vector<MonomialIdeal> work{ideal};
  while (!work.empty()) {
    MonomialIdeal cur = work.back();
    work.pop_back();
    // find a generator with at least two variables in its support
    int split_gen = -1;
    for (size_t g = 0; g < cur.gens.size(); ++g)
      if (std::popcount(support_mask(cur.gens[g])) >= 2) {
        split_gen = static_cast<int>(g);
        break;
      }
    if (split_gen < 0) {
      done.push_back(cur);
      continue;
    }
    const Expo& m = cur.gens[static_cast<size_t>(split_gen)];
    int v = std::countr_zero(support_mask(m));
    Expo pure(m.size(), 0), rest = m;
    pure[static_cast<size_t>(v)] = m[static_cast<size_t>(v)];
    rest[static_cast<size_t>(v)] = 0;
    std::vector<Expo> g1 = cur.gens, g2 = cur.gens;
    g1[static_cast<size_t>(split_gen)] = pure;
    g2[static_cast<size_t>(split_gen)] = rest;
    work.push_back(MonomialIdeal::make(cur.ring, std::move(g1)));
    work.push_back(MonomialIdeal::make(cur.ring, std::move(g2)));
  }
  // dedupe
  std::sort(done.begin(), done.end(), [](const MonomialIdeal& a, const MonomialIdeal& b) { return a.gens < b.gens; });
  done.erase(std::unique(done.begin(), done.end()), done.end());
  // drop redundant components (those containing the intersection of the rest)
  bool changed = true;
  while (changed && done.size() > 1) {
    changed = false;
    for (size_t k = 0; k < done.size(); ++k) {
      MonomialIdeal rest_int;
      bool started = false;
      for (size_t l = 0; l < done.size(); ++l) {
        if (l == k) continue;
        rest_int = started ? intersect(rest_int, done[l]) : done[l];
        started = true;
      }
      if (started && done[k].contains(rest_int)) {
        done.erase(done.begin() + static_cast<long>(k));
        changed = true;
        break;
      }
    }
  }
  return done;
}

std::vector<PrimaryComponent> primary_decomposition(const MonomialIdeal& ideal) {
  auto irr = irreducible_decomposition(ideal);
  std::map<uint32_t, MonomialIdeal> by_radical;
  for (const auto& c : irr) {
    uint32_t rad = 0;
    for (const auto& g : c.gens) rad |= support_mask(g);
    auto it = by_radical.find(rad);
    if (it == by_radical.end())
      by_radical.emplace(rad, c);
    else
      it->second = intersect(it->second, c);
  }
  std::vector<PrimaryComponent> out;
  for (auto& [rad, comp] : by_radical) out.push_back({rad, comp});
  // irredundancy after merging
  bool changed = true;
  while (changed && out.size() > 1) {
    changed = false;
    for (size_t k = 0; k < out.size(); ++k) {
      MonomialIdeal rest_int;
      bool started = false;
      for (size_t l = 0; l < out.size(); ++l) {
        if (l == k) continue;
        rest_int = started ? intersect(rest_int, out[l].component) : out[l].component;
        started = true;
      }
      if (started && out[k].component.contains(rest_int)) {
        out.erase(out.begin() + static_cast<long>(k));
        changed = true;
        break;
      }
    }
  }
  return out;
}

MonomialIdeal stanley_reisner(const SimplicialComplex& d, const PolyRingContext& r) {
  if (d.n != r.n()) throw Error("stanley_reisner: vertex count does not match ring");
  std::vector<Expo> gens;
  for (uint32_t nf : minimal_nonfaces(d)) {
    Expo e(static_cast<size_t>(r.n()), 0);
    for (int v = 0; v < r.n(); ++v)
      if (nf & (1u << v)) e[static_cast<size_t>(v)] = 1;
    gens.push_back(e);
  }
  return MonomialIdeal::make(r, std::move(gens));
}

SimplicialComplex to_complex(const MonomialIdeal& i) {
  if (!i.is_squarefree()) throw Error("to_complex: ideal is not squarefree");
  int n = i.ring.n();
  if (n > 20) throw Error("to_complex: too many variables");
  if (i.is_unit()) return SimplicialComplex::void_complex(n);
  uint32_t full = (1u << n) - 1;
  std::vector<uint32_t> faces;
  for (uint32_t s = 0;; ++s) {
    Expo e(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v)
      if (s & (1u << v)) e[static_cast<size_t>(v)] = 1;
    if (!i.contains(e)) faces.push_back(s);
    if (s == full) break;
  }
  return SimplicialComplex::generated_by(n, std::move(faces));
}

SigmaSet sigma_set(const MonomialIdeal& i, const MonomialIdeal& ambient_j) {
  require_same_ring(i, ambient_j);
  if (i.is_zero()) throw Error("sigma_set: I must be nonzero");
  MonomialIdeal s = sum(i, ambient_j);
  if (s.is_unit()) throw Error("sigma_set: I+J must be proper");
  uint32_t covered = 0;
  for (uint32_t p : minimal_primes(s)) covered |= p;
  uint32_t full = (1u << i.ring.n()) - 1;
  return SigmaSet{full & ~covered};
}

MonomialIdeal q_ideal(const MonomialIdeal& i, const MonomialIdeal& j) {
  require_same_ring(i, j);
  if (!j.is_proper()) throw Error("q_ideal: J must be proper");
  int n = j.ring.n();
  int dim_rj = j.is_zero() ? n : dimension(j);
  std::vector<PrimaryComponent> comps;
  if (j.is_zero())
    comps.push_back({0u, MonomialIdeal::zero(j.ring)});
  else
    comps = primary_decomposition(j);
  MonomialIdeal acc = MonomialIdeal::unit(j.ring);
  for (const auto& pc : comps) {
    int dim_comp = n - std::popcount(pc.prime);
    if (dim_comp != dim_rj) continue;
    MonomialIdeal ip = sum(i, MonomialIdeal::from_vars(j.ring, pc.prime));
    if (ip.is_unit() || dimension(ip) != 0) continue;
    acc = intersect(acc, pc.component);
  }
  return acc;
}

MonomialIdeal project_to_vars(const MonomialIdeal& i, uint32_t keep, const PolyRingContext& sub) {
  std::vector<Expo> gens;
  for (const auto& g : i.gens) {
    if (support_mask(g) & ~keep) continue;  // hits a killed variable
    Expo e;
    for (int v = 0; v < i.ring.n(); ++v)
      if (keep & (1u << v)) e.push_back(g[static_cast<size_t>(v)]);
    gens.push_back(e);
  }
  return MonomialIdeal::make(sub, std::move(gens));
}

}  // namespace locoh
