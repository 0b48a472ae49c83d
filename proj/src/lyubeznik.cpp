#include "locoh/lyubeznik.hpp"

#include <sstream>

namespace locoh {

long LyubeznikTable::euler_characteristic() const {
  long e = 0;
  for (int p = 0; p <= d; ++p)
    for (int j = p; j <= d; ++j) {
      int v = lambda[static_cast<size_t>(p)][static_cast<size_t>(j)];
      e += ((j - p) % 2 == 0 ? 1 : -1) * v;
    }
  return e;
}

bool LyubeznikTable::is_trivial() const {
  for (int p = 0; p <= d; ++p)
    for (int j = 0; j <= d; ++j) {
      int v = lambda[static_cast<size_t>(p)][static_cast<size_t>(j)];
      if (p == d && j == d) {
        if (v != 1) return false;
      } else if (v != 0) {
        return false;
      }
    }
  return true;
}

bool LyubeznikTable::shape_matches_iscm(int i) const {
  if (i < 0) throw Error("shape_matches_iscm: negative level");
  for (int j = std::max(i, 0); j <= d; ++j)
    for (int p = 0; p <= d; ++p)
      if (p != j && lambda[static_cast<size_t>(p)][static_cast<size_t>(j)] != 0) return false;
  return true;
}

bool LyubeznikTable::pure_dim2_shape() const {
  if (d != 2) throw Error("pure_dim2_shape: table dimension is not 2");
  int a = lambda[0][1];
  return lambda[0][0] == 0 && lambda[0][2] == 0 && lambda[1][0] == 0 && lambda[1][1] == 0 &&
         lambda[1][2] == 0 && lambda[2][0] == 0 && lambda[2][1] == 0 && lambda[2][2] == a + 1;
}

std::string LyubeznikTable::render_text() const {
  std::ostringstream os;
  for (int p = 0; p <= d; ++p) {
    for (int j = 0; j <= d; ++j) {
      if (j < p)
        os << "  .";
      else {
        os.width(3);
        os << lambda[static_cast<size_t>(p)][static_cast<size_t>(j)];
      }
      if (j < d) os << " ";
    }
    os << "\n";
  }
  return os.str();
}

LyubeznikTable lyubeznik_table(const MonomialIdeal& i, const EngineOptions& opt) {
  if (!i.is_squarefree()) throw Error("lyubeznik_table: ideal must be squarefree");
  if (i.is_zero() || !i.is_proper()) throw Error("lyubeznik_table: ideal must be nonzero and proper");
  int n = i.ring.n();
  int d = dimension(i);
  AmbientQuotient amb = AmbientQuotient::polynomial(i.ring);

  LyubeznikTable t;
  t.d = d;
  t.lambda.assign(static_cast<size_t>(d) + 1, std::vector<int>(static_cast<size_t>(d) + 1, 0));
  for (int j = 0; j <= d; ++j) {
    WindowedModule nj = windowed_module(amb, i, n - j, opt);
    BassProfile b = bass_numbers(nj, ScanBox{opt.scan_lo, opt.scan_hi}, opt);
    for (int p = 0; p <= n; ++p) {
      int v = b.mu[static_cast<size_t>(p)];
      if (v == 0) continue;
      if (p > d || p > j)
        throw Error("lyubeznik_table: entry outside the upper triangle (engine bug)");
      t.lambda[static_cast<size_t>(p)][static_cast<size_t>(j)] = v;
    }
  }
  if (t.lambda[static_cast<size_t>(d)][static_cast<size_t>(d)] < 1)
    throw Error("lyubeznik_table: lambda_{d,d} must be positive");
  if (t.euler_characteristic() != 1) throw Error("lyubeznik_table: Euler identity violated");
  return t;
}

}  // namespace locoh
