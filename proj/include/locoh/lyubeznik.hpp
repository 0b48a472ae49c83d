#ifndef LOCOH_LYUBEZNIK_HPP
#define LOCOH_LYUBEZNIK_HPP

#include <string>

#include "locoh/bass.hpp"

namespace locoh {

/// Upper-triangular table of lambda_{p,j} = dim Ext^p(k, H_I^{n-j}(R)) for
/// 0 <= p, j <= d = dim R/I.
struct LyubeznikTable {
  int d = 0;
  std::vector<std::vector<int>> lambda;  // (d+1) x (d+1)

  long euler_characteristic() const;  // sum (-1)^{p-j} lambda_{p,j}
  bool is_trivial() const;
  /// Zero off-diagonal in every column j >= i.
  bool shape_matches_iscm(int i) const;
  /// d == 2 and the table equals ((0,a,0),(0,0,0),(0,0,a+1)).
  bool pure_dim2_shape() const;

  std::string render_text() const;
  bool operator==(const LyubeznikTable& o) const { return d == o.d && lambda == o.lambda; }
};

/// Assembles the table column by column from the local cohomology window
/// engine and the Koszul Bass-number kernel. Hard postconditions: the lower
/// triangle vanishes, lambda_{d,d} >= 1, and the signed sum equals 1.
LyubeznikTable lyubeznik_table(const MonomialIdeal& i, const EngineOptions& opt = {});

}  // namespace locoh

#endif
