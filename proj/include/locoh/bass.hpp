#ifndef LOCOH_BASS_HPP
#define LOCOH_BASS_HPP

#include "locoh/cech.hpp"

namespace locoh {

/// Uniform per-coordinate degree box scanned by bass_numbers.
struct ScanBox {
  int lo = -2;
  int hi = 1;
};

struct BassContribution {
  std::vector<int> alpha;
  int p = 0;
  int dim = 0;
};

/// Bass numbers mu_p(m, N) = dim Ext^p(k, N) of a windowed module over a
/// polynomial ambient, via the Koszul resolution of the residue field.
struct BassProfile {
  std::vector<int> mu;  // 0..n
  std::vector<BassContribution> contributing;
};

/// Scans every alpha in the box; degrees where some variable acts invertibly
/// on the whole slice contribute nothing (checked against the stored step
/// maps, not assumed). Boundary degrees must contribute zero or the box is
/// reported too small. `force_full` disables the invertibility shortcut.
BassProfile bass_numbers(const WindowedModule& n, ScanBox box = {}, const EngineOptions& opt = {},
                         bool force_full = false);

}  // namespace locoh

#endif
