#pragma once

#include <map>
#include <utility>

#include "elasto/specfun.hpp"

namespace elasto {

// T-mode coefficients f_{1,n,m} of the incident field sum f j_n(k_s|x|) T_n^m.
// Stored scaled: point-source spectra grow like (2n+1)!! (k r0)^{-n}.
struct SourceSpectrum {
  std::map<std::pair<int, int>, Scaled> entries;

  void set(int n, int m, cplx f);
  void set_scaled(int n, int m, const Scaled& f);
  bool empty() const { return entries.empty(); }
};

// f / (2n+1)!!
Scaled reduced_coefficient(int n, const Scaled& f);

}  // namespace elasto
