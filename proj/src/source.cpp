#include "elasto/source.hpp"

#include "elasto/error.hpp"

namespace elasto {

void SourceSpectrum::set(int n, int m, cplx f) { set_scaled(n, m, Scaled::from(f)); }

void SourceSpectrum::set_scaled(int n, int m, const Scaled& f) {
  if (n < 1 || m < -n || m > n) throw Error(Errc::InvalidOrder, "source mode out of range");
  entries[{n, m}] = f;
}

Scaled reduced_coefficient(int n, const Scaled& f) {
  return f * Scaled::real_exp(-log_odd_double_factorial(2 * n + 1));
}

}  // namespace elasto
