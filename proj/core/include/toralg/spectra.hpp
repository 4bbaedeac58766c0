#ifndef TORALG_SPECTRA_HPP
#define TORALG_SPECTRA_HPP

#include <complex>
#include <string>
#include <vector>

#include "toralg/matrix.hpp"
#include "toralg/polynomial.hpp"

namespace toralg {

struct Spectrum {
  std::vector<std::complex<double>> eigenvalues;  // with multiplicity
  double residual;  // max relative backward error of the root finder
};

// All complex roots by Durand-Kerner simultaneous iteration, run on each
// exact squarefree factor and reassembled with multiplicities.
// Deterministic seeding; residual target 1e-12, iteration cap 10^4.
Spectrum roots(const IntPoly& p);
Spectrum matrix_spectrum(const IntMatrix& m);

struct ErgodicityResult {
  bool ergodic;
  std::string certificate;  // cyclotomic divisor found, or the checked range
  unsigned cyclotomic_k;    // offending k when non-ergodic, else 0
};
// Exact: ergodic iff no cyclotomic polynomial with phi(k) <= n divides the
// characteristic polynomial. The matrix must be invertible over Q.
ErgodicityResult is_ergodic(const IntMatrix& m);

// True iff no eigenvalue lies within 1e-9 of the unit circle; roots of
// unity are screened exactly first.
bool is_hyperbolic(const IntMatrix& m);

// Sum of log|eigenvalue| over eigenvalues outside the unit circle.
double entropy(const IntMatrix& m);
double entropy(const IntPoly& charpoly_of_m);

// Exact count of real eigenvalues (Sturm); all-real iff count == degree.
bool all_roots_real(const IntPoly& p);

}  // namespace toralg

#endif
