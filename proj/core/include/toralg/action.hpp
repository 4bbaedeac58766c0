#ifndef TORALG_ACTION_HPP
#define TORALG_ACTION_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "toralg/matrix.hpp"
#include "toralg/number_field.hpp"
#include "toralg/spectra.hpp"

namespace toralg {

// Z^d-action by automorphisms of T^n: d commuting matrices with det = +-1,
// acting on integer row vectors from the right. Immutable after
// construction; per-generator spectra are cached eagerly.
struct ZdAction {
  int d = 0;
  int n = 0;
  std::vector<IntMatrix> gens;
  std::vector<Spectrum> gen_spectra;
};

// Validates commutation (error names the offending pair) and unimodularity.
ZdAction new_action(std::vector<IntMatrix> generators);

// rho^n = A_1^{n_1} ... A_d^{n_d}, inverses exact.
IntMatrix rho(const ZdAction& a, const std::vector<long>& nvec);

// Construction from field data: generators are the multiplication matrices
// of the units on the lattice basis. Units must preserve the lattice and be
// multiplicatively independent.
ZdAction construct_action(const NumberField& field,
                          const std::vector<NFElement>& units,
                          const LatticeBasis& basis);

// Lyapunov exponent data. Row k corresponds to one joint eigenvalue tuple
// (lambda_1^(k), ..., lambda_d^(k)) of the commuting generators;
// exponents[k][i] = log|lambda_i^(k)|. Joint tuples are recovered from the
// characteristic polynomial of an integer pencil N^(d-1) A_1 + ... + A_d,
// with multiplicities taken exactly from its squarefree decomposition and
// Galois orbits from its exact irreducible factorization.
struct LyapunovData {
  std::vector<std::vector<double>> exponents;              // r x d
  std::vector<int> multiplicities;                         // r
  std::vector<std::vector<int>> galois_blocks;             // partition of rows
  std::vector<std::vector<std::complex<double>>> tuples;   // r x d
};
LyapunovData lyapunov_data(const ZdAction& a);

// h(n) = sum of positive Lyapunov exponents with multiplicity.
double entropy_function(const ZdAction& a, const std::vector<long>& nvec);
double entropy_function(const LyapunovData& lyap, const std::vector<long>& nvec);

// Weyl chambers for d = 2: open angular sectors cut out by the lines
// chi_k = 0, with the linear entropy formula on each chamber.
struct WeylChamber {
  double from_angle, to_angle;       // sector (from, to) in [0, 2pi)
  std::vector<int> positive_rows;    // rows with chi_k > 0 on the sector
  double coeff_n1, coeff_n2;         // h(n) = c1 n1 + c2 n2 on the sector
};
struct WeylChamberSet {
  std::vector<WeylChamber> chambers;
  std::vector<std::vector<double>> lines;  // distinct exponent lines (a, b)
  bool degenerate;  // fewer distinct lines than exponent rows
};
WeylChamberSet weyl_chambers(const ZdAction& a);

enum class SearchVerdict { yes, no, not_verified };

// Condition (R): a Z^2 subgroup of ergodic automorphisms. The witness pair
// is certified: within each Galois block the 2-column exponent restriction
// has full rank, any near-kernel direction is reconstructed rationally and
// refuted by the exact ergodicity test.
struct ConditionRResult {
  SearchVerdict verdict;
  std::optional<std::pair<std::vector<long>, std::vector<long>>> witness;
  std::string note;
};
ConditionRResult satisfies_R(const ZdAction& a, int box = 3);

struct IrreducibilityVerdict {
  SearchVerdict verdict;  // yes / no / inconclusive
  std::optional<std::vector<long>> witness;       // rho^w irreducible
  std::optional<IntMatrix> invariant_subspace;    // rows span it, saturated
  std::string note;
};
IrreducibilityVerdict is_irreducible(const ZdAction& a, int box = 3);

// Cartan test: d == n-1, n >= 3, all box-2 elements ergodic with real
// eigenvalues, and the full-group Lyapunov kernel condition.
struct CartanResult {
  bool cartan;
  std::string reason;
};
CartanResult is_cartan(const ZdAction& a);

// Joint fixed points Fix(alpha) = {x : x (A_i - I) in Z^n for all i}.
struct FixedPointData {
  Int order;
  std::vector<std::vector<Rat>> representatives;  // in [0,1)^n, sorted
  std::vector<Int> invariant_factors;             // divisors > 1
};
FixedPointData fixed_points(const ZdAction& a);

}  // namespace toralg

#endif
