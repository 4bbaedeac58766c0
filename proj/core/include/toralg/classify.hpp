#ifndef TORALG_CLASSIFY_HPP
#define TORALG_CLASSIFY_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toralg/action.hpp"
#include "toralg/centralizer.hpp"
#include "toralg/matrix.hpp"
#include "toralg/number_field.hpp"

namespace toralg {

// Field-side data accompanying an action: the field, the action's units,
// named lattices (power_basis always present), optional fundamental units
// and the lattice the action was built on. Owns the field.
struct ActionFieldData {
  std::shared_ptr<const NumberField> field;
  std::vector<NFElement> units;
  std::map<std::string, RatMatrix> lattices;  // name -> basis rows
  std::vector<NFElement> fundamental_units;
  std::string lattice_name;
  bool ok_is_power_basis() const;  // an "ok_basis" equal to the power basis
};

// ---- conjugacy ------------------------------------------------------------

struct ConjugacyQResult {
  SearchVerdict verdict;
  std::optional<IntMatrix> conjugator;  // primitive integer scaling
  std::string note;
};
// Solves the joint intertwining system {V A_i = B_i V}. For an irreducible
// first action any nonzero solution is invertible; otherwise integer
// combinations of the solution basis are searched for a nonzero determinant.
ConjugacyQResult conjugate_over_q(const ZdAction& a, const ZdAction& b);

struct ConjugacyZResult {
  SearchVerdict verdict;
  std::optional<IntMatrix> conjugator;
  int bound;
  std::string obstruction;
};
// Searches unimodular integer combinations of the intertwiner basis.
// An exact square root of one side turns a mod-2 non-square of the other
// into a definitive obstruction.
ConjugacyZResult conjugate_over_z(
    const ZdAction& a, const ZdAction& b, int bound = 10,
    const std::optional<IntMatrix>& square_root_of_b = std::nullopt);

// Exhaustive test over F_2 (2^(n^2) candidates, n <= 4).
bool is_square_mod2(const IntMatrix& m);

// ---- cyclicity ------------------------------------------------------------

enum class CyclicityVerdict { cyclic, non_cyclic, not_verified };
struct CyclicityResult {
  CyclicityVerdict verdict;
  std::optional<std::vector<Int>> witness;
  int obstruction_prime = 0;
  std::vector<Int> form_coefficients;  // 10 coefficients when computed
  std::string note;
};
// Three stages: orbit-lattice witness search over |v| <= vbox; for n = 3
// with the acting ring generated by one matrix, the mod-p vanishing of the
// orbit form certifies non-cyclicity; otherwise not verified.
CyclicityResult cyclicity(const ZdAction& a, int vbox = 5);

// det(rows m, mA, mA^2) as a cubic form; coefficients in the monomial order
// m1^3, m1^2 m2, m1^2 m3, m1 m2^2, m1 m2 m3, m1 m3^2, m2^3, m2^2 m3,
// m2 m3^2, m3^3.
std::vector<Int> orbit_form_coefficients(const IntMatrix& a);

// Smallest sublattice containing v closed under all generators and their
// inverses, as a canonical HNF basis.
IntMatrix orbit_lattice(const ZdAction& a, const std::vector<Int>& v);

// ---- ideals ---------------------------------------------------------------

struct IdealLattice {
  std::shared_ptr<const NumberField> field;
  RatMatrix basis_rows;  // canonical HNF power-basis coordinates
  Rat norm;              // covolume relative to the power basis
};

// Latimer-MacDuffee: the ideal of the column eigenvector of m for the
// eigenvalue lambda, entries scaled into Z[lambda]. charpoly(m) must equal
// the field polynomial.
IdealLattice lm_ideal_of_matrix(const IntMatrix& m,
                                std::shared_ptr<const NumberField> field);

IdealLattice ideal_from_rows(std::shared_ptr<const NumberField> field,
                             const RatMatrix& rows);

enum class IdealEquivalence { equivalent, inequivalent, not_verified };
struct IdealEquivalenceResult {
  IdealEquivalence verdict;
  std::optional<NFElement> multiplier;
  std::string note;
};
// Decides whether x I = J has a solution. The multiplier, if any, can be
// unit-reduced into a fundamental cell of the log lattice of `units`, which
// makes the bounded short-vector enumeration exhaustive and inequivalence a
// certificate. The units must preserve both lattices.
IdealEquivalenceResult ideal_equivalent(const IdealLattice& i,
                                        const IdealLattice& j,
                                        const std::vector<NFElement>& units);

// ---- centralizer transitivity ----------------------------------------------

enum class TransitivityVerdict { transitive, not_transitive, not_verified };
struct TransitivityResult {
  TransitivityVerdict verdict;
  std::optional<std::vector<Int>> witness;
  std::string note;
};
// Transitive when the commutant orbit of some small vector is all of Z^n.
// With field data, non-transitivity is certified by the orbit module being
// a non-principal class over the commutant order.
TransitivityResult centralizer_transitive(const ZdAction& a,
                                          const ActionFieldData* fd = nullptr,
                                          int vbox = 3);

// ---- time changes -----------------------------------------------------------

struct TimeChangeResult {
  SearchVerdict verdict;
  int galois_index = -1;            // index of the root permutation used
  std::optional<IntMatrix> change;  // C in GL(d, Z)
  bool exact = false;               // identity embedding, verified exactly
  std::string note;
};
// Tests whether the unit tuples agree up to a Galois embedding and a
// GL(d,Z) change of the acting group. Embeddings are realized as
// permutations of the root list; the identity case is verified exactly in
// the field, the others by minimal-polynomial equality plus the numeric
// pairing.
TimeChangeResult time_change_equivalent_q(const ZdAction& a,
                                          const ZdAction& b,
                                          const ActionFieldData& fa,
                                          const ActionFieldData& fb);

// ---- comparison -------------------------------------------------------------

struct ComparisonReport {
  int n_a, n_b, d;
  bool entropy_equal;
  double entropy_max_deviation;
  ConjugacyQResult rational;
  ConjugacyZResult integral;
  TimeChangeResult time_change;
  CyclicityResult cyclicity_a, cyclicity_b;
  Int fix_a, fix_b;
  MaximalityResult maximal_a, maximal_b;
  bool maximality_available = false;
  int commutant_rank_a, commutant_rank_b;
  bool commutant_abelian_a, commutant_abelian_b;
  IdealEquivalenceResult ideal_classes;
  bool ideal_available = false;
  std::string distinguishing_invariant;
  std::string summary;
};
ComparisonReport compare(const ZdAction& a, const ZdAction& b,
                         const ActionFieldData* fa = nullptr,
                         const ActionFieldData* fb = nullptr);

}  // namespace toralg

#endif
