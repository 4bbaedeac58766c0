#ifndef TORALG_CENTRALIZER_HPP
#define TORALG_CENTRALIZER_HPP

#include <optional>
#include <string>
#include <vector>

#include "toralg/action.hpp"
#include "toralg/matrix.hpp"
#include "toralg/number_field.hpp"

namespace toralg {

// Saturated Z-basis of {X in M(n,Z) : X A_i = A_i X for all i}.
struct CommutantBasis {
  std::vector<IntMatrix> basis;
  int rank() const { return static_cast<int>(basis.size()); }
  bool is_abelian() const;  // pairwise commuting basis elements
};
CommutantBasis commutant_z_basis(const ZdAction& a);

// Coordinates of a commuting matrix x as an integer combination of the
// commutant basis, when it is one.
std::optional<std::vector<Int>> commutant_coordinates(const CommutantBasis& c,
                                                      const IntMatrix& x);

// gamma: p(M) -> p(lambda) on the commutant of an irreducible action, for a
// witness matrix M in rho(Z^d) with charpoly(M) == field.poly(). The image
// of the commutant basis is a Z-basis of an order Z[lambda] <= O <= O_K.
struct GammaMapResult {
  std::vector<NFElement> order_basis;  // gamma of each commutant basis elt
  RatMatrix order_rows;                // their power-basis coordinates
  Rat index_over_power_basis;          // [gamma(C) : Z[lambda]]
};
GammaMapResult gamma_map(const ZdAction& a, const NumberField& field,
                         const IntMatrix& witness,
                         const CommutantBasis& commutant);
// gamma of a single commuting matrix.
NFElement gamma_of_matrix(const NumberField& field, const IntMatrix& witness,
                          const IntMatrix& x);

// All finite-order elements of the commutant. Certified complete without a
// search when the action is irreducible, hyperbolic and totally real (then
// only +-I can have finite order); otherwise an exhaustive coefficient-box
// enumeration with exact order verification.
struct TorsionResult {
  std::vector<IntMatrix> elements;  // sorted
  bool certified_complete;
  std::string note;
};
TorsionResult torsion_elements(const ZdAction& a, const CommutantBasis& c,
                               int box = 4);

// All X = sum c_i B_i with |c_i| <= box and det X = +-1, deduplicated
// modulo +-I (first nonzero entry positive), sorted.
std::vector<IntMatrix> unit_search(const CommutantBasis& c, int box);

// |det log-embedding(sub)| / |det log-embedding(super)| rounded to the
// nearest integer; both lists must have size = unit rank and be
// multiplicatively independent.
struct LogLatticeIndex {
  Int index;
  double residual;
};
LogLatticeIndex log_lattice_index(const std::vector<NFElement>& sub,
                                  const std::vector<NFElement>& super);

enum class MaximalityVerdict { maximal, not_maximal, not_verified };
struct MaximalityResult {
  MaximalityVerdict verdict;
  int box;
  std::optional<NFElement> witness;  // unit outside the group of the action
  std::string note;
};
// Maximal iff torsion(Z(alpha)) = {+-I} and no unit of the commutant order
// lies outside +-<gamma(A_1), ..., gamma(A_d)>. The search is bounded by
// `box` on commutant coefficients; claimed fundamental units that lie in
// the order are tested first and give exact witnesses.
MaximalityResult is_maximal_cartan(
    const ZdAction& a, const NumberField& field, const IntMatrix& witness,
    const std::vector<NFElement>& fundamental_units = {}, int box = 50);

// Affine-centralizer structure: Z_Aff(alpha) = Z(alpha) x Fix(alpha).
struct AffineReport {
  Int fix_order;
  std::vector<Int> fix_factors;    // invariant factors > 1
  Int zalpha_torsion_order;        // |torsion(Z(alpha))|
  Int unit_index;                  // [Z(alpha) : alpha] / torsion = free part
  Int index_zaff;                  // [Z_Aff(alpha) : alpha]
  Int zaff_torsion_order;          // |torsion(Z_Aff)| = torsion * fix
  int free_rank;                   // rank of the free part of Z(alpha)
  std::string abstract_type;       // e.g. "Z^2 x Z/2 x Z/2"
};
AffineReport affine_report(const ZdAction& a, const NumberField& field,
                           const IntMatrix& witness,
                           const std::vector<NFElement>& fundamental_units = {},
                           int box = 12);

// Integer matrix in the commutant whose gamma-image is the given element
// of the commutant order (inverse of gamma on the order).
IntMatrix mult_matrix_via_order(const ZdAction& a, const NumberField& field,
                                const IntMatrix& witness, const NFElement& u,
                                const CommutantBasis& c);

// Exponent reconstruction of a unit over the subgroup generated by the
// action's units: u = +- prod gamma(A_i)^(e_i) with rational e_i = p_i / q.
// Exactly verified (u^q == +- prod A_i^(p_i) on the matrix side).
struct UnitExponents {
  bool resolved;
  Int q;                  // common denominator, 1 when u is in the group
  std::vector<Int> p;     // numerators
  bool in_group;          // q == 1 and the sign works out
};
UnitExponents unit_over_generators(const ZdAction& a, const NumberField& field,
                                   const IntMatrix& witness,
                                   const IntMatrix& unit_matrix);

}  // namespace toralg

#endif
