#ifndef TORALG_EXACT_LINALG_HPP
#define TORALG_EXACT_LINALG_HPP

#include <optional>
#include <vector>

#include "toralg/matrix.hpp"
#include "toralg/polynomial.hpp"

namespace toralg {

// Exact determinant, fraction-free Bareiss elimination.
Int det(const IntMatrix& m);
Rat det(const RatMatrix& m);

// Monic characteristic polynomial det(xI - m), ascending coefficients.
IntPoly charpoly(const IntMatrix& m);

// Unique row-style Hermite normal form: row echelon, positive pivots,
// entries above each pivot reduced into [0, pivot), zero rows last.
IntMatrix hnf(const IntMatrix& m);

struct HnfResult {
  IntMatrix h;  // h = u * m
  IntMatrix u;  // unimodular
  std::size_t rank;
};
HnfResult hnf_with_transform(const IntMatrix& m);

struct SnfResult {
  std::vector<Int> d;  // elementary divisors, d[i] | d[i+1], non-negative
  IntMatrix u, v;      // unimodular, u * m * v = diag(d)
};
SnfResult snf(const IntMatrix& m);

// Exact solution of a * x = b (b may have several columns). `kernel`
// rows form a basis of the right null space of a.
struct LinearSolution {
  std::optional<RatMatrix> particular;  // cols(a) x cols(b)
  RatMatrix kernel;                     // each row a null vector of a
};
LinearSolution solve_rational(const RatMatrix& a, const RatMatrix& b);

std::size_t rank(const RatMatrix& m);

// Inverse over Q; throws domain_error if singular.
RatMatrix inverse(const RatMatrix& m);
// Integer inverse of a matrix with det = +-1.
IntMatrix inverse_unimodular(const IntMatrix& m);

// Rows span {x in Z^cols : x * m = 0}; the basis is saturated (any integer
// solution is a Z-combination).
IntMatrix left_kernel(const IntMatrix& m);

// Saturation of the row lattice: basis of span_Q(rows) intersected with Z^n.
IntMatrix saturate_rows(const IntMatrix& m);

// Row lattice helpers (lattices given by basis rows, full column count).
bool lattice_contains(const IntMatrix& basis, const std::vector<Int>& v);
bool same_row_lattice(const IntMatrix& a, const IntMatrix& b);
// Index [Z^n : L] for a full-rank row lattice; throws if rank deficient.
Int lattice_index_in_zn(const IntMatrix& basis);
// Intersection of two row lattices over the same ambient Z^n.
IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b);

// Scale by the lcm of entry denominators.
IntMatrix clear_denominators(const RatMatrix& m);
// Scale by lcm of denominators, then divide by the gcd of all entries.
IntMatrix primitive_integer_matrix(const RatMatrix& m, Rat* scale = nullptr);

}  // namespace toralg

#endif
