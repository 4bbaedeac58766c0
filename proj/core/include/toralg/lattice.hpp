#ifndef TORALG_LATTICE_HPP
#define TORALG_LATTICE_HPP

#include <vector>

#include "toralg/matrix.hpp"

namespace toralg {

// Quadratic form value x * gram * x^T.
Rat form_value(const RatMatrix& gram, const std::vector<Rat>& x);

// LLL with delta = 3/4 in exact rational arithmetic. `basis` rows must be
// independent; `gram` is a symmetric positive-definite form on the ambient
// coordinates. Returns a reduced basis of the same lattice. For rank <= 4
// an exhaustive search then guarantees the first row is a shortest nonzero
// vector of the lattice under the form.
RatMatrix lattice_reduce(const RatMatrix& basis, const RatMatrix& gram);

// All nonzero lattice vectors v (up to sign, first nonzero coordinate
// positive in basis coordinates) with form_value(gram, v) <= radius.
// Exact: float pruning is padded and every candidate is checked in exact
// arithmetic. Returns ambient-coordinate vectors.
std::vector<std::vector<Rat>> enumerate_short_vectors(const RatMatrix& basis,
                                                      const RatMatrix& gram,
                                                      const Rat& radius);

}  // namespace toralg

#endif
