#ifndef TORALG_POLYNOMIAL_HPP
#define TORALG_POLYNOMIAL_HPP

#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "toralg/matrix.hpp"
#include "toralg/numeric.hpp"

namespace toralg {

// Univariate polynomial, ascending coefficients, trailing zeros stripped.
struct IntPoly {
  std::vector<Int> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) {
    normalize();
  }
  static IntPoly x();
  static IntPoly constant(const Int& a);

  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const Int& lead() const { return c.back(); }
  bool monic() const { return !c.empty() && c.back() == 1; }

  Int operator()(const Int& x) const;  // Horner
  std::complex<double> operator()(std::complex<double> x) const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.c == b.c;
  }
};

struct RatPoly {
  std::vector<Rat> c;

  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) {
    normalize();
  }
  RatPoly(const IntPoly& p);

  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const Rat& lead() const { return c.back(); }

  Rat operator()(const Rat& x) const;

  friend bool operator==(const RatPoly& a, const RatPoly& b) {
    return a.c == b.c;
  }
};

IntPoly add(const IntPoly& p, const IntPoly& q);
IntPoly sub(const IntPoly& p, const IntPoly& q);
IntPoly mul(const IntPoly& p, const IntPoly& q);
IntPoly neg(const IntPoly& p);
// Exact division; throws domain_error if q does not divide p over Z.
IntPoly exact_div(const IntPoly& p, const IntPoly& q);
IntPoly derivative(const IntPoly& p);
Int content(const IntPoly& p);
IntPoly primitive_part(const IntPoly& p);

RatPoly add(const RatPoly& p, const RatPoly& q);
RatPoly sub(const RatPoly& p, const RatPoly& q);
RatPoly mul(const RatPoly& p, const RatPoly& q);
// Euclidean division over Q; q must be nonzero.
struct RatPolyDivMod {
  RatPoly quot, rem;
};
RatPolyDivMod divmod(const RatPoly& p, const RatPoly& q);
RatPoly poly_mod(const RatPoly& p, const RatPoly& q);
// Monic gcd over Q; gcd(0,0) = 0.
RatPoly poly_gcd(const RatPoly& p, const RatPoly& q);
// g = a*p + b*q with g the monic gcd.
struct RatPolyXgcd {
  RatPoly g, a, b;
};
RatPolyXgcd poly_xgcd(const RatPoly& p, const RatPoly& q);

// Integer gcd through the rational one: primitive part of gcd over Q times
// gcd of contents.
IntPoly poly_gcd(const IntPoly& p, const IntPoly& q);

// k-th cyclotomic polynomial, by recursive division of x^k - 1.
IntPoly cyclotomic(unsigned k);

// Companion matrix; last row carries negated coefficients, so that
// charpoly(companion(p)) == p. p must be monic of degree >= 1.
IntMatrix companion(const IntPoly& p);

// Exact p(m) over Q.
RatMatrix eval_poly_at_matrix(const RatPoly& p, const IntMatrix& m);
RatMatrix eval_poly_at_matrix(const RatPoly& p, const RatMatrix& m);

struct IrreducibilityResult {
  bool irreducible;
  std::string certificate;        // how the verdict was established
  std::optional<IntPoly> factor;  // a proper factor when reducible
};
// Decides irreducibility over Q for deg >= 1 (deg 0 is a domain error).
// Certificate routes: rational root, mod-p irreducibility witness,
// exhaustive Mignotte-bounded factor search.
IrreducibilityResult is_irreducible_q(const IntPoly& p);

// Full factorization over Q into primitive irreducible integer polynomials
// (content dropped), each with multiplicity, deterministically ordered.
struct IntPolyFactor {
  IntPoly poly;
  int multiplicity;
};
std::vector<IntPolyFactor> factor_q(const IntPoly& p);

// Yun squarefree decomposition: p = content * prod_i part[i]^(i+1).
std::vector<IntPoly> squarefree_decomposition(const IntPoly& p);

// Number of distinct real roots, by Sturm chains on the squarefree part.
int count_real_roots(const IntPoly& p);

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

}  // namespace toralg

#endif
